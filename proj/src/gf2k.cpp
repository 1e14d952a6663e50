#include "icayley/gf2k.hpp"

#include "icayley/errors.hpp"

namespace icayley {

namespace {

int poly_degree(std::uint32_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

// remainder of a mod b over GF(2)
std::uint32_t poly_mod(std::uint64_t a, std::uint32_t b) {
    int db = poly_degree(b);
    while (true) {
        int da = -1;
        for (int i = 63; i >= 0; --i)
            if (a >> i & 1) {
                da = i;
                break;
            }
        if (da < db) return static_cast<std::uint32_t>(a);
        a ^= static_cast<std::uint64_t>(b) << (da - db);
    }
}

}  // namespace

bool Gf2k::is_irreducible(std::uint32_t poly, int k) {
    if (poly_degree(poly) != k) return false;
    if (k == 1) return true;
    if ((poly & 1) == 0) return false;  // divisible by x
    // trial division by every polynomial of degree 1..k/2
    for (int d = 1; 2 * d <= k; ++d)
        for (std::uint32_t q = 1u << d; q < (2u << d); ++q)
            if (poly_mod(poly, q) == 0) return false;
    return true;
}

std::uint32_t Gf2k::default_modulus(int k) {
    if (k == 6) return 0b1011011;        // x^6 + x^4 + x^3 + x + 1
    if (k == 10) return 0b10000001001;   // x^10 + x^3 + 1
    for (std::uint32_t p = (1u << k) | 1u; p < (2u << k); p += 2)
        if (is_irreducible(p, k)) return p;
    throw BadConstruction("no irreducible polynomial found");
}

Gf2k::Gf2k(int k) : Gf2k(k, default_modulus(k)) {}

Gf2k::Gf2k(int k, std::uint32_t modulus) : k_(k), mod_(modulus) {
    if (k < 1 || k > 16) throw BadConstruction("field degree must be in 1..16");
    if (!is_irreducible(modulus, k)) throw BadConstruction("field modulus is reducible");
}

std::uint32_t Gf2k::mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return poly_mod(acc, mod_);
}

std::uint32_t Gf2k::pow(std::uint32_t a, unsigned long long e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t Gf2k::inv(std::uint32_t a) const {
    if (a == 0) throw BadConstruction("zero has no inverse");
    return pow(a, (1ull << k_) - 2);  // a^(2^k - 2)
}

std::uint32_t Gf2k::frob(std::uint32_t a, int times) const {
    for (int i = 0; i < times; ++i) a = mul(a, a);
    return a;
}

}  // namespace icayley
