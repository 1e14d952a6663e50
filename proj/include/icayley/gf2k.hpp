#pragma once

#include <cstdint>

namespace icayley {

// Binary field GF(2^k) on bitmask representatives, 1 <= k <= 16.
// The modulus polynomial is given with its leading x^k bit set and is
// verified irreducible on construction.
class Gf2k {
public:
    explicit Gf2k(int k);
    Gf2k(int k, std::uint32_t modulus);

    int k() const { return k_; }
    std::uint32_t size() const { return 1u << k_; }
    std::uint32_t modulus() const { return mod_; }

    static std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, unsigned long long e) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t frob(std::uint32_t a, int times) const;  // a^(2^times)

    static std::uint32_t default_modulus(int k);
    static bool is_irreducible(std::uint32_t poly, int k);

private:
    int k_;
    std::uint32_t mod_;
};

}  // namespace icayley
