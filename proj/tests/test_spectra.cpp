#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "icayley/analysis.hpp"
#include "icayley/constructors.hpp"
#include "icayley/errors.hpp"
#include "icayley/group.hpp"
#include "icayley/spectra.hpp"
#include "oracles.hpp"

using namespace icayley;

namespace {

// Independent nullity oracle: plain Gaussian elimination over exact rationals.
int nullity_rational(std::vector<std::vector<mpq_class>> a) {
    int n = (int)a.size();
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int i = rank + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            mpq_class f = a[i][col] / a[rank][col];
            for (int j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return n - rank;
}

int nullity_rational_ll(const std::vector<std::vector<long long>>& m) {
    std::vector<std::vector<mpq_class>> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long long v : m[i]) a[i].emplace_back((long)v);
    return nullity_rational(std::move(a));
}

// Eigenvalues of a cyclic-group graph in closed form: for vertex set Z_n and
// connection set X, lambda_j = sum_{x in X} cos(2 pi j x / n).
std::vector<double> circulant_eigenvalues(int n, const ConnectionSet& x) {
    std::vector<double> out;
    const double tau = 8.0 * std::atan(1.0);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (Elem e : x.members) s += std::cos(tau * j * e / n);
        out.push_back(s);
    }
    return out;
}

ConnectionSet cs(Elem a, Elem b, Elem c) { return ConnectionSet{{a, b, c}}; }

// The unique all-involution connection set of a group with exactly three
// involutions.
ConnectionSet involution_triple(const FiniteGroup& g) {
    std::vector<Elem> inv;
    for (Elem e = 1; e < g.size(); ++e)
        if (g.order(e) == 2) inv.push_back(e);
    REQUIRE(inv.size() == 3);
    return cs(inv[0], inv[1], inv[2]);
}

long long direct_count(const FiniteGroup& g) {
    long long i = 0, p = 0;
    for (Elem e = 1; e < g.size(); ++e) {
        if (g.order(e) == 2) ++i;
        else if (e < g.inv(e)) ++p;
    }
    return i * (i - 1) * (i - 2) / 6 + i * p;
}

}  // namespace

TEST_CASE("connection set enumeration: counts, order, validity") {
    CHECK(enumerate_3_subsets(cyclic(1)).empty());
    CHECK(enumerate_3_subsets(cyclic(2)).empty());
    CHECK(enumerate_3_subsets(cyclic(3)).empty());
    CHECK(enumerate_3_subsets(elem_abelian(2, 2)).size() == 1);
    CHECK(enumerate_3_subsets(dihedral(3)).size() == 4);
    CHECK(enumerate_3_subsets(builtin_group("Q8")).size() == 3);
    // 9 involutions and 7 inverse pairs: C(9,3) + 9*7
    CHECK(enumerate_3_subsets(builtin_group("S4")).size() == 147);

    for (const auto& g : {cyclic(8), cyclic(12), dihedral(4), dihedral(6), builtin_group("A4"),
                          family_a(1, 0), elem_abelian(2, 3)}) {
        auto sets = enumerate_3_subsets(g);
        CHECK((long long)sets.size() == direct_count(g));
        // strict lexicographic order, hence no duplicates
        for (std::size_t i = 1; i < sets.size(); ++i) CHECK(sets[i - 1].members < sets[i].members);
        for (const auto& x : sets) {
            CHECK(x.members[0] < x.members[1]);
            CHECK(x.members[1] < x.members[2]);
            CHECK_NOTHROW(validate_connection_set(g, x));
        }
    }

    auto z8 = enumerate_3_subsets(cyclic(8));
    REQUIRE(z8.size() == 3);  // one involution, three inverse pairs
    CHECK(z8.front() == cs(1, 4, 7));  // lexicographically first
    CHECK(z8.back() == cs(3, 4, 5));
}

TEST_CASE("connection set validation rejects malformed sets") {
    auto z8 = cyclic(8);
    CHECK_THROWS_AS(validate_connection_set(z8, cs(0, 1, 7)), PreconditionViolated);  // identity
    CHECK_THROWS_AS(validate_connection_set(z8, cs(1, 2, 7)), PreconditionViolated);  // 2^-1 = 6 missing
    CHECK_THROWS_AS(validate_connection_set(z8, cs(4, 4, 4)), PreconditionViolated);  // duplicates
    CHECK_THROWS_AS(validate_connection_set(z8, cs(1, 7, 9)), PreconditionViolated);  // out of range
    CHECK_NOTHROW(validate_connection_set(z8, cs(2, 4, 6)));
}

TEST_CASE("adjacency matrix: symmetry, valency, translation invariance") {
    std::mt19937_64 rng(0xC41E9);
    for (const auto& g : {cyclic(6), cyclic(8), dihedral(3), dihedral(4), builtin_group("Q8")}) {
        for (const auto& x : enumerate_3_subsets(g)) {
            auto a = cayley_adjacency(g, x);
            REQUIRE((int)a.size() == g.size());
            for (int u = 0; u < g.size(); ++u) {
                REQUIRE((int)a[u].size() == g.size());
                int deg = 0;
                for (int v = 0; v < g.size(); ++v) {
                    CHECK(a[u][v] == a[v][u]);
                    deg += a[u][v];
                }
                CHECK(deg == 3);
                CHECK(a[u][u] == 0);
            }
            // right translation is a graph automorphism: edges {g, xg} are
            // preserved by v -> v * t
            for (int trial = 0; trial < 5; ++trial) {
                Elem t = (Elem)(rng() % g.size());
                for (int u = 0; u < g.size(); ++u)
                    for (int v = 0; v < g.size(); ++v)
                        CHECK(a[g.mul(u, t)][g.mul(v, t)] == a[u][v]);
            }
        }
    }
}

TEST_CASE("adjacency spot check: complete graph on four vertices") {
    auto a = cayley_adjacency(elem_abelian(2, 2), cs(1, 2, 3));
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) CHECK(a[u][v] == (u == v ? 0 : 1));
}

TEST_CASE("integer nullity: frozen values") {
    using M = std::vector<std::vector<long long>>;
    CHECK(integer_nullity(M{}) == 0);
    CHECK(integer_nullity(M{{0}}) == 1);
    CHECK(integer_nullity(M{{5}}) == 0);
    CHECK(integer_nullity(M{{1, 2}, {2, 4}}) == 1);
    CHECK(integer_nullity(M{{1, 2}, {2, 5}}) == 0);
    CHECK(integer_nullity(M{{0, 0}, {0, 0}}) == 2);
    // all-ones 4x4 (adjacency of K4 plus identity) has rank 1
    CHECK(integer_nullity(M(4, std::vector<long long>(4, 1))) == 3);
    M ident(5, std::vector<long long>(5, 0));
    for (int i = 0; i < 5; ++i) ident[i][i] = 1;
    CHECK(integer_nullity(ident) == 0);
    // first column zero: elimination must move past it
    CHECK(integer_nullity(M{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}) == 1);
}

TEST_CASE("integer nullity agrees with rational elimination on random matrices") {
    std::mt19937_64 rng(20260815);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + (int)(rng() % 12);
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
        for (auto& row : m)
            for (auto& v : row) v = entry(rng);
        CHECK(integer_nullity(m) == nullity_rational_ll(m));
    }
    // rank-deficient by construction: products of thin factors
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + (int)(rng() % 9);
        int r = (int)(rng() % n);
        std::vector<std::vector<long long>> b(n, std::vector<long long>(r)),
            c(r, std::vector<long long>(n)), m(n, std::vector<long long>(n, 0));
        for (auto& row : b)
            for (auto& v : row) v = entry(rng);
        for (auto& row : c)
            for (auto& v : row) v = entry(rng);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < r; ++k) m[i][j] += b[i][k] * c[k][j];
        int got = integer_nullity(m);
        CHECK(got == nullity_rational_ll(m));
        CHECK(got >= n - r);
    }
}

TEST_CASE("spectrum: frozen multiplicities for small graphs") {
    // complete graph K4 from the Klein four-group
    auto k4 = integral_spectrum_3valent(elem_abelian(2, 2), cs(1, 2, 3));
    CHECK(k4.integral);
    CHECK(k4.n == 4);
    CHECK(k4.nullity_sum == 4);
    CHECK(k4.multiplicity(3) == 1);
    CHECK(k4.multiplicity(-1) == 3);
    CHECK(k4.multiplicity(0) == 0);
    CHECK(k4.mult == std::array<int, 7>{0, 0, 3, 0, 0, 0, 1});
    CHECK(k4.to_string() == "spectrum n=4 X=1,2,3 m[-3..3]=0,0,3,0,0,0,1 integral=true");

    // complete bipartite K3,3 from the three reflections of the order-6
    // dihedral group
    auto k33 = integral_spectrum_3valent(dihedral(3), involution_triple(dihedral(3)));
    CHECK(k33.integral);
    CHECK(k33.multiplicity(3) == 1);
    CHECK(k33.multiplicity(0) == 4);
    CHECK(k33.multiplicity(-3) == 1);
    CHECK(k33.nullity_sum == 6);

    // ... and the same graph as a cyclic-group graph on Z6
    auto k33z = integral_spectrum_3valent(cyclic(6), cs(1, 3, 5));
    CHECK(k33z.mult == std::array<int, 7>{1, 0, 0, 4, 0, 0, 1});

    // triangular prism from Z6: spectrum 3, 1, 0, 0, -2, -2
    auto prism = integral_spectrum_3valent(cyclic(6), cs(2, 3, 4));
    CHECK(prism.integral);
    CHECK(prism.mult == std::array<int, 7>{0, 2, 0, 2, 1, 0, 1});

    // K4 again, from Z4
    auto k4z = integral_spectrum_3valent(cyclic(4), cs(1, 2, 3));
    CHECK(k4z.mult == std::array<int, 7>{0, 0, 3, 0, 0, 0, 1});

    // disconnected: two copies of K4 from the even/odd cosets in Z8
    auto two_k4 = integral_spectrum_3valent(cyclic(8), cs(2, 4, 6));
    CHECK(two_k4.integral);
    CHECK(two_k4.mult == std::array<int, 7>{0, 0, 6, 0, 0, 0, 2});

    // Moebius-Kantor-style circulant on Z8: eigenvalues include -1 + sqrt 2
    auto mk = integral_spectrum_3valent(cyclic(8), cs(1, 4, 7));
    CHECK(!mk.integral);
    CHECK(mk.nullity_sum == 4);
    CHECK(mk.multiplicity(3) == 1);
    CHECK(mk.multiplicity(1) == 2);
    CHECK(mk.multiplicity(-1) == 1);

    CHECK(!integral_spectrum_3valent(cyclic(8), cs(3, 4, 5)).integral);
}

TEST_CASE("spectrum: trace identities and eigenvalue-count bound") {
    for (const auto& g : {cyclic(6), cyclic(8), cyclic(12), dihedral(3), dihedral(4), dihedral(6),
                          builtin_group("Q8"), builtin_group("A4"), elem_abelian(2, 3)}) {
        for (const auto& x : enumerate_3_subsets(g)) {
            auto rep = integral_spectrum_3valent(g, x);
            CHECK(rep.set == x);
            long sum = 0, tr1 = 0, tr2 = 0;
            for (int k = -3; k <= 3; ++k) {
                CHECK(rep.multiplicity(k) >= 0);
                sum += rep.multiplicity(k);
                tr1 += (long)k * rep.multiplicity(k);
                tr2 += (long)k * k * rep.multiplicity(k);
            }
            CHECK(sum == rep.nullity_sum);
            CHECK(sum <= g.size());
            CHECK(rep.integral == (sum == g.size()));
            CHECK(rep.multiplicity(3) >= 1);  // 3-regular graphs always have eigenvalue 3
            if (rep.integral) {
                CHECK(tr1 == 0);               // trace of A
                CHECK(tr2 == 3 * g.size());    // trace of A^2
            }
        }
    }
}

TEST_CASE("spectrum matches the closed-form eigenvalues of cyclic-group graphs") {
    for (int n : {4, 6, 8, 10, 12, 16}) {
        auto g = cyclic(n);
        for (const auto& x : enumerate_3_subsets(g)) {
            auto rep = integral_spectrum_3valent(g, x);
            auto eig = circulant_eigenvalues(n, x);
            bool all_integer = true;
            std::array<int, 7> counted{};
            for (double lam : eig) {
                double nearest = std::round(lam);
                if (std::fabs(lam - nearest) < 1e-9)
                    ++counted[(std::size_t)((int)nearest + 3)];
                else
                    all_integer = false;
            }
            CHECK(rep.integral == all_integer);
            for (int k = -3; k <= 3; ++k) CHECK(rep.multiplicity(k) == counted[(std::size_t)(k + 3)]);
        }
    }
}

TEST_CASE("spectral class membership: positives") {
    auto d3 = in_a3_spectral(dihedral(3));
    CHECK(d3.in_class);
    CHECK(d3.sets_checked == 4);
    CHECK(!d3.witness.has_value());

    auto q8 = in_a3_spectral(builtin_group("Q8"));
    CHECK(q8.in_class);
    CHECK(q8.sets_checked == 3);

    CHECK(in_a3_spectral(elem_abelian(2, 2)).in_class);
    CHECK(in_a3_spectral(builtin_group("A4")).in_class);
    CHECK(in_a3_spectral(family_a(1, 0)).in_class);  // dicyclic of order 12
}

TEST_CASE("spectral class membership: negatives with witnesses") {
    auto z8 = in_a3_spectral(cyclic(8));
    CHECK(!z8.in_class);
    REQUIRE(z8.witness.has_value());
    CHECK(*z8.witness == cs(1, 4, 7));  // first set in lexicographic order fails
    CHECK(!z8.reason.empty());

    for (const auto& g : {dihedral(4), dihedral(6), builtin_group("S4"), cyclic(16)}) {
        auto rep = in_a3_spectral(g);
        CHECK(!rep.in_class);
        CHECK(rep.witness.has_value());
        // the witness really is non-integral
        CHECK(!integral_spectrum_3valent(g, *rep.witness).integral);
    }

    // no valency-3 connection set at all
    for (const auto& g : {cyclic(2), cyclic(3), cyclic(5)}) {
        auto rep = in_a3_spectral(g);
        CHECK(!rep.in_class);
        CHECK(rep.sets_checked == 0);
        CHECK(!rep.witness.has_value());
        CHECK(!rep.reason.empty());
    }
}

TEST_CASE("spectral and structural classifications agree on a mixed corpus") {
    std::vector<FiniteGroup> corpus;
    corpus.push_back(cyclic(2));
    corpus.push_back(cyclic(4));
    corpus.push_back(cyclic(6));
    corpus.push_back(cyclic(8));
    corpus.push_back(cyclic(12));
    corpus.push_back(cyclic(16));
    corpus.push_back(elem_abelian(2, 2));
    corpus.push_back(elem_abelian(2, 3));
    corpus.push_back(elem_abelian(2, 4));
    corpus.push_back(dihedral(3));
    corpus.push_back(dihedral(4));
    corpus.push_back(dihedral(6));
    corpus.push_back(builtin_group("Q8"));
    corpus.push_back(builtin_group("A4"));
    corpus.push_back(builtin_group("S4"));
    corpus.push_back(direct_product(builtin_group("A4"), cyclic(2)));
    corpus.push_back(direct_product(cyclic(2), cyclic(6)));
    corpus.push_back(family_a(1, 0));
    corpus.push_back(family_a(1, 1));
    for (const auto& g : corpus) {
        auto spectral = in_a3_spectral(g);
        auto structural = in_a3_theorem(g);
        CHECK(spectral.in_class == structural.in_class);
    }
}

TEST_CASE("size ceiling guards the exact computation") {
    auto big = elem_abelian(2, 9);  // order 512
    CHECK_THROWS_AS(in_a3_spectral(big), SizeCeiling);
    CHECK_THROWS_AS(integral_spectrum_3valent(big, cs(1, 2, 3)), SizeCeiling);
    CHECK_THROWS_AS(in_a3_spectral(cyclic(6), 4), SizeCeiling);
    CHECK(in_a3_spectral(cyclic(6), 0).in_class);   // 0 disables the ceiling
    CHECK(in_a3_spectral(cyclic(6), 6).in_class);   // boundary: equal size passes
}
