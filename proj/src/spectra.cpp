#include "icayley/spectra.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>

#include "icayley/errors.hpp"

namespace icayley {

std::string ConnectionSet::to_string() const {
    std::ostringstream os;
    os << members[0] << "," << members[1] << "," << members[2];
    return os.str();
}

void validate_connection_set(const FiniteGroup& g, const ConnectionSet& x) {
    for (Elem e : x.members)
        if (e < 1 || e >= g.size())
            throw PreconditionViolated("connection set member " + std::to_string(e) +
                                       " is the identity or out of range");
    if (x.members[0] >= x.members[1] || x.members[1] >= x.members[2])
        throw PreconditionViolated("connection set members must be three distinct elements "
                                   "in ascending order");
    for (Elem e : x.members)
        if (std::find(x.members.begin(), x.members.end(), g.inv(e)) == x.members.end())
            throw PreconditionViolated("connection set is not inverse-closed: missing inverse of " +
                                       std::to_string(e));
}

std::vector<ConnectionSet> enumerate_3_subsets(const FiniteGroup& g) {
    std::vector<Elem> invs;
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem e = 1; e < g.size(); ++e) {
        if (g.order(e) == 2)
            invs.push_back(e);
        else if (e < g.inv(e))
            pairs.emplace_back(e, g.inv(e));
    }
    std::vector<ConnectionSet> out;
    for (std::size_t i = 0; i < invs.size(); ++i)
        for (std::size_t j = i + 1; j < invs.size(); ++j)
            for (std::size_t k = j + 1; k < invs.size(); ++k)
                out.push_back(ConnectionSet{{invs[i], invs[j], invs[k]}});
    for (Elem t : invs)
        for (auto [a, b] : pairs) {
            std::array<Elem, 3> m{t, a, b};
            std::sort(m.begin(), m.end());
            out.push_back(ConnectionSet{m});
        }
    std::sort(out.begin(), out.end(),
              [](const ConnectionSet& a, const ConnectionSet& b) { return a.members < b.members; });
    return out;
}

std::vector<std::vector<int>> cayley_adjacency(const FiniteGroup& g, const ConnectionSet& x) {
    validate_connection_set(g, x);
    const int n = g.size();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (Elem v = 0; v < n; ++v)
        for (Elem e : x.members) a[v][g.mul(e, v)] = 1;
    return a;
}

int integer_nullity(const std::vector<std::vector<long long>>& m) {
    const int n = (int)m.size();
    for (const auto& row : m)
        if ((int)row.size() != n) throw PreconditionViolated("nullity needs a square matrix");
    std::vector<std::vector<mpz_class>> a(n);
    for (int i = 0; i < n; ++i)
        for (long long v : m[i]) a[i].emplace_back((long)v);

    // Fraction-free elimination: after each step, entries stay integral and
    // the previous pivot divides every 2x2 determinant formed.
    mpz_class prev = 1;
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
            for (int j = col + 1; j < n; ++j) {
                mpz_class t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return n - rank;
}

std::string SpectrumReport::to_string() const {
    std::ostringstream os;
    os << "spectrum n=" << n << " X=" << set.to_string() << " m[-3..3]=";
    for (std::size_t i = 0; i < mult.size(); ++i) os << (i ? "," : "") << mult[i];
    os << " integral=" << (integral ? "true" : "false");
    return os.str();
}

SpectrumReport integral_spectrum_3valent(const FiniteGroup& g, const ConnectionSet& x,
                                         int ceiling) {
    if (ceiling > 0 && g.size() > ceiling)
        throw SizeCeiling("group order " + std::to_string(g.size()) +
                          " exceeds the spectrum ceiling " + std::to_string(ceiling));
    const auto adj = cayley_adjacency(g, x);
    SpectrumReport rep;
    rep.n = g.size();
    rep.set = x;
    std::vector<std::vector<long long>> shifted(rep.n, std::vector<long long>(rep.n));
    for (int k = -3; k <= 3; ++k) {
        for (int i = 0; i < rep.n; ++i)
            for (int j = 0; j < rep.n; ++j) shifted[i][j] = adj[i][j] - (i == j ? k : 0);
        int mk = integer_nullity(shifted);
        rep.mult[(std::size_t)(k + 3)] = mk;
        rep.nullity_sum += mk;
    }
    // A 3-regular graph has all eigenvalues in [-3, 3], and eigenspaces of
    // distinct values are independent, so the nullities sum to at most n with
    // equality exactly when the whole spectrum is integral.
    rep.integral = rep.nullity_sum == rep.n;
    return rep;
}

SpectralA3Report in_a3_spectral(const FiniteGroup& g, int ceiling) {
    if (ceiling > 0 && g.size() > ceiling)
        throw SizeCeiling("group order " + std::to_string(g.size()) +
                          " exceeds the spectrum ceiling " + std::to_string(ceiling));
    SpectralA3Report rep;
    auto sets = enumerate_3_subsets(g);
    if (sets.empty()) {
        rep.reason = "no inverse-closed 3-subset of nonidentity elements exists";
        return rep;
    }
    for (const auto& x : sets) {
        ++rep.sets_checked;
        auto sr = integral_spectrum_3valent(g, x, ceiling);
        if (!sr.integral) {
            rep.witness = x;
            rep.reason = "non-integral spectrum at X=" + x.to_string();
            return rep;
        }
    }
    rep.in_class = true;
    rep.reason = "all " + std::to_string(rep.sets_checked) + " connection sets give integral graphs";
    return rep;
}

}  // namespace icayley
