#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "icayley/group.hpp"

namespace icayley {

// An inverse-closed 3-subset of nonidentity elements: either three
// involutions, or one involution plus a {g, g^-1} pair.
struct ConnectionSet {
    std::array<Elem, 3> members{};  // sorted ascending

    bool operator==(const ConnectionSet& o) const { return members == o.members; }
    std::string to_string() const;
};

// Throws PreconditionViolated unless x is inverse-closed, identity-free and
// has three distinct members.
void validate_connection_set(const FiniteGroup& g, const ConnectionSet& x);

// Every valency-3 connection set, in lexicographic order. Count is
// C(i, 3) + i * p for i involutions and p inverse pairs.
std::vector<ConnectionSet> enumerate_3_subsets(const FiniteGroup& g);

// A[g][h] = 1 iff h * g^-1 lies in X: the graph with edges {g, xg}.
// Symmetric with all row sums 3.
std::vector<std::vector<int>> cayley_adjacency(const FiniteGroup& g, const ConnectionSet& x);

// n - rank over the rationals, by fraction-free elimination on
// arbitrary-precision integers (first nonzero pivot, exact divisions).
int integer_nullity(const std::vector<std::vector<long long>>& m);

struct SpectrumReport {
    int n = 0;
    ConnectionSet set;
    std::array<int, 7> mult{};  // multiplicity of eigenvalue k at index k + 3
    long nullity_sum = 0;
    bool integral = false;

    int multiplicity(int k) const { return mult[(std::size_t)(k + 3)]; }
    std::string to_string() const;  // "spectrum n=.. X=.. m[-3..3]=.. integral=.."
};

// Exact integrality decision: m_k = nullity(A - kI) for k = -3..3; the graph
// is integral iff the multiplicities sum to n (3-regular eigenvalues lie in
// [-3, 3], and distinct eigenspaces are independent). Throws SizeCeiling when
// |G| > ceiling; ceiling <= 0 disables the check.
SpectrumReport integral_spectrum_3valent(const FiniteGroup& g, const ConnectionSet& x,
                                         int ceiling = 256);

struct SpectralA3Report {
    bool in_class = false;
    long sets_checked = 0;
    std::optional<ConnectionSet> witness;  // first non-integral set, if any
    std::string reason;
};

// Spectral side of the classification: the group must admit at least one
// valency-3 connection set and every one must give an integral graph.
SpectralA3Report in_a3_spectral(const FiniteGroup& g, int ceiling = 256);

}  // namespace icayley
