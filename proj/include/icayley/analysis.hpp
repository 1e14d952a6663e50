#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icayley/group.hpp"
#include "icayley/morphisms.hpp"

namespace icayley {

// ---- two-generator subgroup condition ----
//
// The condition: every subgroup <x, y> with x an involution is isomorphic to
// one of Z2, Z2^2, Z4, Z6, Z2xZ4, Z2xZ6, A4.

struct PairWitness {
    Elem x = -1, y = -1;
    AllowedTag tag = AllowedTag::Other;
    bool capped = false;        // closure exceeded the cap (already disallowed)
    int subgroup_size = 0;      // 0 when capped
    Fingerprint fp;             // meaningful only when not capped
};

struct PropertyPReport {
    bool holds = true;
    bool even_order = false;              // |G| even (reported, not part of holds)
    std::optional<PairWitness> offender;  // lexicographically first bad pair
    long pairs_checked = 0;
    long distinct_subgroups = 0;          // pair closures seen, deduplicated
};

// cap bounds the closure of each pair; anything larger than the biggest
// allowed type (order 12) is an offender outright.
PropertyPReport has_property_p(const FiniteGroup& g, int cap = 13);

// ---- membership via the classification ----
//
// G belongs iff G is dihedral of order 12, or |G| is even, G has at least one
// inverse-closed 3-subset, and the two-generator condition holds.

struct A3TheoremReport {
    bool in_class = false;
    bool is_d6 = false;
    bool even_order = false;
    bool admits_cubic_set = false;
    PropertyPReport pairs;
    std::string reason;  // which clause decided membership, or why it failed
};

A3TheoremReport in_a3_theorem(const FiniteGroup& g);

// ---- minimal nonabelian subgroups ----

enum class MinNonabTag { Q8, H16, H32, Other };
const char* min_nonab_tag_name(MinNonabTag t);

struct MinNonabEntry {
    std::vector<Elem> members;  // sorted
    MinNonabTag tag;
};

// Every nonabelian subgroup all of whose proper subgroups are abelian. Such
// groups are two-generated, so enumerating pair closures finds them all.
// Throws SizeCeiling above order 4096.
std::vector<MinNonabEntry> minimal_nonabelian_subgroups(const FiniteGroup& g);

// ---- quaternion subgroup exclusion ----

struct NoQ8Report {
    bool ok = true;
    std::optional<std::pair<Elem, Elem>> witness;  // generators of a Q8 if found
};

NoQ8Report no_q8_check(const FiniteGroup& g);

// ---- family certificates ----

struct ClauseResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct FamilyCert {
    char family = '?';
    bool ok = false;
    std::vector<ClauseResult> clauses;
};

// Structural certificate that g lies in family 'a', 'b', 'c' or 'd' (the four
// nonabelian families of the classification). Clause-by-clause results; for
// family d the block decomposition is greedy, so a failure there reports "no
// witness found" rather than disproof. Throws UnknownTag for other letters.
FamilyCert verify_family(const FiniteGroup& g, char family);

// ---- structural consequences of the two-generator condition ----

struct LemmaSuiteReport {
    bool all = false;
    std::vector<ClauseResult> checks;
};

// Seven structural facts that hold for every group satisfying the
// two-generator condition: element orders within {1,2,3,4,6}; involutions
// commute; Sylow 2 has exponent <= 4 with Omega1 central in it; Sylow 3 has
// exponent dividing 3; G2' <= Phi(G2) <= Omega1(G2) <= Z(G2);
// Omega1(G) = Omega1(G2) elementary abelian; Sylow 2 has class <= 2.
// The suite is only claimed under that condition: throws PreconditionViolated
// when has_property_p(g) fails.
LemmaSuiteReport lemma_suite(const FiniteGroup& g);

}  // namespace icayley
