#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icayley/group.hpp"

namespace icayley {

// A certified automorphism: img is a bijection with img[xy] = img[x] img[y].
struct AutomorphismMap {
    FiniteGroup group;
    std::vector<Elem> img;
    int order = 1;    // order as a permutation
    std::string ref;  // printable form ("id", "inv", generator-image list), may be empty

    Elem operator()(Elem x) const { return img[x]; }
};

// Verifies bijectivity and multiplicativity; throws NotAutomorphism.
AutomorphismMap make_automorphism(const FiniteGroup& g, std::vector<Elem> img,
                                  std::string ref = "");
AutomorphismMap identity_automorphism(const FiniteGroup& g);
// x -> x^-1; throws NotAbelian when that is not an automorphism.
AutomorphismMap inversion_automorphism(const FiniteGroup& g);
AutomorphismMap compose(const AutomorphismMap& a, const AutomorphismMap& b);  // x -> a(b(x))
AutomorphismMap aut_power(const AutomorphismMap& a, int k);                   // k >= 0

// Extends gens[i] -> images[i] to a homomorphism G -> H if one exists.
// Throws NotGenerating when <gens> != G, OrderMismatch on ragged input.
// On failure, reports a witness pair with img(xy) != img(x) img(y).
struct HomFailure {
    Elem x = -1, y = -1;
};
struct HomResult {
    std::optional<std::vector<Elem>> img;
    HomFailure failure;
    bool ok() const { return img.has_value(); }
};
HomResult hom_from_images(const FiniteGroup& g, const std::vector<Elem>& gens,
                          const FiniteGroup& h, const std::vector<Elem>& images);

Subgroup fix(const AutomorphismMap& phi);
bool is_fixed_point_free(const AutomorphismMap& phi);

// Checks that phi, phi^2, ..., phi^(m-1) are all fixed point free, which makes
// K x| <z> (z acting as phi, z^m = 1) a Frobenius group with kernel K.
struct FrobeniusReport {
    bool ok = false;
    std::vector<std::pair<int, Elem>> offenders;  // (power, fixed element), first few
};
FrobeniusReport verify_frobenius(const FiniteGroup& k, const AutomorphismMap& phi, int m);

struct MorphSearchOptions {
    int size_ceiling = 256;            // refuse larger groups
    long node_budget = 400'000'000;    // search nodes before BudgetExceeded
};

// All automorphisms, ordered by generator-image tuple. Deterministic.
std::vector<AutomorphismMap> automorphism_group(const FiniteGroup& g,
                                                const MorphSearchOptions& opt = {});

struct FpfOptions {
    int size_ceiling = 2048;
    long node_budget = 2'000'000'000;
};

// First (by generator-image order) fixed-point-free automorphism of order 3,
// or nullopt after an exhaustive refutation.
std::optional<AutomorphismMap> find_order3_fpf(const FiniteGroup& g, const FpfOptions& opt = {});

// An isomorphism G -> H as an image vector, or nullopt. Meant for small orders.
std::optional<std::vector<Elem>> isomorphic_bruteforce(const FiniteGroup& g, const FiniteGroup& h,
                                                       const MorphSearchOptions& opt = {});

// The isomorphism types a two-generator subgroup <x, y> with x an involution
// is allowed to take, plus the two tags the classification singles out.
enum class AllowedTag { Z2, Z2xZ2, Z4, Z6, Z2xZ4, Z2xZ6, A4, D6, Other };

const char* tag_name(AllowedTag t);
bool tag_allowed_pair(AllowedTag t);  // true for the seven allowed types

// Identifies groups of order <= 13 by their fingerprint (order, abelian flag,
// order profile), which is a complete invariant in that range.
AllowedTag identify_small(const Fingerprint& f);
AllowedTag identify_allowed(const Subgroup& h);

}  // namespace icayley
