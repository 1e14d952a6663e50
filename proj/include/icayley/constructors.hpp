#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icayley/group.hpp"
#include "icayley/morphisms.hpp"
#include "icayley/presentation.hpp"

namespace icayley {

// The same group with different recipe metadata (shares the table).
FiniteGroup with_recipe(const FiniteGroup& g, std::string r);

FiniteGroup cyclic(int n);
FiniteGroup dihedral(int n);  // order 2n
FiniteGroup elem_abelian(int p, int k);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Closure of the given permutations (all on the same number of points) under
// composition; elements are indexed in lexicographic order, which puts the
// identity first.
FiniteGroup perm_group(const std::vector<std::vector<int>>& gens);

// Dicyclic group over an abelian group A with a unique involution t:
// generated by A and an element x with x^2 = t, a^x = a^-1.
FiniteGroup dicyclic(const FiniteGroup& a);

// K x| <z> with z^m = 1 acting by alpha (alpha^m must be the identity).
// Elements are pairs (k, z^i) indexed as i*|K| + k; the distinguished
// complement generator is sdp_z() = |K|.
FiniteGroup semidirect_product(const FiniteGroup& k, const AutomorphismMap& alpha, int m);

struct GroupWithAut {
    FiniteGroup group;
    AutomorphismMap aut;
};

// Named groups, including the parametrized entries "U(n)", "W(m)", "SU3(n)".
FiniteGroup builtin_group(const std::string& name);
std::vector<std::string> builtin_names();

// Special 2-group of order 2^(4n-1) built from n quaternion blocks
// a_i, b_i (a_i^2 = b_i^2, a_i^{b_i} = a_i^-1) linked by central commutators
// [a_i, b_j] = c_min(i,j) for |i-j| = 1. The paired automorphism phi sends
// a_i -> b_i, b_i -> b_i a_i^-1; it has order 3 with fixed subgroup the center.
FiniteGroup u_group(int n);
GroupWithAut u_group_with_phi(int n);

// (Z4)^m x| Z4 with the generator acting by inversion.
FiniteGroup w_group(int m);

// Sylow 2-subgroup of SU(3, q) for q = 2^(2n+1): pairs (a, b) over GF(q^2)
// with a a^q = b + b^q, product (a,b)(c,d) = (a+c, b+d+a c^q). The paired
// automorphism scales a by a cube root of unity and fixes exactly the center.
// n = 2 yields order 32768 and must be enabled explicitly.
FiniteGroup su3_sylow2(int n, bool allow_oversize = false);
GroupWithAut su3_sylow2_with_z(int n, bool allow_oversize = false);

// The four nonabelian families with every cubic Cayley graph integral:
//   a: Dic(Z3^m x Z2) x Z2^n
//   b: (U x V) x| <z>, V = (Z2^2)^blocks rotated blockwise, z of order 3,
//      U a group of exponent dividing 3 with z acting by u_act (default id)
//   c: K x| <z> Frobenius, K one of H64, K256, K1024
//   d: (U x| <phi>) x Z2^m, U one of U(n), SU3(n) with its paired order-3 map
FiniteGroup family_a(int m, int n);
FiniteGroup family_b(const FiniteGroup& u, const std::optional<AutomorphismMap>& u_act,
                     int blocks);
FiniteGroup family_c(const std::string& kernel_name);
FiniteGroup family_d(const std::string& core_name, int m);

}  // namespace icayley
