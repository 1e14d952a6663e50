#pragma once

#include <vector>

#include "icayley/group.hpp"

namespace icayley {

// Presentation of a p-group of class at most 2 on generators x_1..x_m and
// central generators z_1..z_s of order p.  Normal forms are pairs (e, v) with
// e in (Z_p)^m, v in (Z_p)^s, standing for x_1^{e_1}...x_m^{e_m} z^v, and
//
//   x_i^p = z^{sq[i]},     x_j x_i = x_i x_j z^{comm[i][j]}   (i < j).
//
// Multiplication of normal forms:
//   (e, v)(f, w) = (e + f mod p,
//                   v + w + sum_{i<j} e_j f_i comm[i][j] + sum_i c_i sq[i])
// where c_i = 1 exactly when e_i + f_i >= p (the base-p carry).
struct CTPresentation {
    int p = 2;
    int m = 0;
    int s = 0;
    std::vector<std::vector<int>> sq;                 // m rows of length s
    std::vector<std::vector<std::vector<int>>> comm;  // comm[i][j], i < j, length s

    void set_comm(int i, int j, std::vector<int> v);
    const std::vector<int>& get_comm(int i, int j) const;
    void validate() const;
};

// Compiles the presentation to an explicit multiplication table.  Generators
// are recorded as the x_i, followed by any z_j they do not already generate.
// With paranoid set, associativity is checked exhaustively for orders <= 4096.
FiniteGroup central_type_group(const CTPresentation& pres, bool paranoid = false);

}  // namespace icayley
