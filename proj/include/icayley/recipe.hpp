#pragma once

#include <memory>
#include <string>
#include <vector>

#include "icayley/group.hpp"

namespace icayley {

// Abstract syntax of the group-recipe language:
//
//   recipe := atom ( "x" atom )*
//   atom   := base [ "^" INT ]
//   base   := "cyclic(" INT ")" | "dihedral(" INT ")" | "ea(" INT "," INT ")"
//           | "dic(" recipe ")" | "sdp(" recipe "," autref "," INT ")"
//           | "builtin(" NAME ")" | "perm(" cycles ")" | "su3(" INT ")"
//           | "u(" INT ")" | "famA(" INT "," INT ")" | "famB(" recipe "," INT ")"
//           | "famC(" NAME ")" | "famD(" NAME "," INT ")" | "(" recipe ")"
//   autref := "id" | "inv" | "(" INT ("," INT)* "->" INT ("," INT)* ")"
//   cycles := perm_atom ("," perm_atom)* where a perm_atom is "e" or a
//             concatenation of cycles "(" INT ("," INT)* ")"
//
// Whitespace is ignored everywhere. "x" is left-associative; "^k" is the
// k-fold direct power, expanded left-to-right, so element indices pair
// lexicographically. Parenthesized sub-recipes become explicit Product
// children, which keeps print(parse(s)) a fixed point.
struct RecipeAST;
using RecipePtr = std::shared_ptr<const RecipeAST>;

struct RecipeAST {
    enum class Kind {
        Cyclic,       // args: n
        Dihedral,     // args: n (order 2n)
        ElemAbelian,  // args: p, k
        Dicyclic,     // children: base recipe
        Sdp,          // children: kernel; name: "id"/"inv"/""; aut_src/aut_img; args: m
        Builtin,      // name
        Perm,         // perm_atoms: one generator per atom, each a cycle list
        Su3,          // args: n
        U,            // args: n
        FamA,         // args: m, n
        FamB,         // children: odd part; args: blocks
        FamC,         // name: kernel name
        FamD,         // name: core name; args: m
        Product,      // children: two or more factors
        Power,        // children: base; args: k >= 1
    };

    Kind kind;
    std::vector<int> args;
    std::string name;
    std::vector<int> aut_src, aut_img;                // Sdp generator-image form
    std::vector<std::vector<std::vector<int>>> perm_atoms;  // [atom][cycle][point]
    std::vector<RecipePtr> children;

    bool operator==(const RecipeAST& o) const;
    bool operator!=(const RecipeAST& o) const { return !(*this == o); }
};

// Throws ParseError (position = 0-based offset) on malformed input.
RecipePtr parse_recipe(const std::string& text);

// Canonical form: no whitespace except around "x", parentheses only where
// the structure requires them. parse(print(a)) is structurally equal to a.
std::string print_recipe(const RecipeAST& ast);
std::string print_recipe(const RecipePtr& ast);

// Dispatches to the constructor modules and attaches the canonical recipe
// string as metadata. Constructor errors propagate with the failing
// sub-recipe named in the message.
FiniteGroup eval_recipe(const RecipeAST& ast);
FiniteGroup eval_recipe(const RecipePtr& ast);

// parse + eval in one step.
FiniteGroup group_from_recipe(const std::string& text);

}  // namespace icayley
