#include "icayley/recipe.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "icayley/constructors.hpp"
#include "icayley/errors.hpp"
#include "icayley/morphisms.hpp"

namespace icayley {

namespace {

using Kind = RecipeAST::Kind;

RecipePtr node(Kind k) {
    auto n = std::make_shared<RecipeAST>();
    n->kind = k;
    return n;
}

RecipeAST& mut(const RecipePtr& p) { return const_cast<RecipeAST&>(*p); }

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        throw ParseError(what + " at column " + std::to_string(at + 1), (int)at);
    }
    [[noreturn]] void fail(const std::string& what) const { fail(what, i); }

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool peek_is(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (peek_is(c)) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& why) {
        if (!eat(c)) fail("expected '" + std::string(1, c) + "' " + why);
    }

    int integer() {
        skip();
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected an integer");
        long v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            v = v * 10 + (s[i] - '0');
            if (v > 100'000'000) fail("integer is too large");
            ++i;
        }
        return (int)v;
    }

    std::vector<int> int_list() {
        std::vector<int> out{integer()};
        while (eat(',')) out.push_back(integer());
        return out;
    }

    std::string ident() {
        skip();
        std::size_t st = i;
        while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
        return s.substr(st, i - st);
    }

    // A builtin/famC/famD name: alphanumerics with balanced parentheses,
    // ending at a top-level ',' or ')'.
    std::string name_arg() {
        skip();
        std::size_t st = i;
        int depth = 0;
        while (i < s.size()) {
            char c = s[i];
            if (c == '(') ++depth;
            else if (c == ')') {
                if (depth == 0) break;
                --depth;
            } else if ((c == ',' && depth == 0) || std::isspace((unsigned char)c))
                break;
            ++i;
        }
        if (i == st) fail("expected a name");
        return s.substr(st, i - st);
    }

    RecipePtr recipe() {
        std::vector<RecipePtr> factors{atom()};
        while (peek_is('x')) {
            ++i;
            factors.push_back(atom());
        }
        if (factors.size() == 1) return factors[0];
        auto n = node(Kind::Product);
        mut(n).children = std::move(factors);
        return n;
    }

    RecipePtr atom() {
        RecipePtr b = base();
        if (eat('^')) {
            auto n = node(Kind::Power);
            mut(n).children.push_back(std::move(b));
            mut(n).args.push_back(integer());
            return n;
        }
        return b;
    }

    RecipePtr base() {
        skip();
        if (i >= s.size()) fail("expected a recipe atom");
        if (eat('(')) {
            auto inner = recipe();
            expect(')', "to close the parenthesized recipe");
            return inner;
        }
        std::size_t kwpos = i;
        std::string kw = ident();
        if (kw.empty()) fail("expected a recipe atom");

        auto ints = [&](Kind k, int count) {
            expect('(', "after '" + kw + "'");
            auto n = node(k);
            for (int c = 0; c < count; ++c) {
                if (c) expect(',', "between arguments");
                mut(n).args.push_back(integer());
            }
            expect(')', "to close '" + kw + "'");
            return n;
        };

        if (kw == "cyclic") return ints(Kind::Cyclic, 1);
        if (kw == "dihedral") return ints(Kind::Dihedral, 1);
        if (kw == "ea") return ints(Kind::ElemAbelian, 2);
        if (kw == "su3") return ints(Kind::Su3, 1);
        if (kw == "u") return ints(Kind::U, 1);
        if (kw == "famA") return ints(Kind::FamA, 2);
        if (kw == "dic") {
            expect('(', "after 'dic'");
            auto n = node(Kind::Dicyclic);
            mut(n).children.push_back(recipe());
            expect(')', "to close 'dic'");
            return n;
        }
        if (kw == "famB") {
            expect('(', "after 'famB'");
            auto n = node(Kind::FamB);
            mut(n).children.push_back(recipe());
            expect(',', "before the block count");
            mut(n).args.push_back(integer());
            expect(')', "to close 'famB'");
            return n;
        }
        if (kw == "builtin" || kw == "famC") {
            expect('(', "after '" + kw + "'");
            auto n = node(kw == "builtin" ? Kind::Builtin : Kind::FamC);
            mut(n).name = name_arg();
            expect(')', "to close '" + kw + "'");
            return n;
        }
        if (kw == "famD") {
            expect('(', "after 'famD'");
            auto n = node(Kind::FamD);
            mut(n).name = name_arg();
            expect(',', "before the elementary abelian rank");
            mut(n).args.push_back(integer());
            expect(')', "to close 'famD'");
            return n;
        }
        if (kw == "sdp") return sdp();
        if (kw == "perm") return perm();

        fail("unknown constructor '" + kw + "'", kwpos);
    }

    RecipePtr sdp() {
        expect('(', "after 'sdp'");
        auto n = node(Kind::Sdp);
        mut(n).children.push_back(recipe());
        expect(',', "before the automorphism reference");
        skip();
        if (peek_is('(')) {
            ++i;
            mut(n).aut_src = int_list();
            skip();
            if (i + 1 >= s.size() || s[i] != '-' || s[i + 1] != '>')
                fail("expected '->' in the generator-image list");
            i += 2;
            mut(n).aut_img = int_list();
            expect(')', "to close the generator-image list");
            if (mut(n).aut_src.size() != mut(n).aut_img.size())
                fail("generator and image lists have different lengths");
        } else {
            std::size_t at = i;
            std::string ref = ident();
            if (ref != "id" && ref != "inv")
                fail("expected an automorphism reference: id, inv or a generator-image list", at);
            mut(n).name = ref;
        }
        expect(',', "before the complement order");
        mut(n).args.push_back(integer());
        expect(')', "to close 'sdp'");
        return n;
    }

    RecipePtr perm() {
        expect('(', "after 'perm'");
        auto n = node(Kind::Perm);
        for (;;) {
            skip();
            std::vector<std::vector<int>> cycles;
            if (peek_is('e')) {
                ++i;  // identity permutation: no cycles
            } else if (peek_is('(')) {
                while (eat('(')) {
                    cycles.push_back(int_list());
                    expect(')', "to close the cycle");
                    skip();
                }
            } else {
                fail("expected a permutation: 'e' or cycles");
            }
            mut(n).perm_atoms.push_back(std::move(cycles));
            if (!eat(',')) break;
        }
        expect(')', "to close 'perm'");
        return n;
    }
};

void print_node(const RecipeAST& a, std::string& out);

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

void print_child(const RecipePtr& c, std::string& out, bool parenthesize) {
    if (parenthesize) out += '(';
    print_node(*c, out);
    if (parenthesize) out += ')';
}

void print_node(const RecipeAST& a, std::string& out) {
    switch (a.kind) {
        case Kind::Cyclic: out += "cyclic(" + std::to_string(a.args[0]) + ")"; return;
        case Kind::Dihedral: out += "dihedral(" + std::to_string(a.args[0]) + ")"; return;
        case Kind::ElemAbelian: out += "ea(" + join_ints(a.args) + ")"; return;
        case Kind::Su3: out += "su3(" + std::to_string(a.args[0]) + ")"; return;
        case Kind::U: out += "u(" + std::to_string(a.args[0]) + ")"; return;
        case Kind::FamA: out += "famA(" + join_ints(a.args) + ")"; return;
        case Kind::FamC: out += "famC(" + a.name + ")"; return;
        case Kind::FamD: out += "famD(" + a.name + "," + std::to_string(a.args[0]) + ")"; return;
        case Kind::Builtin: out += "builtin(" + a.name + ")"; return;
        case Kind::Dicyclic:
            out += "dic(";
            print_node(*a.children[0], out);
            out += ")";
            return;
        case Kind::FamB:
            out += "famB(";
            print_node(*a.children[0], out);
            out += "," + std::to_string(a.args[0]) + ")";
            return;
        case Kind::Sdp:
            out += "sdp(";
            print_node(*a.children[0], out);
            out += ",";
            if (!a.name.empty())
                out += a.name;
            else
                out += "(" + join_ints(a.aut_src) + "->" + join_ints(a.aut_img) + ")";
            out += "," + std::to_string(a.args[0]) + ")";
            return;
        case Kind::Perm: {
            out += "perm(";
            for (std::size_t t = 0; t < a.perm_atoms.size(); ++t) {
                if (t) out += ',';
                const auto& cycles = a.perm_atoms[t];
                if (cycles.empty()) {
                    out += 'e';
                } else {
                    for (const auto& c : cycles) out += "(" + join_ints(c) + ")";
                }
            }
            out += ")";
            return;
        }
        case Kind::Product:
            for (std::size_t t = 0; t < a.children.size(); ++t) {
                if (t) out += " x ";
                print_child(a.children[t], out, a.children[t]->kind == Kind::Product);
            }
            return;
        case Kind::Power: {
            const auto& c = a.children[0];
            print_child(c, out, c->kind == Kind::Product || c->kind == Kind::Power);
            out += "^" + std::to_string(a.args[0]);
            return;
        }
    }
}

FiniteGroup eval_node(const RecipeAST& a);

AutomorphismMap resolve_autref(const RecipeAST& a, const FiniteGroup& k) {
    if (a.name == "id") return identity_automorphism(k);
    if (a.name == "inv") return inversion_automorphism(k);
    for (int e : a.aut_src)
        if (e < 0 || e >= k.size())
            throw NotAutomorphism("generator index out of range in " + print_recipe(a));
    for (int e : a.aut_img)
        if (e < 0 || e >= k.size())
            throw NotAutomorphism("image index out of range in " + print_recipe(a));
    std::vector<Elem> src(a.aut_src.begin(), a.aut_src.end());
    std::vector<Elem> img(a.aut_img.begin(), a.aut_img.end());
    auto hom = hom_from_images(k, src, k, img);
    if (!hom.ok())
        throw NotAutomorphism("generator images do not extend to an endomorphism in " +
                              print_recipe(a));
    return make_automorphism(k, std::move(*hom.img),
                             "(" + join_ints(a.aut_src) + "->" + join_ints(a.aut_img) + ")");
}

FiniteGroup eval_perm(const RecipeAST& a) {
    int points = 1;
    for (const auto& atom : a.perm_atoms)
        for (const auto& cyc : atom)
            for (int x : cyc) {
                if (x < 0) throw BadConstruction("negative point in " + print_recipe(a));
                if (x + 1 > points) points = x + 1;
            }
    std::vector<std::vector<int>> gens;
    for (const auto& atom : a.perm_atoms) {
        std::vector<int> perm(points);
        std::vector<char> moved(points, 0);
        for (int x = 0; x < points; ++x) perm[x] = x;
        for (const auto& cyc : atom) {
            for (std::size_t t = 0; t < cyc.size(); ++t) {
                int from = cyc[t], to = cyc[(t + 1) % cyc.size()];
                if (moved[from])
                    throw BadConstruction("point " + std::to_string(from) +
                                          " repeats within one permutation in " + print_recipe(a));
                moved[from] = 1;
                perm[from] = to;
            }
        }
        gens.push_back(std::move(perm));
    }
    return perm_group(gens);
}

FiniteGroup eval_node(const RecipeAST& a) {
    switch (a.kind) {
        case Kind::Cyclic: return cyclic(a.args[0]);
        case Kind::Dihedral: return dihedral(a.args[0]);
        case Kind::ElemAbelian: return elem_abelian(a.args[0], a.args[1]);
        case Kind::Su3: return su3_sylow2(a.args[0]);
        case Kind::U: return u_group(a.args[0]);
        case Kind::FamA: return family_a(a.args[0], a.args[1]);
        case Kind::FamC: return family_c(a.name);
        case Kind::FamD: return family_d(a.name, a.args[0]);
        case Kind::Builtin: return builtin_group(a.name);
        case Kind::Dicyclic: return dicyclic(eval_node(*a.children[0]));
        case Kind::FamB: return family_b(eval_node(*a.children[0]), std::nullopt, a.args[0]);
        case Kind::Sdp: {
            FiniteGroup k = eval_node(*a.children[0]);
            return semidirect_product(k, resolve_autref(a, k), a.args[0]);
        }
        case Kind::Perm: return eval_perm(a);
        case Kind::Product: {
            FiniteGroup g = eval_node(*a.children[0]);
            for (std::size_t t = 1; t < a.children.size(); ++t)
                g = direct_product(g, eval_node(*a.children[t]));
            return g;
        }
        case Kind::Power: {
            if (a.args[0] < 1)
                throw BadConstruction("direct power needs a positive exponent in " +
                                      print_recipe(a));
            FiniteGroup g = eval_node(*a.children[0]);
            FiniteGroup acc = g;
            for (int t = 1; t < a.args[0]; ++t) acc = direct_product(acc, g);
            return acc;
        }
    }
    throw BadConstruction("unhandled recipe node");
}

}  // namespace

bool RecipeAST::operator==(const RecipeAST& o) const {
    if (kind != o.kind || args != o.args || name != o.name || aut_src != o.aut_src ||
        aut_img != o.aut_img || perm_atoms != o.perm_atoms ||
        children.size() != o.children.size())
        return false;
    for (std::size_t t = 0; t < children.size(); ++t)
        if (!(*children[t] == *o.children[t])) return false;
    return true;
}

RecipePtr parse_recipe(const std::string& text) {
    Parser p(text);
    auto ast = p.recipe();
    p.skip();
    if (p.i != text.size()) p.fail("unexpected trailing input");
    return ast;
}

std::string print_recipe(const RecipeAST& ast) {
    std::string out;
    print_node(ast, out);
    return out;
}

std::string print_recipe(const RecipePtr& ast) { return print_recipe(*ast); }

FiniteGroup eval_recipe(const RecipeAST& ast) {
    return with_recipe(eval_node(ast), print_recipe(ast));
}

FiniteGroup eval_recipe(const RecipePtr& ast) { return eval_recipe(*ast); }

FiniteGroup group_from_recipe(const std::string& text) {
    return eval_recipe(parse_recipe(text));
}

}  // namespace icayley
