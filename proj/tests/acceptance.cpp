// Acceptance gate: eleven end-to-end checks covering automorphism counts,
// Frobenius kernel constructions, the special 2-group families, the
// structural-vs-spectral classification agreement, exact spectra, and the
// fingerprint identifier. One pass/fail line per check, wall-clock budgets
// pinned below. Exit 0 iff every check passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "icayley/analysis.hpp"
#include "icayley/constructors.hpp"
#include "icayley/errors.hpp"
#include "icayley/group.hpp"
#include "icayley/morphisms.hpp"
#include "icayley/recipe.hpp"
#include "icayley/spectra.hpp"

using namespace icayley;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failures = 0;

struct Check {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& msg) {
        if (!cond) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += msg;
        }
    }
    void note(const std::string& msg) {
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
};

template <typename F>
void run(int num, const char* slug, double budget_s, F&& body) {
    Check c;
    auto t0 = Clock::now();
    try {
        body(c);
    } catch (const Error& e) {
        c.pass = false;
        c.note(std::string("error: ") + e.what());
    }
    double dt = seconds_since(t0);
    if (dt > budget_s) {
        c.pass = false;
        c.note("over budget " + std::to_string(budget_s) + "s");
    }
    if (!c.pass) ++g_failures;
    std::printf("acceptance %02d %-22s %s  time=%.2fs%s%s\n", num, slug,
                c.pass ? "pass" : "FAIL", dt, c.detail.empty() ? "" : "  ",
                c.detail.c_str());
    std::fflush(stdout);
}

std::string join_names(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
    return out;
}

// Corpus for the classification-equivalence and fingerprint checks: family
// a/b/d instances up to order 108, the two exceptional members, elementary
// 2-groups, the standard non-members, and all cyclic groups through 16.
std::vector<std::string> corpus_recipes() {
    std::vector<std::string> r = {
        "famA(1,0)", "famA(1,1)", "famA(1,2)", "famA(2,0)", "famA(2,1)",
        "famB(cyclic(1),1)", "famB(cyclic(1),2)", "famB(cyclic(3),1)", "famB(ea(3,2),1)",
        "famD(U(1),0)", "famD(U(1),1)", "famD(U(1),2)",
        "dihedral(3)", "builtin(Q8)", "ea(2,2)", "ea(2,3)", "ea(2,4)",
        "dihedral(4)", "dihedral(6)", "builtin(S4)", "builtin(A4) x cyclic(2)",
    };
    for (int n = 2; n <= 16; ++n) r.push_back("cyclic(" + std::to_string(n) + ")");
    return r;
}

}  // namespace

int main() {
    // Order-3 fixed-point-free maps certified during the run, re-examined by
    // the final invariants check.
    std::vector<AutomorphismMap> certified3;
    // Corpus groups built in check 8, reused by check 10.
    std::vector<FiniteGroup> corpus;

    run(1, "aut-counts", 20.0, [&](Check& c) {
        auto t0 = Clock::now();
        auto a16 = automorphism_group(builtin_group("H16"));
        double t16 = seconds_since(t0);
        t0 = Clock::now();
        auto a32 = automorphism_group(builtin_group("H32star"));
        double t32 = seconds_since(t0);
        c.require(a16.size() == 32, "Aut(H16) = " + std::to_string(a16.size()) + " != 32");
        c.require(a32.size() == 256, "Aut(H32star) = " + std::to_string(a32.size()) + " != 256");
        c.require(t16 < 10.0 && t32 < 10.0, "an automorphism search exceeded 10s");
        if (c.pass) c.note("Aut(H16)=32 Aut(H32star)=256");
    });

    run(2, "frobenius-order-192", 60.0, [&](Check& c) {
        FiniteGroup h64 = builtin_group("H64");
        auto phi = find_order3_fpf(h64);
        c.require(phi.has_value(), "no order-3 fixed-point-free map on H64");
        if (!phi) return;
        c.require(phi->order == 3, "found map has order != 3");
        c.require(verify_frobenius(h64, *phi, 3).ok, "Frobenius certification failed");
        certified3.push_back(*phi);
        FiniteGroup g = semidirect_product(h64, *phi, 3);
        c.require(g.size() == 192, "extension has order " + std::to_string(g.size()));
        c.require(has_property_p(g).holds, "two-generator condition fails on the extension");
        auto cert = verify_family(g, 'c');
        std::vector<std::string> bad;
        for (const auto& cl : cert.clauses)
            if (!cl.pass) bad.push_back(cl.name);
        c.require(cert.ok, "family-c axioms failed: " + join_names(bad));
        if (c.pass) c.note("order=192 propertyP=true family-c clauses=" +
                           std::to_string(cert.clauses.size()));
    });

    run(3, "fpf-refutation-w", 240.0, [&](Check& c) {
        auto t0 = Clock::now();
        auto w2 = find_order3_fpf(builtin_group("W(2)"));
        double t_m2 = seconds_since(t0);
        auto w3 = find_order3_fpf(builtin_group("W(3)"));
        c.require(!w2.has_value(), "unexpected fixed-point-free map on W(2)");
        c.require(!w3.has_value(), "unexpected fixed-point-free map on W(3)");
        c.require(t_m2 < 120.0, "W(2) refutation exceeded 120s");
        if (c.pass) c.note("W(2)=none W(3)=none exhaustive");
    });

    run(4, "kernel-extensions", 300.0, [&](Check& c) {
        for (const char* name : {"K256", "K1024"}) {
            FiniteGroup k = builtin_group(name);
            int expect = std::string(name) == "K256" ? 256 : 1024;
            c.require(k.size() == expect, std::string(name) + " has wrong order");
            auto phi = find_order3_fpf(k);
            c.require(phi.has_value(), std::string("no order-3 map on ") + name);
            if (!phi) continue;
            c.require(phi->order == 3 && verify_frobenius(k, *phi, 3).ok,
                      std::string("certification failed on ") + name);
            certified3.push_back(*phi);
        }
        FiniteGroup g768 = family_c("K256");
        c.require(g768.size() == 768, "extension of K256 has wrong order");
        c.require(has_property_p(g768).holds, "two-generator condition fails at order 768");
        auto t0 = Clock::now();
        FiniteGroup g3072 = family_c("K1024");
        c.require(g3072.size() == 3072, "extension of K1024 has wrong order");
        c.require(has_property_p(g3072).holds, "two-generator condition fails at order 3072");
        c.require(seconds_since(t0) < 300.0, "order-3072 case exceeded 300s");
        if (c.pass) c.note("orders 768 and 3072 both satisfy the condition");
    });

    run(5, "minimal-nonabelian", 300.0, [&](Check& c) {
        std::string counts;
        for (const char* name : {"H64", "K256", "K1024"}) {
            FiniteGroup g = builtin_group(name);
            c.require(no_q8_check(g).ok, std::string("quaternion subgroup found in ") + name);
            auto entries = minimal_nonabelian_subgroups(g);
            c.require(!entries.empty(), std::string("no minimal nonabelian subgroups in ") + name);
            int n16 = 0, n32 = 0;
            for (const auto& e : entries) {
                if (e.tag == MinNonabTag::H16) ++n16;
                else if (e.tag == MinNonabTag::H32) ++n32;
                else
                    c.require(false, std::string("tag ") + min_nonab_tag_name(e.tag) + " in " +
                                         name);
            }
            if (std::string(name) == "H64")
                c.require(n32 == 0, "H64 yielded a 32-element minimal nonabelian subgroup");
            counts += std::string(counts.empty() ? "" : " ") + name + "=" +
                      std::to_string(n16) + "xH16+" + std::to_string(n32) + "xH32";
        }
        if (c.pass) c.note(counts);
    });

    run(6, "u-family", 120.0, [&](Check& c) {
        for (int n = 1; n <= 3; ++n) {
            auto [g, phi] = u_group_with_phi(n);
            std::string tag = "U(" + std::to_string(n) + ") ";
            c.require(g.size() == (1 << (4 * n - 1)), tag + "wrong order");
            c.require(is_special_2group(g).special, tag + "not special");
            auto z = center(g);
            c.require((int)z.members.size() == (1 << (2 * n - 1)), tag + "wrong center order");
            c.require(derived_subgroup(g).members == z.members, tag + "derived != center");
            c.require(frattini_pgroup(g).members == z.members, tag + "frattini != center");
            c.require(omega1(g, 2).members == z.members, tag + "omega1 != center");
            c.require(phi.order == 3, tag + "companion map order != 3");
            c.require(fix(phi).members == z.members, tag + "fixed subgroup != center");
        }
        auto iso = isomorphic_bruteforce(u_group(1), builtin_group("Q8"));
        c.require(iso.has_value(), "U(1) is not isomorphic to Q8");
        if (c.pass) c.note("n=1,2,3 all invariants hold; U(1)=Q8 by brute force");
    });

    run(7, "su3-sylow", 60.0, [&](Check& c) {
        auto [g, z] = su3_sylow2_with_z(1);
        c.require(g.size() == 512, "wrong order");
        c.require(is_special_2group(g).special, "not special");
        auto zc = center(g);
        c.require(zc.members.size() == 8, "center order " + std::to_string(zc.members.size()));
        c.require(z.order == 3, "companion map order != 3");
        c.require(fix(z).members == zc.members, "fixed subgroup != center");
        if (c.pass) c.note("order=512 special center=8 fix(z)=center");
    });

    run(8, "classification-corpus", 600.0, [&](Check& c) {
        auto recipes = corpus_recipes();
        c.require(recipes.size() >= 25, "corpus has fewer than 25 groups");
        int disagreements = 0;
        for (const auto& r : recipes) {
            FiniteGroup g = group_from_recipe(r);
            c.require(g.size() <= 200, r + " exceeds order 200");
            corpus.push_back(g);
            bool structural = in_a3_theorem(g).in_class;
            bool spectral = in_a3_spectral(g, 256).in_class;
            if (structural != spectral) {
                ++disagreements;
                c.require(false, r + ": structural=" + (structural ? "true" : "false") +
                                     " spectral=" + (spectral ? "true" : "false"));
            }
        }
        if (c.pass)
            c.note(std::to_string(recipes.size()) + " groups, zero disagreements");
    });

    run(9, "spot-spectra", 5.0, [&](Check& c) {
        auto involutions = [](const FiniteGroup& g) {
            std::array<Elem, 3> m{};
            int k = 0;
            for (Elem e = 1; e < g.size() && k < 3; ++e)
                if (g.order(e) == 2) m[(std::size_t)k++] = e;
            return ConnectionSet{m};
        };
        FiniteGroup v4 = elem_abelian(2, 2);
        auto t0 = Clock::now();
        auto r1 = integral_spectrum_3valent(v4, involutions(v4));
        c.require(seconds_since(t0) < 1.0, "Z2xZ2 spectrum exceeded 1s");
        c.require(r1.mult == std::array<int, 7>{0, 0, 3, 0, 0, 0, 1},
                  "Z2xZ2 spectrum is not {3:1, -1:3}");

        FiniteGroup d6 = dihedral(3);
        t0 = Clock::now();
        auto r2 = integral_spectrum_3valent(d6, involutions(d6));
        c.require(seconds_since(t0) < 1.0, "D6 spectrum exceeded 1s");
        c.require(r2.mult == std::array<int, 7>{1, 0, 0, 4, 0, 0, 1},
                  "D6 reflection spectrum is not {3:1, 0:4, -3:1}");

        FiniteGroup z8 = cyclic(8);
        t0 = Clock::now();
        auto r3 = integral_spectrum_3valent(z8, ConnectionSet{{1, 4, 7}});
        c.require(seconds_since(t0) < 1.0, "Z8 spectrum exceeded 1s");
        c.require(!r3.integral, "Z8 with {1,4,7} reported integral");
        c.require(r3.nullity_sum < z8.size(), "nullity total should fall short of the order");
        if (c.pass) c.note("all three multiplicity patterns match");
    });

    run(10, "fingerprint-soundness", 600.0, [&](Check& c) {
        std::vector<std::pair<AllowedTag, FiniteGroup>> models = {
            {AllowedTag::Z2, cyclic(2)},
            {AllowedTag::Z2xZ2, elem_abelian(2, 2)},
            {AllowedTag::Z4, cyclic(4)},
            {AllowedTag::Z6, cyclic(6)},
            {AllowedTag::D6, dihedral(3)},
            {AllowedTag::Z2xZ4, direct_product(cyclic(4), cyclic(2))},
            {AllowedTag::Z2xZ6, direct_product(cyclic(2), cyclic(6))},
            {AllowedTag::A4, builtin_group("A4")},
        };
        long compared = 0;
        int disagreements = 0;
        auto agree = [&](const FiniteGroup& h, const std::string& label) {
            AllowedTag t = identify_allowed(whole_subgroup(h));
            for (const auto& [tag, model] : models) {
                if (model.size() != h.size()) continue;
                bool iso = isomorphic_bruteforce(h, model).has_value();
                ++compared;
                if (iso != (tag == t)) {
                    ++disagreements;
                    c.require(false, label + ": identified as " + tag_name(t) +
                                         " but brute force says " +
                                         (iso ? "isomorphic" : "not isomorphic") + " to " +
                                         tag_name(tag));
                }
            }
        };

        // Complete isomorphism lists for orders 2, 4, 6, 8, 12.
        std::vector<std::pair<std::string, FiniteGroup>> complete = {
            {"Z2", cyclic(2)},
            {"Z4", cyclic(4)},
            {"Z2xZ2", elem_abelian(2, 2)},
            {"Z6", cyclic(6)},
            {"S3", dihedral(3)},
            {"Z8", cyclic(8)},
            {"Z4xZ2", direct_product(cyclic(4), cyclic(2))},
            {"Z2^3", elem_abelian(2, 3)},
            {"D8", dihedral(4)},
            {"Q8", builtin_group("Q8")},
            {"Z12", cyclic(12)},
            {"Z2xZ6", direct_product(cyclic(2), cyclic(6))},
            {"D12", dihedral(6)},
            {"A4", builtin_group("A4")},
            {"Dic3", dicyclic(cyclic(6))},
        };
        for (const auto& [name, g] : complete) agree(g, name);

        // Every involution-anchored two-generator subgroup in the corpus.
        if (corpus.empty())
            for (const auto& r : corpus_recipes()) corpus.push_back(group_from_recipe(r));
        long subgroups = 0;
        for (const auto& g : corpus) {
            std::set<std::vector<Elem>> seen;
            for (Elem x = 1; x < g.size(); ++x) {
                if (g.order(x) != 2) continue;
                for (Elem y = 0; y < g.size(); ++y) {
                    auto h = closure_nocap(g, {x, y});
                    if (!seen.insert(h.members).second) continue;
                    ++subgroups;
                    agree(extract_subgroup(h), g.recipe() + " <" + std::to_string(x) + "," +
                                                   std::to_string(y) + ">");
                }
            }
        }
        c.require(disagreements == 0,
                  std::to_string(disagreements) + " identifier disagreements");
        if (c.pass)
            c.note(std::to_string(complete.size()) + " reference groups and " +
                   std::to_string(subgroups) + " corpus subgroups, " +
                   std::to_string(compared) + " brute-force comparisons, zero disagreements");
    });

    run(11, "fpf-invariants", 120.0, [&](Check& c) {
        c.require(certified3.size() == 3, "expected three certified order-3 maps, have " +
                                              std::to_string(certified3.size()));
        long checked = 0;
        for (const auto& phi : certified3) {
            const FiniteGroup& g = phi.group;
            for (Elem x = 0; x < g.size(); ++x) {
                Elem x1 = phi(x), x2 = phi(x1);
                if (g.mul(g.mul(x, x1), x2) != 0)
                    c.require(false, "x * x^phi * x^phi2 != 1 at x=" + std::to_string(x) +
                                         " in a group of order " + std::to_string(g.size()));
                if (g.mul(x, x1) != g.mul(x1, x))
                    c.require(false, "x and x^phi do not commute at x=" + std::to_string(x) +
                                         " in a group of order " + std::to_string(g.size()));
                ++checked;
            }
        }
        // Order-2 fixed-point-free maps must invert: certify inversion on odd
        // abelian groups and confirm the pointwise identity.
        for (const char* r : {"cyclic(5)", "cyclic(9)", "ea(3,2)"}) {
            FiniteGroup k = group_from_recipe(r);
            auto inv = inversion_automorphism(k);
            c.require(inv.order == 2, std::string(r) + ": inversion is not an involution");
            c.require(verify_frobenius(k, inv, 2).ok,
                      std::string(r) + ": order-2 certification failed");
            for (Elem x = 0; x < k.size(); ++x) {
                if (inv(x) != k.inv(x))
                    c.require(false, std::string(r) + ": order-2 map is not inversion at x=" +
                                         std::to_string(x));
                ++checked;
            }
        }
        if (c.pass)
            c.note(std::to_string(checked) + " pointwise identities, zero violations");
    });

    std::printf("acceptance summary pass=%d fail=%d total=11\n", 11 - g_failures, g_failures);
    return g_failures == 0 ? 0 : 1;
}
