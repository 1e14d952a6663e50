// Command-line front end: build groups from recipes or table files, run the
// classification checks, scan spectra, and verify the fact catalog.
//
// Exit codes: 0 = all requested checks pass, 1 = a verdict failed,
// 2 = input/build error, 3 = a size ceiling refused the computation.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "icayley/analysis.hpp"
#include "icayley/constructors.hpp"
#include "icayley/errors.hpp"
#include "icayley/group.hpp"
#include "icayley/io.hpp"
#include "icayley/morphisms.hpp"
#include "icayley/recipe.hpp"
#include "icayley/spectra.hpp"

#include "catalog_default.inc"

using namespace icayley;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr int kExitCeiling = 3;

struct Opts {
    int cap = 0;          // 0 = library defaults for search ceilings
    int ceiling = 256;    // spectra ceiling; 0 disables
    int jobs = 1;
    std::uint64_t seed = kDefaultSeed;
    bool override_size = false;
};

// Group arguments are recipes when they contain '(' and file paths otherwise.
FiniteGroup load_group_arg(const std::string& arg, const Opts& o) {
    if (arg.find('(') != std::string::npos) return group_from_recipe(arg);
    return load_group(arg, o.seed, o.override_size);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string profile_string(const FiniteGroup& g) { return order_profile(g).to_string(); }

// ---- build ----

int cmd_build(const std::string& recipe, const std::string& out, const Opts&) {
    FiniteGroup g = group_from_recipe(recipe);
    std::cout << "build " << g.recipe() << " n=" << g.size() << " abelian="
              << bool_str(is_abelian(g)) << " exponent=" << exponent(g)
              << " profile=" << profile_string(g) << "\n";
    if (!out.empty()) {
        save_group(g, out);
        std::cout << "wrote " << out << "\n";
    }
    json j{{"cmd", "build"}, {"recipe", g.recipe()},   {"n", g.size()},
           {"abelian", is_abelian(g)}, {"exponent", exponent(g)}, {"pass", true}};
    if (!out.empty()) j["path"] = out;
    emit(j);
    return kExitPass;
}

// ---- analyze ----

int cmd_analyze(const std::string& arg, const Opts& o) {
    FiniteGroup g = load_group_arg(arg, o);
    auto z = center(g);
    auto der = derived_subgroup(g);
    auto om = omega1(g, 2);
    std::string frattini = "-", cls = "-", special = "-";
    int p = 0;
    bool two_group = is_prime_power(g.size(), &p) && p == 2;
    if (two_group) {
        frattini = std::to_string((int)frattini_pgroup(g).members.size());
        auto sp = is_special_2group(g);
        special = bool_str(sp.special);
    }
    if (auto c = nilpotency_class(g)) cls = std::to_string(*c);

    std::cout << "analyze " << arg << " n=" << g.size() << " abelian=" << bool_str(is_abelian(g))
              << " exponent=" << exponent(g) << "\n";
    std::cout << "subgroups center=" << z.members.size() << " derived=" << der.members.size()
              << " omega1=" << om.members.size() << " frattini=" << frattini << " class=" << cls
              << " special=" << special << "\n";
    std::cout << "profile " << profile_string(g) << "\n";

    json j{{"cmd", "analyze"},
           {"name", arg},
           {"n", g.size()},
           {"abelian", is_abelian(g)},
           {"exponent", exponent(g)},
           {"center", z.members.size()},
           {"derived", der.members.size()},
           {"omega1", om.members.size()},
           {"class", cls},
           {"special", special},
           {"profile", profile_string(g)},
           {"pass", true}};
    emit(j);
    return kExitPass;
}

// ---- check ----

std::string tag_counts(const std::vector<MinNonabEntry>& entries) {
    std::map<std::string, int> counts;
    for (const auto& e : entries) ++counts[min_nonab_tag_name(e.tag)];
    std::string out;
    for (const auto& [k, v] : counts) {
        if (!out.empty()) out += ',';
        out += k + ":" + std::to_string(v);
    }
    return out.empty() ? "none" : out;
}

std::optional<AutomorphismMap> cached_order3_fpf(const FiniteGroup& g, const std::string& name,
                                                 const Opts& o) {
    FpfOptions fo;
    if (o.cap > 0) fo.size_ceiling = o.cap;
    auto cache = cache_file(name + "/order3fpf", "aut");
    if (cache) {
        std::ifstream probe(*cache);
        if (probe.good()) {
            probe.close();
            try {
                auto a = load_automorphism(g, *cache);
                if (a.order == 3 && is_fixed_point_free(a)) return a;
            } catch (const Error&) {
                // stale or foreign cache entry: fall through to the search
            }
        }
    }
    auto found = find_order3_fpf(g, fo);
    if (found && cache) {
        try {
            save_automorphism(*found, *cache);
        } catch (const IoError&) {
            // cache directory may be missing or read-only; the result stands
        }
    }
    return found;
}

int cmd_check(const std::string& arg, const std::string& what, const Opts& o) {
    FiniteGroup g = load_group_arg(arg, o);
    json j{{"cmd", "check"}, {"name", arg}, {"what", what}};

    if (what == "p") {
        auto r = has_property_p(g);
        j["pass"] = r.holds;
        j["pairs_checked"] = r.pairs_checked;
        if (r.holds) {
            std::cout << "check " << arg << " p pass pairs=" << r.pairs_checked << "\n";
        } else {
            const auto& w = *r.offender;
            j["witness"] = {{"x", w.x}, {"y", w.y}, {"tag", tag_name(w.tag)}};
            std::cout << "check " << arg << " p fail witness x=" << w.x << " y=" << w.y
                      << " tag=" << tag_name(w.tag)
                      << (w.capped ? " capped=true" : " size=" + std::to_string(w.subgroup_size))
                      << "\n";
        }
        emit(j);
        return r.holds ? kExitPass : kExitFail;
    }

    if (what == "a3-theorem" || what == "a3-spectral" || what == "both") {
        std::optional<bool> structural, spectral;
        std::string witness;
        if (what != "a3-spectral") structural = in_a3_theorem(g).in_class;
        if (what != "a3-theorem") {
            auto s = in_a3_spectral(g, o.ceiling);
            spectral = s.in_class;
            if (s.witness) witness = s.witness->to_string();
        }
        bool agree = !structural || !spectral || *structural == *spectral;
        bool member = structural ? *structural : *spectral;
        bool pass = agree;
        std::cout << "check " << arg << " " << what << (pass ? " pass" : " fail");
        if (what == "both") std::cout << " agree=" << bool_str(agree);
        std::cout << " member=" << bool_str(member);
        if (!witness.empty()) std::cout << " witness=" << witness;
        std::cout << "\n";
        j["pass"] = pass;
        j["member"] = member;
        if (what == "both") j["agree"] = agree;
        if (!witness.empty()) j["witness"] = witness;
        emit(j);
        return pass ? kExitPass : kExitFail;
    }

    if (what == "lemmas") {
        try {
            auto r = lemma_suite(g);
            std::string failed;
            for (const auto& c : r.checks)
                if (!c.pass) failed += (failed.empty() ? "" : ",") + c.name;
            std::cout << "check " << arg << " lemmas " << (r.all ? "pass" : "fail")
                      << " checks=" << r.checks.size();
            if (!failed.empty()) std::cout << " failed=" << failed;
            std::cout << "\n";
            j["pass"] = r.all;
            if (!failed.empty()) j["failed"] = failed;
            emit(j);
            return r.all ? kExitPass : kExitFail;
        } catch (const PreconditionViolated& e) {
            std::cout << "check " << arg << " lemmas fail precondition=\"" << e.what() << "\"\n";
            j["pass"] = false;
            j["precondition"] = e.what();
            emit(j);
            return kExitFail;
        }
    }

    if (what == "minnonab") {
        auto entries = minimal_nonabelian_subgroups(g);
        auto q8 = no_q8_check(g);
        bool shape = !entries.empty();
        for (const auto& e : entries)
            shape = shape && (e.tag == MinNonabTag::H16 || e.tag == MinNonabTag::H32);
        bool pass = shape && q8.ok;
        std::cout << "check " << arg << " minnonab " << (pass ? "pass" : "fail")
                  << " count=" << entries.size() << " tags=" << tag_counts(entries)
                  << " q8free=" << bool_str(q8.ok) << "\n";
        j["pass"] = pass;
        j["count"] = entries.size();
        j["tags"] = tag_counts(entries);
        j["q8free"] = q8.ok;
        emit(j);
        return pass ? kExitPass : kExitFail;
    }

    if (what == "frobenius") {
        auto found = cached_order3_fpf(g, arg, o);
        if (!found) {
            std::cout << "check " << arg << " frobenius fail none exhaustive=true\n";
            j["pass"] = false;
            j["found"] = false;
            emit(j);
            return kExitFail;
        }
        auto fr = verify_frobenius(g, *found, 3);
        std::cout << "check " << arg << " frobenius " << (fr.ok ? "pass" : "fail")
                  << " order=3 fixfree=" << bool_str(fr.ok) << "\n";
        j["pass"] = fr.ok;
        j["found"] = true;
        emit(j);
        return fr.ok ? kExitPass : kExitFail;
    }

    throw PreconditionViolated("unknown check: " + what);
}

// ---- aut ----

int cmd_aut(const std::string& arg, const Opts& o) {
    FiniteGroup g = load_group_arg(arg, o);
    MorphSearchOptions mo;
    if (o.cap > 0) mo.size_ceiling = o.cap;
    auto auts = automorphism_group(g, mo);
    std::cout << "aut " << arg << " n=" << g.size() << " count=" << auts.size() << "\n";
    emit(json{{"cmd", "aut"}, {"name", arg}, {"n", g.size()}, {"count", auts.size()},
              {"pass", true}});
    return kExitPass;
}

// ---- fpf ----

int cmd_fpf(const std::string& arg, const std::string& out, const Opts& o) {
    FiniteGroup g = load_group_arg(arg, o);
    auto found = cached_order3_fpf(g, arg, o);
    json j{{"cmd", "fpf"}, {"name", arg}, {"n", g.size()}};
    if (!found) {
        std::cout << "fpf " << arg << " none exhaustive=true\n";
        j["found"] = false;
        j["pass"] = false;
        emit(j);
        return kExitFail;
    }
    auto fr = verify_frobenius(g, *found, 3);
    std::string gens, imgs;
    for (Elem e : g.gens()) {
        gens += (gens.empty() ? "" : ",") + std::to_string(e);
        imgs += (imgs.empty() ? "" : ",") + std::to_string(found->img[(std::size_t)e]);
    }
    std::cout << "fpf " << arg << " found order=3 frobenius=" << bool_str(fr.ok) << " gens="
              << gens << "->" << imgs << "\n";
    if (!out.empty()) {
        save_automorphism(*found, out);
        std::cout << "wrote " << out << "\n";
    }
    j["found"] = true;
    j["frobenius"] = fr.ok;
    j["pass"] = fr.ok;
    if (!out.empty()) j["path"] = out;
    emit(j);
    return fr.ok ? kExitPass : kExitFail;
}

// ---- spectrum ----

ConnectionSet parse_set(const std::string& text) {
    std::array<Elem, 3> m{};
    std::istringstream is(text);
    std::string tok;
    int count = 0;
    while (std::getline(is, tok, ',')) {
        if (count >= 3) throw PreconditionViolated("a connection set has exactly three members");
        try {
            m[(std::size_t)count++] = std::stoi(tok);
        } catch (const std::exception&) {
            throw PreconditionViolated("connection set members must be integers");
        }
    }
    if (count != 3) throw PreconditionViolated("a connection set has exactly three members");
    std::sort(m.begin(), m.end());
    return ConnectionSet{m};
}

int cmd_spectrum(const std::string& arg, const std::string& set_text, const Opts& o) {
    FiniteGroup g = load_group_arg(arg, o);
    if (!set_text.empty()) {
        auto rep = integral_spectrum_3valent(g, parse_set(set_text), o.ceiling);
        std::cout << rep.to_string() << "\n";
        emit(json{{"cmd", "spectrum"}, {"name", arg}, {"set", rep.set.to_string()},
                  {"integral", rep.integral}, {"pass", true}});
        return kExitPass;
    }
    if (o.ceiling > 0 && g.size() > o.ceiling)
        throw SizeCeiling("group order " + std::to_string(g.size()) +
                          " exceeds the spectrum ceiling " + std::to_string(o.ceiling));
    auto sets = enumerate_3_subsets(g);
    bool all = !sets.empty();
    std::string witness;
    for (const auto& x : sets) {
        auto rep = integral_spectrum_3valent(g, x, o.ceiling);
        std::cout << rep.to_string() << "\n";
        if (!rep.integral && witness.empty()) witness = x.to_string();
        all = all && rep.integral;
    }
    std::cout << "spectral " << arg << " sets=" << sets.size() << " member=" << bool_str(all);
    if (!witness.empty()) std::cout << " witness=" << witness;
    std::cout << "\n";
    json j{{"cmd", "spectrum"}, {"name", arg}, {"sets", sets.size()}, {"member", all},
           {"pass", true}};
    if (!witness.empty()) j["witness"] = witness;
    emit(j);
    return kExitPass;
}

// ---- catalog ----

struct CatalogEntry {
    std::string name;
    std::string recipe;
    std::vector<std::pair<std::string, std::string>> facts;
    int line = 0;
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
    std::vector<CatalogEntry> entries;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
        if (body.empty()) continue;
        auto p1 = body.find('|');
        auto p2 = p1 == std::string::npos ? std::string::npos : body.find('|', p1 + 1);
        if (p2 == std::string::npos || body.find('|', p2 + 1) != std::string::npos)
            throw FormatError("expected '<name> | <recipe> | <facts>'", lineno);
        CatalogEntry e;
        e.name = trim(body.substr(0, p1));
        e.recipe = trim(body.substr(p1 + 1, p2 - p1 - 1));
        e.line = lineno;
        if (e.name.empty() || e.recipe.empty())
            throw FormatError("catalog entry needs a name and a recipe", lineno);
        std::istringstream fs(body.substr(p2 + 1));
        std::string tok;
        while (fs >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 >= tok.size())
                throw FormatError("facts must look like key=value: '" + tok + "'", lineno);
            std::string key = tok.substr(0, eq);
            if (key != "order" && key != "p" && key != "a3" && key != "family" &&
                key != "special")
                throw FormatError("unknown fact key '" + key + "'", lineno);
            e.facts.emplace_back(key, tok.substr(eq + 1));
        }
        if (e.facts.empty()) throw FormatError("catalog entry has no facts", lineno);
        entries.push_back(std::move(e));
    }
    return entries;
}

struct EntryResult {
    bool pass = false;
    std::vector<std::string> failures;
    std::string error;
};

bool parse_bool_fact(const std::string& v, const CatalogEntry& e) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw FormatError("expected true/false, got '" + v + "'", e.line);
}

EntryResult run_entry(const CatalogEntry& e) {
    EntryResult r;
    try {
        FiniteGroup g = group_from_recipe(e.recipe);
        std::optional<bool> p_verdict;
        auto property_p = [&] {
            if (!p_verdict) p_verdict = has_property_p(g).holds;
            return *p_verdict;
        };
        for (const auto& [key, value] : e.facts) {
            bool ok = true;
            std::string got;
            if (key == "order") {
                ok = std::to_string(g.size()) == value;
                got = std::to_string(g.size());
            } else if (key == "p") {
                bool actual = property_p();
                ok = actual == parse_bool_fact(value, e);
                got = bool_str(actual);
            } else if (key == "a3") {
                bool actual = in_a3_theorem(g).in_class;
                ok = actual == parse_bool_fact(value, e);
                got = bool_str(actual);
            } else if (key == "family") {
                if (value.size() != 1) throw FormatError("family must be a/b/c/d", e.line);
                auto cert = verify_family(g, value[0]);
                ok = cert.ok;
                if (!ok) {
                    got = "certificate failed:";
                    for (const auto& c : cert.clauses)
                        if (!c.pass) got += " " + c.name;
                }
            } else if (key == "special") {
                bool actual = false;
                try {
                    actual = is_special_2group(g).special;
                } catch (const Error&) {
                    actual = false;  // not a 2-group
                }
                ok = actual == parse_bool_fact(value, e);
                got = bool_str(actual);
            }
            if (!ok) r.failures.push_back(key + "=" + value + " got " + got);
        }
    } catch (const Error& ex) {
        r.error = ex.what();
    }
    r.pass = r.failures.empty() && r.error.empty();
    return r;
}

int cmd_catalog(const std::string& path, bool print_default, const Opts& o) {
    std::string text;
    if (print_default) {
        std::cout << kDefaultCatalog;
        return kExitPass;
    }
    if (path.empty()) {
        text = kDefaultCatalog;
    } else {
        std::ifstream f(path);
        if (!f) throw IoError("cannot open: " + path);
        std::ostringstream os;
        os << f.rdbuf();
        text = os.str();
    }
    auto entries = parse_catalog(text);

    std::vector<EntryResult> results(entries.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < entries.size();)
            results[i] = run_entry(entries[i]);
    };
    int jobs = std::max(1, o.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    int passed = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& r = results[i];
        if (r.pass) {
            ++passed;
            std::cout << "catalog " << entries[i].name << " pass\n";
        } else if (!r.error.empty()) {
            std::cout << "catalog " << entries[i].name << " error \"" << r.error << "\"\n";
        } else {
            std::cout << "catalog " << entries[i].name << " fail";
            for (const auto& f : r.failures) std::cout << " [" << f << "]";
            std::cout << "\n";
        }
    }
    bool pass = passed == (int)entries.size();
    std::cout << "catalog summary pass=" << passed << " fail=" << entries.size() - passed
              << " total=" << entries.size() << "\n";
    emit(json{{"cmd", "catalog"}, {"total", entries.size()}, {"passed", passed},
              {"pass", pass}});
    return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite group engine for the cubic integral Cayley graph classification"};
    app.require_subcommand(1);
    app.fallthrough(true);

    Opts opts;
    app.add_option("--cap", opts.cap,
                   "size ceiling for isomorphism/automorphism searches (0 = defaults)");
    app.add_option("--ceiling", opts.ceiling, "spectra size ceiling (0 disables)")
        ->default_val(256);
    app.add_option("--jobs", opts.jobs, "worker threads for catalog runs")->default_val(1);
    app.add_option("--seed", opts.seed, "seed for sampled associativity checks on file loads");
    app.add_flag("--override-size", opts.override_size,
                 "allow loading tables above the default size ceiling");

    std::string build_recipe, build_out;
    auto* build = app.add_subcommand("build", "evaluate a recipe and optionally save the table");
    build->add_option("recipe", build_recipe, "group recipe")->required();
    build->add_option("out", build_out, "output path (cgt1 format)");

    std::string analyze_arg;
    auto* analyze = app.add_subcommand("analyze", "structural report for a group");
    analyze->add_option("group", analyze_arg, "recipe or cgt1 path")->required();

    std::string check_arg, check_what;
    auto* check = app.add_subcommand("check", "run a classification check");
    check->add_option("group", check_arg, "recipe or cgt1 path")->required();
    check
        ->add_option("what", check_what,
                     "p | a3-theorem | a3-spectral | both | lemmas | minnonab | frobenius")
        ->required()
        ->check(CLI::IsMember(
            {"p", "a3-theorem", "a3-spectral", "both", "lemmas", "minnonab", "frobenius"}));

    std::string aut_arg;
    auto* aut = app.add_subcommand("aut", "count the automorphism group");
    aut->add_option("group", aut_arg, "recipe or cgt1 path")->required();

    std::string fpf_arg, fpf_out;
    auto* fpf = app.add_subcommand("fpf", "search for an order-3 fixed-point-free automorphism");
    fpf->add_option("group", fpf_arg, "recipe or cgt1 path")->required();
    fpf->add_option("--out", fpf_out, "save the found map (aut1 format)");

    std::string spec_arg, spec_set;
    auto* spectrum = app.add_subcommand("spectrum", "exact spectra of the cubic Cayley graphs");
    spectrum->add_option("group", spec_arg, "recipe or cgt1 path")->required();
    spectrum->add_option("--set", spec_set, "single connection set i,j,k (default: scan all)");

    std::string catalog_path;
    bool catalog_print = false;
    auto* catalog = app.add_subcommand("catalog", "verify expected facts for a list of groups");
    catalog->add_option("path", catalog_path, "catalog file (default: the embedded catalog)");
    catalog->add_flag("--print-default", catalog_print, "print the embedded catalog and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints usage/help; 0 for --help itself
        return code == 0 ? kExitPass : kExitError;
    }

    try {
        if (build->parsed()) return cmd_build(build_recipe, build_out, opts);
        if (analyze->parsed()) return cmd_analyze(analyze_arg, opts);
        if (check->parsed()) return cmd_check(check_arg, check_what, opts);
        if (aut->parsed()) return cmd_aut(aut_arg, opts);
        if (fpf->parsed()) return cmd_fpf(fpf_arg, fpf_out, opts);
        if (spectrum->parsed()) return cmd_spectrum(spec_arg, spec_set, opts);
        if (catalog->parsed()) return cmd_catalog(catalog_path, catalog_print, opts);
    } catch (const SizeCeiling& e) {
        std::cerr << "error ceiling: " << e.what() << "\n";
        return kExitCeiling;
    } catch (const ParseError& e) {
        std::cerr << "error parse (offset " << e.position << "): " << e.what() << "\n";
        return kExitError;
    } catch (const FormatError& e) {
        std::cerr << "error format (line " << e.line << "): " << e.what() << "\n";
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
