#include "icayley/io.hpp"

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "icayley/constructors.hpp"
#include "icayley/errors.hpp"

namespace icayley {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path);
    return f;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(f, line)) lines.push_back(line);
    return lines;
}

void flush_or_throw(std::ofstream& f, const std::string& path) {
    f.flush();
    if (!f) throw IoError("write failed: " + path);
}

bool is_blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace((unsigned char)c)) return false;
    return true;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int to_int(const std::string& tok, int line, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw FormatError(what + " is not an integer: '" + tok + "'", line);
    }
    if (used != tok.size()) throw FormatError(what + " is not an integer: '" + tok + "'", line);
    return v;
}

constexpr const char* kRecipePrefix = "# recipe: ";

}  // namespace

void save_group(const FiniteGroup& g, const std::string& path) {
    const auto& labels = g.data().labels;
    for (const std::string& l : labels) {
        if (l.empty()) throw PreconditionViolated("empty labels cannot be saved");
        for (char c : l)
            if (std::isspace((unsigned char)c))
                throw PreconditionViolated("labels with whitespace cannot be saved");
    }
    auto f = open_out(path);
    f << "cgt1 " << g.size() << "\n";
    if (!labels.empty()) {
        f << "labels";
        for (const std::string& l : labels) f << ' ' << l;
        f << "\n";
    }
    if (!g.recipe().empty()) f << kRecipePrefix << g.recipe() << "\n";
    for (Elem a = 0; a < g.size(); ++a) {
        for (Elem b = 0; b < g.size(); ++b) f << (b ? " " : "") << g.mul(a, b);
        f << "\n";
    }
    flush_or_throw(f, path);
}

FiniteGroup load_group(const std::string& path, std::uint64_t seed, bool allow_oversize) {
    auto lines = read_lines(path);
    if (lines.empty()) throw FormatError("empty file", 1);

    auto header = split_ws(lines[0]);
    if (header.size() != 2 || header[0] != "cgt1")
        throw FormatError("expected header 'cgt1 <n>'", 1);
    int n = to_int(header[1], 1, "group order");
    if (n < 1) throw FormatError("group order must be positive", 1);

    std::vector<std::string> labels;
    std::string recipe;
    std::vector<std::vector<int>> table;
    table.reserve((std::size_t)n);

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const int lineno = (int)li + 1;
        const std::string& line = lines[li];
        if (is_blank(line)) continue;
        if (line[0] == '#') {
            if (line.rfind(kRecipePrefix, 0) == 0) recipe = line.substr(std::string(kRecipePrefix).size());
            continue;
        }
        auto toks = split_ws(line);
        if (!toks.empty() && toks[0] == "labels") {
            if ((int)table.size() > 0)
                throw FormatError("labels must come before the table rows", lineno);
            if ((int)toks.size() != n + 1)
                throw FormatError("expected " + std::to_string(n) + " labels", lineno);
            labels.assign(toks.begin() + 1, toks.end());
            continue;
        }
        if ((int)table.size() == n)
            throw FormatError("unexpected content after the table", lineno);
        if ((int)toks.size() != n)
            throw FormatError("expected " + std::to_string(n) + " indices in a table row", lineno);
        std::vector<int> row(n);
        std::vector<char> seen(n, 0);
        for (int c = 0; c < n; ++c) {
            int v = to_int(toks[(std::size_t)c], lineno, "table entry");
            if (v < 0 || v >= n)
                throw FormatError("table entry " + std::to_string(v) + " is out of range", lineno);
            if (seen[v])
                throw FormatError("row is not a permutation of 0.." + std::to_string(n - 1),
                                  lineno);
            seen[v] = 1;
            row[c] = v;
        }
        table.push_back(std::move(row));
    }
    if ((int)table.size() != n)
        throw FormatError("expected " + std::to_string(n) + " table rows", (int)lines.size() + 1);

    FiniteGroup g = group_from_table(table, std::move(labels), seed, allow_oversize);
    if (!recipe.empty()) g = with_recipe(g, recipe);
    return g;
}

void save_presentation(const CTPresentation& pres, const std::string& path) {
    pres.validate();
    auto f = open_out(path);
    f << "ctp1 p=" << pres.p << " m=" << pres.m << " s=" << pres.s << "\n";
    auto digits = [&](const std::vector<int>& v) {
        for (int c = 0; c < pres.s; ++c) f << ' ' << (c < (int)v.size() ? v[(std::size_t)c] : 0);
        f << "\n";
    };
    for (int i = 0; i < pres.m; ++i) {
        f << "sq " << i;
        digits(pres.sq[(std::size_t)i]);
    }
    for (int i = 0; i < pres.m; ++i)
        for (int j = i + 1; j < pres.m; ++j) {
            f << "comm " << i << ' ' << j;
            digits(pres.get_comm(i, j));
        }
    flush_or_throw(f, path);
}

CTPresentation load_presentation(const std::string& path) {
    auto lines = read_lines(path);
    if (lines.empty()) throw FormatError("empty file", 1);

    auto header = split_ws(lines[0]);
    auto keyed = [&](const std::string& tok, const std::string& key) -> int {
        if (tok.rfind(key + "=", 0) != 0)
            throw FormatError("expected header 'ctp1 p=<p> m=<m> s=<s>'", 1);
        return to_int(tok.substr(key.size() + 1), 1, key);
    };
    if (header.size() != 4 || header[0] != "ctp1")
        throw FormatError("expected header 'ctp1 p=<p> m=<m> s=<s>'", 1);

    CTPresentation pres;
    pres.p = keyed(header[1], "p");
    pres.m = keyed(header[2], "m");
    pres.s = keyed(header[3], "s");
    if (pres.m < 1 || pres.s < 0) throw FormatError("presentation shape is invalid", 1);
    pres.sq.assign((std::size_t)pres.m, std::vector<int>((std::size_t)pres.s, 0));

    auto vec_of = [&](const std::vector<std::string>& toks, std::size_t from, int lineno) {
        if ((int)(toks.size() - from) != pres.s)
            throw FormatError("expected " + std::to_string(pres.s) + " exponent digits", lineno);
        std::vector<int> v;
        for (std::size_t t = from; t < toks.size(); ++t)
            v.push_back(to_int(toks[t], lineno, "exponent digit"));
        return v;
    };

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const int lineno = (int)li + 1;
        const std::string& line = lines[li];
        if (is_blank(line) || line[0] == '#') continue;
        auto toks = split_ws(line);
        if (toks[0] == "sq") {
            if (toks.size() < 2) throw FormatError("sq needs a generator index", lineno);
            int i = to_int(toks[1], lineno, "generator index");
            if (i < 0 || i >= pres.m)
                throw FormatError("generator index " + std::to_string(i) + " is out of range",
                                  lineno);
            pres.sq[(std::size_t)i] = vec_of(toks, 2, lineno);
        } else if (toks[0] == "comm") {
            if (toks.size() < 3) throw FormatError("comm needs two generator indices", lineno);
            int i = to_int(toks[1], lineno, "generator index");
            int j = to_int(toks[2], lineno, "generator index");
            if (i < 0 || j < 0 || i >= pres.m || j >= pres.m || i >= j)
                throw FormatError("comm needs indices i < j within range", lineno);
            pres.set_comm(i, j, vec_of(toks, 3, lineno));
        } else {
            throw FormatError("expected an 'sq' or 'comm' line", lineno);
        }
    }
    pres.validate();
    return pres;
}

void save_automorphism(const AutomorphismMap& a, const std::string& path) {
    auto f = open_out(path);
    f << "aut1 " << a.group.size() << "\n";
    for (Elem e = 0; e < a.group.size(); ++e) f << (e ? " " : "") << a.img[(std::size_t)e];
    f << "\n";
    flush_or_throw(f, path);
}

AutomorphismMap load_automorphism(const FiniteGroup& g, const std::string& path) {
    auto lines = read_lines(path);
    if (lines.empty()) throw FormatError("empty file", 1);

    auto header = split_ws(lines[0]);
    if (header.size() != 2 || header[0] != "aut1")
        throw FormatError("expected header 'aut1 <n>'", 1);
    int n = to_int(header[1], 1, "order");
    if (n != g.size())
        throw FormatError("file is for order " + std::to_string(n) + ", group has order " +
                              std::to_string(g.size()),
                          1);

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const int lineno = (int)li + 1;
        const std::string& line = lines[li];
        if (is_blank(line) || (line[0] == '#')) continue;
        auto toks = split_ws(line);
        if (toks[0] == "gens:") {
            std::vector<Elem> src, img;
            bool after_arrow = false;
            for (std::size_t t = 1; t < toks.size(); ++t) {
                if (toks[t] == "->") {
                    if (after_arrow) throw FormatError("duplicate '->'", lineno);
                    after_arrow = true;
                    continue;
                }
                int v = to_int(toks[t], lineno, "element index");
                if (v < 0 || v >= n)
                    throw FormatError("element index " + std::to_string(v) + " is out of range",
                                      lineno);
                (after_arrow ? img : src).push_back(v);
            }
            if (!after_arrow || src.empty() || src.size() != img.size())
                throw FormatError("expected 'gens: i1 i2 ... -> j1 j2 ...'", lineno);
            auto hom = hom_from_images(g, src, g, img);
            if (!hom.ok())
                throw NotAutomorphism("generator images do not extend to an endomorphism");
            std::string ref = "(";
            for (std::size_t t = 0; t < src.size(); ++t)
                ref += (t ? "," : "") + std::to_string(src[t]);
            ref += "->";
            for (std::size_t t = 0; t < img.size(); ++t)
                ref += (t ? "," : "") + std::to_string(img[t]);
            ref += ")";
            return make_automorphism(g, std::move(*hom.img), std::move(ref));
        }
        if ((int)toks.size() != n)
            throw FormatError("expected " + std::to_string(n) + " image indices", lineno);
        std::vector<Elem> img;
        for (const auto& tok : toks) {
            int v = to_int(tok, lineno, "image index");
            if (v < 0 || v >= n)
                throw FormatError("image index " + std::to_string(v) + " is out of range", lineno);
            img.push_back(v);
        }
        return make_automorphism(g, std::move(img));
    }
    throw FormatError("missing the image line", (int)lines.size() + 1);
}

std::optional<std::string> cache_directory() {
    const char* v = std::getenv("ICAYLEY_CACHE_DIR");
    if (!v || !*v) return std::nullopt;
    return std::string(v);
}

std::optional<std::string> cache_file(const std::string& key, const std::string& ext) {
    auto dir = cache_directory();
    if (!dir) return std::nullopt;
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << *dir << "/" << std::hex << h << "." << ext;
    return os.str();
}

}  // namespace icayley
