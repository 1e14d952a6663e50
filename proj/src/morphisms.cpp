#include "icayley/morphisms.hpp"

#include <algorithm>
#include <numeric>

#include "icayley/errors.hpp"

namespace icayley {

namespace {

bool is_identity_map(const std::vector<Elem>& img) {
    for (std::size_t i = 0; i < img.size(); ++i)
        if (img[i] != static_cast<Elem>(i)) return false;
    return true;
}

int perm_order(const std::vector<Elem>& img) {
    int n = static_cast<int>(img.size());
    std::vector<char> seen(n, 0);
    unsigned long long ord = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        unsigned long long len = 0;
        int x = i;
        while (!seen[x]) {
            seen[x] = 1;
            x = img[x];
            ++len;
        }
        ord = std::lcm(ord, len);
        if (ord > 1'000'000'000ull) throw Error("permutation order overflow");
    }
    return static_cast<int>(ord);
}

// Backtracking search for multiplicative bijections G -> H, presented by
// images of a generating list. A partial choice is propagated by closing
// the assigned set under right multiplication by the placed generators;
// any conflict kills the branch. Leaves get a full O(n^2) verification.
struct MapSearch {
    const FiniteGroup& G;
    const FiniteGroup& H;
    bool fpf3;          // restrict to fixed-point-free maps of order 3 (G == H)
    long budget;
    long nodes = 0;
    bool stop_first;
    std::optional<long> max_results;

    std::vector<Elem> gens;
    std::vector<std::vector<Elem>> cand;
    std::vector<Elem> chosen;
    std::vector<int> gclass, hclass;
    std::vector<std::vector<Elem>> out;

    std::vector<Elem> img;
    std::vector<char> used;
    std::vector<Elem> queue;
    bool done = false;

    MapSearch(const FiniteGroup& g, const FiniteGroup& h, bool fpf, long budget_,
              bool stop_first_, std::optional<long> max_results_)
        : G(g), H(h), fpf3(fpf), budget(budget_), stop_first(stop_first_),
          max_results(max_results_) {
        gens = generating_set(G);
        gclass = conjugacy_class_sizes(G);
        hclass = fpf3 || G.same_table(H) ? gclass : conjugacy_class_sizes(H);
        build_candidates();
    }

    void build_candidates() {
        cand.resize(gens.size());
        chosen.assign(gens.size(), -1);
        for (std::size_t t = 0; t < gens.size(); ++t) {
            Elem g = gens[t];
            for (Elem h = 0; h < H.size(); ++h) {
                if (H.order(h) != G.order(g)) continue;
                if (hclass[h] != gclass[g]) continue;
                if (fpf3) {
                    if (h == g) continue;
                    if (G.comm(g, h) != 0) continue;
                    Elem third = G.inv(G.mul(g, h));
                    if (G.order(third) != G.order(g)) continue;
                    if (gclass[third] != gclass[g]) continue;
                }
                cand[t].push_back(h);
            }
        }
    }

    bool assign(Elem y, Elem iy) {
        if (img[y] != -1) return img[y] == iy;
        if (used[iy]) return false;
        if (G.order(y) != H.order(iy)) return false;
        if (gclass[y] != hclass[iy]) return false;
        if (fpf3 && y != 0) {
            if (iy == y) return false;
            if (G.comm(y, iy) != 0) return false;  // x commutes with x^phi
        }
        img[y] = iy;
        used[iy] = 1;
        queue.push_back(y);
        if (fpf3 && y != 0) {
            // phi^2(y) = (y phi(y))^-1, so the image of iy is forced
            Elem t = G.inv(G.mul(y, iy));
            if (!assign(iy, t)) return false;
        }
        return true;
    }

    bool propagate(int placed) {
        if (++nodes > budget) throw BudgetExceeded("search budget exhausted", (long)out.size());
        img.assign(G.size(), -1);
        used.assign(H.size(), 0);
        queue.clear();
        img[0] = 0;
        used[0] = 1;
        queue.push_back(0);
        for (int t = 0; t < placed; ++t)
            if (!assign(gens[t], chosen[t])) return false;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Elem x = queue[head];
            for (int t = 0; t < placed; ++t) {
                Elem y = G.mul(x, gens[t]);
                Elem iy = H.mul(img[x], chosen[t]);
                if (!assign(y, iy)) return false;
            }
        }
        return true;
    }

    bool verify_leaf() {
        int n = G.size();
        for (Elem x = 0; x < n; ++x)
            if (img[x] == -1) return false;  // gens failed to generate; defensive
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                if (img[G.mul(x, y)] != H.mul(img[x], img[y])) return false;
        if (fpf3) {
            if (is_identity_map(img)) return false;
            for (Elem x = 0; x < n; ++x) {
                if (x != 0 && img[x] == x) return false;
                if (img[img[img[x]]] != x) return false;
            }
        }
        return true;
    }

    void rec(std::size_t level) {
        if (done) return;
        if (level == gens.size()) {
            if (verify_leaf()) {
                out.push_back(img);
                if (stop_first || (max_results && (long)out.size() >= *max_results)) done = true;
            }
            return;
        }
        for (Elem h : cand[level]) {
            if (done) return;
            chosen[level] = h;
            if (propagate(static_cast<int>(level) + 1)) rec(level + 1);
        }
    }

    void run() {
        if (G.size() != H.size()) return;
        if (propagate(0)) rec(0);
    }
};

Fingerprint fp_of(int order, bool abelian, std::initializer_list<std::pair<int, int>> prof) {
    Fingerprint f;
    f.order = order;
    f.abelian = abelian;
    for (auto [o, c] : prof)
        for (int i = 0; i < c; ++i) f.profile.add(o);
    return f;
}

}  // namespace

AutomorphismMap make_automorphism(const FiniteGroup& g, std::vector<Elem> img, std::string ref) {
    int n = g.size();
    if (static_cast<int>(img.size()) != n) throw NotAutomorphism("image list has wrong length");
    std::vector<char> seen(n, 0);
    for (Elem v : img) {
        if (v < 0 || v >= n || seen[v]) throw NotAutomorphism("image list is not a bijection");
        seen[v] = 1;
    }
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (img[g.mul(x, y)] != g.mul(img[x], img[y]))
                throw NotAutomorphism("map is not multiplicative");
    AutomorphismMap a{g, std::move(img), 1, std::move(ref)};
    a.order = perm_order(a.img);
    return a;
}

AutomorphismMap identity_automorphism(const FiniteGroup& g) {
    std::vector<Elem> img(g.size());
    std::iota(img.begin(), img.end(), 0);
    return AutomorphismMap{g, std::move(img), 1, "id"};
}

AutomorphismMap inversion_automorphism(const FiniteGroup& g) {
    if (!is_abelian(g)) throw NotAbelian("inversion is only an automorphism of abelian groups");
    std::vector<Elem> img(g.size());
    for (Elem x = 0; x < g.size(); ++x) img[x] = g.inv(x);
    AutomorphismMap a{g, std::move(img), 1, "inv"};
    a.order = perm_order(a.img);
    return a;
}

AutomorphismMap compose(const AutomorphismMap& a, const AutomorphismMap& b) {
    if (!a.group.same_table(b.group)) throw Error("composing automorphisms of different groups");
    std::vector<Elem> img(a.img.size());
    for (std::size_t x = 0; x < img.size(); ++x) img[x] = a.img[b.img[x]];
    AutomorphismMap c{a.group, std::move(img), 1, ""};
    c.order = perm_order(c.img);
    return c;
}

AutomorphismMap aut_power(const AutomorphismMap& a, int k) {
    if (k < 0) throw Error("aut_power expects k >= 0");
    AutomorphismMap r = identity_automorphism(a.group);
    for (int i = 0; i < k; ++i) r = compose(r, a);
    return r;
}

HomResult hom_from_images(const FiniteGroup& g, const std::vector<Elem>& gens,
                          const FiniteGroup& h, const std::vector<Elem>& images) {
    if (gens.size() != images.size()) throw OrderMismatch("one image per generator required");
    int n = g.size();
    for (Elem x : gens)
        if (x < 0 || x >= n) throw OrderMismatch("generator out of range");
    for (Elem y : images)
        if (y < 0 || y >= h.size()) throw OrderMismatch("image out of range");

    std::vector<Elem> img(n, -1);
    img[0] = 0;
    std::vector<Elem> queue{0};
    HomResult res;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Elem x = queue[head];
        for (std::size_t t = 0; t < gens.size(); ++t) {
            Elem y = g.mul(x, gens[t]);
            Elem iy = h.mul(img[x], images[t]);
            if (img[y] == -1) {
                img[y] = iy;
                queue.push_back(y);
            } else if (img[y] != iy) {
                res.failure = {x, gens[t]};
                return res;
            }
        }
    }
    if (static_cast<int>(queue.size()) != n)
        throw NotGenerating("the given elements do not generate the group");
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (img[g.mul(x, y)] != h.mul(img[x], img[y])) {
                res.failure = {x, y};
                return res;
            }
    res.img = std::move(img);
    return res;
}

Subgroup fix(const AutomorphismMap& phi) {
    std::vector<Elem> members;
    for (Elem x = 0; x < phi.group.size(); ++x)
        if (phi.img[x] == x) members.push_back(x);
    return Subgroup{phi.group, std::move(members)};
}

bool is_fixed_point_free(const AutomorphismMap& phi) {
    for (Elem x = 1; x < phi.group.size(); ++x)
        if (phi.img[x] == x) return false;
    return true;
}

FrobeniusReport verify_frobenius(const FiniteGroup& k, const AutomorphismMap& phi, int m) {
    if (!phi.group.same_table(k)) throw Error("automorphism belongs to a different group");
    if (m < 2) throw PreconditionViolated("complement order must be at least 2");
    FrobeniusReport rep;
    rep.ok = true;
    AutomorphismMap pw = identity_automorphism(k);
    for (int i = 1; i < m; ++i) {
        pw = compose(pw, phi);
        for (Elem x = 1; x < k.size(); ++x)
            if (pw.img[x] == x) {
                rep.ok = false;
                if (rep.offenders.size() < 8) rep.offenders.emplace_back(i, x);
            }
    }
    pw = compose(pw, phi);  // phi^m must be the identity
    if (!is_identity_map(pw.img)) {
        rep.ok = false;
        rep.offenders.emplace_back(m, -1);
    }
    return rep;
}

std::vector<AutomorphismMap> automorphism_group(const FiniteGroup& g, const MorphSearchOptions& opt) {
    if (g.size() > opt.size_ceiling) throw SizeCeiling("group too large for automorphism search");
    MapSearch s(g, g, false, opt.node_budget, false, std::nullopt);
    s.run();
    std::vector<AutomorphismMap> res;
    res.reserve(s.out.size());
    for (auto& img : s.out) {
        AutomorphismMap a{g, std::move(img), 1, ""};
        a.order = perm_order(a.img);
        res.push_back(std::move(a));
    }
    return res;
}

std::optional<AutomorphismMap> find_order3_fpf(const FiniteGroup& g, const FpfOptions& opt) {
    if (g.size() > opt.size_ceiling) throw SizeCeiling("group too large for the fpf search");
    // orbits of a fixed-point-free order-3 map partition G\{1} into triples
    if (g.size() % 3 != 1) return std::nullopt;
    MapSearch s(g, g, true, opt.node_budget, true, std::nullopt);
    s.run();
    if (s.out.empty()) return std::nullopt;
    AutomorphismMap a{g, std::move(s.out.front()), 3, ""};
    a.order = perm_order(a.img);
    return a;
}

std::optional<std::vector<Elem>> isomorphic_bruteforce(const FiniteGroup& g, const FiniteGroup& h,
                                                       const MorphSearchOptions& opt) {
    if (g.size() != h.size()) return std::nullopt;
    if (g.size() > opt.size_ceiling) throw SizeCeiling("group too large for isomorphism search");
    if (fingerprint(g) != fingerprint(h)) return std::nullopt;
    auto gc = conjugacy_class_sizes(g), hc = conjugacy_class_sizes(h);
    {
        auto a = gc, b = hc;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    MapSearch s(g, h, false, opt.node_budget, true, std::nullopt);
    s.run();
    if (s.out.empty()) return std::nullopt;
    return std::move(s.out.front());
}

const char* tag_name(AllowedTag t) {
    switch (t) {
        case AllowedTag::Z2: return "Z2";
        case AllowedTag::Z2xZ2: return "Z2xZ2";
        case AllowedTag::Z4: return "Z4";
        case AllowedTag::Z6: return "Z6";
        case AllowedTag::Z2xZ4: return "Z2xZ4";
        case AllowedTag::Z2xZ6: return "Z2xZ6";
        case AllowedTag::A4: return "A4";
        case AllowedTag::D6: return "D6";
        case AllowedTag::Other: return "OTHER";
    }
    return "OTHER";
}

bool tag_allowed_pair(AllowedTag t) { return t != AllowedTag::Other && t != AllowedTag::D6; }

AllowedTag identify_small(const Fingerprint& f) {
    static const std::vector<std::pair<Fingerprint, AllowedTag>> table = {
        {fp_of(2, true, {{1, 1}, {2, 1}}), AllowedTag::Z2},
        {fp_of(4, true, {{1, 1}, {2, 1}, {4, 2}}), AllowedTag::Z4},
        {fp_of(4, true, {{1, 1}, {2, 3}}), AllowedTag::Z2xZ2},
        {fp_of(6, true, {{1, 1}, {2, 1}, {3, 2}, {6, 2}}), AllowedTag::Z6},
        {fp_of(8, true, {{1, 1}, {2, 3}, {4, 4}}), AllowedTag::Z2xZ4},
        {fp_of(12, true, {{1, 1}, {2, 3}, {3, 2}, {6, 6}}), AllowedTag::Z2xZ6},
        {fp_of(12, false, {{1, 1}, {2, 3}, {3, 8}}), AllowedTag::A4},
        {fp_of(6, false, {{1, 1}, {2, 3}, {3, 2}}), AllowedTag::D6},
    };
    for (const auto& [fp, tag] : table)
        if (fp == f) return tag;
    return AllowedTag::Other;
}

AllowedTag identify_allowed(const Subgroup& h) { return identify_small(fingerprint(h)); }

}  // namespace icayley
