#include "icayley/analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "icayley/constructors.hpp"

namespace icayley {

namespace {

Fingerprint fp_lit(int order, bool abelian, std::initializer_list<std::pair<int, int>> counts) {
    Fingerprint f;
    f.order = order;
    f.abelian = abelian;
    for (auto [o, c] : counts)
        for (int i = 0; i < c; ++i) f.profile.add(o);
    return f;
}

const Fingerprint& fp_q8() {
    static const Fingerprint f = fp_lit(8, false, {{1, 1}, {2, 1}, {4, 6}});
    return f;
}
const Fingerprint& fp_h16() {
    static const Fingerprint f = fp_lit(16, false, {{1, 1}, {2, 3}, {4, 12}});
    return f;
}
const Fingerprint& fp_h32() {
    static const Fingerprint f = fp_lit(32, false, {{1, 1}, {2, 7}, {4, 24}});
    return f;
}
const Fingerprint& fp_a4() {
    static const Fingerprint f = fp_lit(12, false, {{1, 1}, {2, 3}, {3, 8}});
    return f;
}
// binary tetrahedral profile: a Q8 block together with an order-3 rotator
const Fingerprint& fp_sl23() {
    static const Fingerprint f = fp_lit(24, false, {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}});
    return f;
}

bool members_contain(const std::vector<Elem>& sorted, Elem x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool members_subset(const std::vector<Elem>& a, const std::vector<Elem>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// indices of an extracted subgroup back to parent element ids (stays sorted)
std::vector<Elem> to_parent(const Subgroup& host, const std::vector<Elem>& inner) {
    std::vector<Elem> out;
    out.reserve(inner.size());
    for (Elem i : inner) out.push_back(host.members[i]);
    return out;
}

int intersection_size(const std::vector<Elem>& a, const std::vector<Elem>& b) {
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            ++count, ++ia, ++ib;
    }
    return count;
}

ClauseResult clause(std::string name, bool pass, std::string detail = "") {
    return ClauseResult{std::move(name), pass, std::move(detail)};
}

void push(FamilyCert& cert, ClauseResult c) { cert.clauses.push_back(std::move(c)); }

void finish(FamilyCert& cert) {
    cert.ok = !cert.clauses.empty();
    for (const auto& c : cert.clauses) cert.ok = cert.ok && c.pass;
}

// n = 2^a * 3^b * rest
void factor_23(int n, int& a, int& b, int& rest) {
    a = b = 0;
    while (n % 2 == 0) n /= 2, ++a;
    while (n % 3 == 0) n /= 3, ++b;
    rest = n;
}

std::string order_word(int n) {
    std::ostringstream os;
    os << "|G| = " << n;
    return os.str();
}

Elem first_order3_outside(const FiniteGroup& g, const std::vector<Elem>* excluded) {
    for (Elem z = 0; z < g.size(); ++z) {
        if (g.order(z) != 3) continue;
        if (excluded && members_contain(*excluded, z)) continue;
        return z;
    }
    return -1;
}

FamilyCert cert_family_a(const FiniteGroup& g) {
    FamilyCert cert;
    cert.family = 'a';
    int a = 0, m = 0, rest = 0;
    factor_23(g.size(), a, m, rest);
    bool shape = rest == 1 && a >= 2 && m >= 1;
    {
        std::ostringstream os;
        os << order_word(g.size()) << ", needs 4 * 3^m * 2^n with m >= 1";
        push(cert, clause("order-shape", shape, os.str()));
    }
    if (!shape) {
        finish(cert);
        return cert;
    }
    auto ref = family_a(m, a - 2);
    push(cert, clause("fingerprint-match", fingerprint(g) == fingerprint(ref),
                      "order profile against the dicyclic reference"));
    if (g.size() <= 256) {
        auto iso = isomorphic_bruteforce(g, ref);
        push(cert, clause("isomorphic-to-reference", iso.has_value(),
                          "brute-force isomorphism with the rebuilt reference group"));
    } else {
        push(cert, clause("isomorphic-to-reference", false,
                          "order above the brute-force ceiling (256); not certified"));
    }
    finish(cert);
    return cert;
}

FamilyCert cert_family_b(const FiniteGroup& g) {
    FamilyCert cert;
    cert.family = 'b';
    int a = 0, t = 0, rest = 0;
    factor_23(g.size(), a, t, rest);
    bool shape = rest == 1 && a >= 2 && a % 2 == 0 && t >= 1;
    {
        std::ostringstream os;
        os << order_word(g.size()) << ", needs 4^b * 3^t with b, t >= 1";
        push(cert, clause("order-shape", shape, os.str()));
    }
    if (!shape) {
        finish(cert);
        return cert;
    }

    auto v = sylow(g, 2);
    bool v_ok = is_elementary_abelian_2(v) && is_normal(v);
    push(cert, clause("sylow2-elementary-abelian-normal", v_ok, ""));
    if (!v_ok) {
        finish(cert);
        return cert;
    }

    auto c = centralizer(g, v.members);
    bool index3 = g.size() == 3 * c.size();
    {
        std::ostringstream os;
        os << "|G : C_G(V)| = " << g.size() / (double)c.size();
        push(cert, clause("centralizer-index-3", index3, os.str()));
    }
    if (!index3) {
        finish(cert);
        return cert;
    }

    std::vector<Elem> odds;
    for (Elem x : c.members)
        if (g.order(x) % 2 == 1) odds.push_back(x);
    auto u3 = closure_nocap(g, odds);
    bool u_ok = (long)u3.size() * v.size() == c.size();
    for (Elem x : u3.members) u_ok = u_ok && (g.order(x) == 1 || g.order(x) == 3);
    {
        std::ostringstream os;
        os << "odd part of the centralizer has order " << u3.size() << " and exponent <= 3";
        push(cert, clause("odd-core-exponent-3", u_ok, os.str()));
    }

    Elem z = first_order3_outside(g, &c.members);
    bool fpf = z >= 0;
    for (Elem w : v.members)
        if (w != 0 && fpf) fpf = g.conj(w, z) != w;
    push(cert, clause("rotator-fpf-on-sylow2", fpf,
                      z < 0 ? "no order-3 element outside the centralizer"
                            : "conjugation fixes no involution"));
    if (z < 0) {
        finish(cert);
        return cert;
    }

    auto seeds = odds;
    seeds.push_back(z);
    auto part3 = closure_nocap(g, seeds);
    bool exp3 = true;
    for (Elem x : part3.members) exp3 = exp3 && (g.order(x) == 1 || g.order(x) == 3);
    {
        std::ostringstream os;
        os << "odd core with the rotator has order " << part3.size() << ", exponent <= 3";
        push(cert, clause("exponent-3-part", exp3, os.str()));
    }

    // split the Sylow 2 into rotator-orbits of size 4, each an A4 with z
    bool blocks_ok = fpf;
    int blocks = 0;
    std::string why;
    std::vector<char> in_span((std::size_t)g.size(), 0);
    std::vector<Elem> span = {0};
    in_span[0] = 1;
    for (Elem w : v.members) {
        if (!blocks_ok || w == 0 || in_span[w]) continue;
        Elem wz = g.conj(w, z);
        Elem prod = g.mul(w, wz);
        if (in_span[wz] || in_span[prod] || prod == 0) {
            blocks_ok = false;
            why = "degenerate rotator orbit";
            break;
        }
        auto blk = closure_nocap(g, {w, wz, z});
        if (fingerprint(blk) != fp_a4()) {
            blocks_ok = false;
            why = "block with the rotator is not A4";
            break;
        }
        std::vector<Elem> snapshot = span;
        for (Elem s : snapshot)
            for (Elem b : {w, wz, prod}) {
                Elem y = g.mul(s, b);
                if (!in_span[y]) {
                    in_span[y] = 1;
                    span.push_back(y);
                }
            }
        ++blocks;
    }
    if (blocks_ok && (int)span.size() != v.size()) {
        blocks_ok = false;
        why = "blocks do not cover the Sylow 2";
    }
    {
        std::ostringstream os;
        if (blocks_ok)
            os << blocks << " blocks of size 4, each spanning an A4 with the rotator";
        else
            os << why;
        push(cert, clause("block-decomposition", blocks_ok, os.str()));
    }
    finish(cert);
    return cert;
}

FamilyCert cert_family_c(const FiniteGroup& g) {
    FamilyCert cert;
    cert.family = 'c';
    auto k = o_p(g, 2);
    bool kernel_ok = k.size() > 1 && g.size() == 3 * k.size();
    {
        std::ostringstream os;
        os << "largest normal 2-subgroup has order " << k.size() << " in " << order_word(g.size());
        push(cert, clause("normal-2-kernel-index-3", kernel_ok, os.str()));
    }
    if (!kernel_ok) {
        finish(cert);
        return cert;
    }

    push(cert, clause("kernel-exponent-4", exponent(k) == 4, ""));

    auto kx = extract_subgroup(k);
    auto nc = nilpotency_class(kx);
    {
        std::ostringstream os;
        os << "nilpotency class " << (nc ? std::to_string(*nc) : std::string("undefined"));
        push(cert, clause("kernel-class-at-most-2", nc.has_value() && *nc <= 2, os.str()));
    }

    auto om = omega1(kx);
    auto ze = center(kx);
    push(cert, clause("kernel-involutions-central", members_subset(om.members, ze.members), ""));

    Elem z = first_order3_outside(g, &k.members);
    bool frob = false;
    std::string detail;
    if (z < 0) {
        detail = "no order-3 element outside the kernel";
    } else {
        std::vector<Elem> img(k.members.size(), -1);
        bool inside = true;
        for (std::size_t i = 0; i < k.members.size() && inside; ++i) {
            Elem c = g.conj(k.members[i], z);
            auto it = std::lower_bound(k.members.begin(), k.members.end(), c);
            if (it == k.members.end() || *it != c)
                inside = false;
            else
                img[i] = (Elem)(it - k.members.begin());
        }
        if (!inside) {
            detail = "conjugation does not preserve the kernel";
        } else {
            try {
                auto phi = make_automorphism(kx, img, "conjugation by an order-3 element");
                auto rep = verify_frobenius(kx, phi, 3);
                frob = rep.ok;
                detail = frob ? "conjugation and its square act without fixed points"
                              : "conjugation fixes a nonidentity kernel element";
            } catch (const NotAutomorphism&) {
                detail = "conjugation is not an automorphism of the kernel";
            }
        }
    }
    push(cert, clause("frobenius-complement-order-3", frob, detail));
    finish(cert);
    return cert;
}

FamilyCert cert_family_d(const FiniteGroup& g) {
    FamilyCert cert;
    cert.family = 'd';
    int a = 0, t = 0, rest = 0;
    factor_23(g.size(), a, t, rest);
    bool shape = rest == 1 && t == 1 && a >= 3;
    {
        std::ostringstream os;
        os << order_word(g.size()) << ", needs 3 * 2^k with k >= 3";
        push(cert, clause("order-shape", shape, os.str()));
    }
    if (!shape) {
        finish(cert);
        return cert;
    }

    auto g2 = o_p(g, 2);
    bool sylow_normal = g.size() == 3 * g2.size();
    push(cert, clause("normal-sylow2", sylow_normal, ""));
    if (!sylow_normal) {
        finish(cert);
        return cert;
    }

    Elem z = first_order3_outside(g, nullptr);
    auto g2x = extract_subgroup(g2);
    std::vector<Elem> seeds = to_parent(g2, frattini_pgroup(g2x).members);
    for (Elem k : g2.members) {
        Elem c = g.mul(g.inv(k), g.conj(k, z));
        seeds.push_back(c);
    }
    auto u = closure_nocap(g, seeds);
    bool core_ok = z >= 0 && u.size() > 1 && members_subset(u.members, g2.members);
    {
        std::ostringstream os;
        os << "commutators with the rotator and the Frattini subgroup span order " << u.size();
        push(cert, clause("core-recovery", core_ok, os.str()));
    }
    if (!core_ok) {
        finish(cert);
        return cert;
    }

    auto ux = extract_subgroup(u);
    bool core_special = false;
    std::string special_detail;
    try {
        auto sr = is_special_2group(ux);
        core_special = sr.special;
        special_detail = sr.detail;
    } catch (const NotPGroup&) {
        special_detail = "core is not a 2-group";
    }
    push(cert, clause("core-special", core_special, special_detail));
    if (!core_special) {
        finish(cert);
        return cert;
    }

    std::vector<Elem> fix_u;
    for (Elem x : u.members)
        if (g.conj(x, z) == x) fix_u.push_back(x);
    auto zu = to_parent(u, center(ux).members);
    auto o1u = to_parent(u, omega1(ux).members);
    bool fixed_ok = fix_u == zu && zu == o1u;
    {
        std::ostringstream os;
        os << "|C_U(z)| = " << fix_u.size() << ", |Z(U)| = " << zu.size() << ", |Omega1(U)| = "
           << o1u.size();
        push(cert, clause("core-fixed-points", fixed_ok, os.str()));
    }
    if (!fixed_ok) {
        finish(cert);
        return cert;
    }

    auto zg2 = to_parent(g2, center(g2x).members);
    bool zg2_elab = true;
    for (Elem x : zg2) zg2_elab = zg2_elab && g.order(x) <= 2;
    std::vector<Elem> fixed_central;
    for (Elem x : zg2)
        if (g.conj(x, z) == x) fixed_central.push_back(x);
    std::vector<char> in_span((std::size_t)g.size(), 0);
    std::vector<Elem> span = zu;
    for (Elem x : zu) in_span[x] = 1;
    std::vector<Elem> basis;
    for (Elem x : fixed_central) {
        if (in_span[x]) continue;
        basis.push_back(x);
        std::vector<Elem> snapshot = span;
        for (Elem s : snapshot) {
            Elem y = g.mul(s, x);
            if (!in_span[y]) {
                in_span[y] = 1;
                span.push_back(y);
            }
        }
    }
    auto e = closure_nocap(g, basis);
    bool complement_ok = zg2_elab && (long)u.size() * e.size() == g2.size();
    if (complement_ok) {
        auto all = u.members;
        all.insert(all.end(), e.members.begin(), e.members.end());
        complement_ok = closure_nocap(g, all).size() == g2.size();
    }
    {
        std::ostringstream os;
        os << "central rotator-fixed complement of order " << e.size();
        push(cert, clause("central-complement", complement_ok, os.str()));
    }

    // greedy z-invariant Q8 blocks covering the core
    std::vector<std::vector<Elem>> blocks;
    std::vector<char> covered((std::size_t)g.size(), 0);
    std::vector<Elem> covered_members = zu;
    for (Elem x : zu) covered[x] = 1;
    std::vector<Elem> order4;
    for (Elem x : u.members)
        if (g.order(x) == 4) order4.push_back(x);
    bool progress = true;
    while (progress && covered_members.size() < u.members.size()) {
        progress = false;
        for (Elem x : order4) {
            if (covered[x]) continue;
            for (Elem y : order4) {
                if (y == x || g.mul(x, x) != g.mul(y, y) || g.comm(x, y) == 0) continue;
                auto q = closure_nocap(g, {x, y});
                if (q.size() != 8 || fingerprint(q) != fp_q8()) continue;
                bool invariant = true;
                for (Elem s : q.members)
                    invariant = invariant && members_contain(q.members, g.conj(s, z));
                if (!invariant) continue;
                if (fingerprint(closure_nocap(g, {x, y, z})) != fp_sl23()) continue;
                auto zq_seeds = zu;
                zq_seeds.insert(zq_seeds.end(), q.members.begin(), q.members.end());
                auto zq = closure_nocap(g, zq_seeds);
                bool normal_in_u = true;
                for (Elem s : zq.members)
                    for (Elem w : u.members) {
                        if (!normal_in_u) break;
                        normal_in_u = members_contain(zq.members, g.conj(s, w));
                    }
                if (!normal_in_u) continue;
                bool small_meets = true;
                for (const auto& b : blocks)
                    small_meets = small_meets && intersection_size(b, q.members) <= 2;
                if (!small_meets) continue;
                blocks.push_back(q.members);
                auto grow = covered_members;
                grow.insert(grow.end(), q.members.begin(), q.members.end());
                auto cv = closure_nocap(g, grow);
                covered_members = cv.members;
                for (Elem s : covered_members) covered[s] = 1;
                progress = true;
                break;
            }
            if (progress) break;
        }
    }
    bool covered_all = covered_members == u.members;
    {
        std::ostringstream os;
        os << blocks.size() << " rotator-invariant Q8 blocks, each spanning SL(2,3) with the "
           << "rotator, pairwise meeting in at most 2 elements";
        push(cert, clause("q8-block-family", !blocks.empty(), os.str()));
    }
    push(cert, clause("core-covered-by-blocks", covered_all,
                      covered_all ? "center and blocks generate the core"
                                  : "no witness found (greedy search stalled; not a disproof)"));
    finish(cert);
    return cert;
}

}  // namespace

PropertyPReport has_property_p(const FiniteGroup& g, int cap) {
    PropertyPReport rep;
    rep.even_order = g.size() % 2 == 0;
    const int n = g.size();
    std::set<std::vector<Elem>> seen;
    for (Elem x = 0; x < n; ++x) {
        if (g.order(x) != 2) continue;
        for (Elem y = 0; y < n; ++y) {
            ++rep.pairs_checked;
            auto cr = closure(g, {x, y}, cap);
            if (cr.exceeded) {
                PairWitness w;
                w.x = x;
                w.y = y;
                w.tag = AllowedTag::Other;
                w.capped = true;
                rep.holds = false;
                rep.offender = w;
                return rep;
            }
            const auto& sub = *cr.subgroup;
            if (!seen.insert(sub.members).second) continue;
            ++rep.distinct_subgroups;
            AllowedTag tag = identify_allowed(sub);
            if (!tag_allowed_pair(tag)) {
                PairWitness w;
                w.x = x;
                w.y = y;
                w.tag = tag;
                w.subgroup_size = sub.size();
                w.fp = fingerprint(sub);
                rep.holds = false;
                rep.offender = w;
                return rep;
            }
        }
    }
    return rep;
}

A3TheoremReport in_a3_theorem(const FiniteGroup& g) {
    A3TheoremReport rep;
    rep.is_d6 = identify_small(fingerprint(g)) == AllowedTag::D6;
    rep.even_order = g.size() % 2 == 0;
    int involutions = 0;
    bool inverse_pair = false;
    for (Elem x = 0; x < g.size(); ++x) {
        if (g.order(x) == 2) ++involutions;
        if (g.order(x) > 2) inverse_pair = true;
    }
    rep.admits_cubic_set = involutions >= 3 || (involutions >= 1 && inverse_pair);
    rep.pairs = has_property_p(g);

    if (rep.is_d6) {
        rep.in_class = true;
        rep.reason = "isomorphic to the dihedral group of order 6 (the exceptional member)";
    } else if (!rep.even_order) {
        rep.reason = "odd order: every inverse-closed 3-subset needs an involution";
    } else if (!rep.admits_cubic_set) {
        rep.reason = "no inverse-closed 3-subset of nonidentity elements exists";
    } else if (!rep.pairs.holds) {
        std::ostringstream os;
        os << "two-generator condition fails at (" << rep.pairs.offender->x << ", "
           << rep.pairs.offender->y << ")";
        if (rep.pairs.offender->capped)
            os << ": closure larger than any allowed type";
        else
            os << ": subgroup of order " << rep.pairs.offender->subgroup_size << " tagged "
               << tag_name(rep.pairs.offender->tag);
        rep.reason = os.str();
    } else {
        rep.in_class = true;
        rep.reason = "even order and the two-generator condition holds";
    }
    return rep;
}

const char* min_nonab_tag_name(MinNonabTag t) {
    switch (t) {
        case MinNonabTag::Q8: return "Q8";
        case MinNonabTag::H16: return "H16";
        case MinNonabTag::H32: return "H32";
        case MinNonabTag::Other: return "OTHER";
    }
    return "OTHER";
}

std::vector<MinNonabEntry> minimal_nonabelian_subgroups(const FiniteGroup& g) {
    if (g.size() > 4096) {
        std::ostringstream os;
        os << "minimal_nonabelian_subgroups: " << order_word(g.size()) << " exceeds 4096";
        throw SizeCeiling(os.str());
    }
    const int n = g.size();
    std::set<std::vector<Elem>> seen;
    std::vector<MinNonabEntry> out;
    for (Elem x = 1; x < n; ++x) {
        for (Elem y = x + 1; y < n; ++y) {
            if (g.comm(x, y) == 0) continue;
            auto sub = closure_nocap(g, {x, y});
            if (!seen.insert(sub.members).second) continue;
            bool minimal = true;
            for (std::size_t i = 0; i < sub.members.size() && minimal; ++i) {
                for (std::size_t j = i + 1; j < sub.members.size() && minimal; ++j) {
                    Elem u = sub.members[i], v = sub.members[j];
                    if (g.comm(u, v) == 0) continue;
                    if (closure_nocap(g, {u, v}).members != sub.members) minimal = false;
                }
            }
            if (!minimal) continue;
            auto f = fingerprint(sub);
            MinNonabTag tag = MinNonabTag::Other;
            if (f == fp_q8())
                tag = MinNonabTag::Q8;
            else if (f == fp_h16())
                tag = MinNonabTag::H16;
            else if (f == fp_h32())
                tag = MinNonabTag::H32;
            out.push_back(MinNonabEntry{sub.members, tag});
        }
    }
    std::sort(out.begin(), out.end(), [](const MinNonabEntry& a, const MinNonabEntry& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

NoQ8Report no_q8_check(const FiniteGroup& g) {
    const int n = g.size();
    for (Elem x = 0; x < n; ++x) {
        if (g.order(x) != 4) continue;
        for (Elem y = x + 1; y < n; ++y) {
            if (g.order(y) != 4) continue;
            if (g.mul(x, x) != g.mul(y, y) || g.comm(x, y) == 0) continue;
            auto cr = closure(g, {x, y}, 8);
            if (cr.exceeded) continue;
            if (cr.subgroup->size() == 8 && fingerprint(*cr.subgroup) == fp_q8())
                return NoQ8Report{false, std::make_pair(x, y)};
        }
    }
    return NoQ8Report{};
}

FamilyCert verify_family(const FiniteGroup& g, char family) {
    switch (family) {
        case 'a': return cert_family_a(g);
        case 'b': return cert_family_b(g);
        case 'c': return cert_family_c(g);
        case 'd': return cert_family_d(g);
        default: {
            std::ostringstream os;
            os << "verify_family: unknown family tag '" << family << "' (expected a, b, c or d)";
            throw UnknownTag(os.str());
        }
    }
}

LemmaSuiteReport lemma_suite(const FiniteGroup& g) {
    auto pp = has_property_p(g);
    if (!pp.holds) {
        std::ostringstream os;
        os << "lemma_suite: the two-generator condition fails at (" << pp.offender->x << ", "
           << pp.offender->y << ")";
        throw PreconditionViolated(os.str());
    }

    LemmaSuiteReport rep;
    const int n = g.size();

    bool orders_ok = true;
    for (Elem x = 0; x < n; ++x) {
        int o = g.order(x);
        orders_ok = orders_ok && (o == 1 || o == 2 || o == 3 || o == 4 || o == 6);
    }
    rep.checks.push_back(clause("element-orders-in-1-2-3-4-6", orders_ok));

    std::vector<Elem> invs;
    for (Elem x = 0; x < n; ++x)
        if (g.order(x) == 2) invs.push_back(x);
    bool invol_commute = true;
    for (std::size_t i = 0; i < invs.size() && invol_commute; ++i)
        for (std::size_t j = i + 1; j < invs.size() && invol_commute; ++j)
            invol_commute = g.comm(invs[i], invs[j]) == 0;
    rep.checks.push_back(clause("involutions-commute", invol_commute));

    auto g2 = sylow(g, 2);
    auto g3 = sylow(g, 3);

    if (g2.size() == 1) {
        rep.checks.push_back(clause("sylow2-exponent-omega1-central", true, "trivial Sylow 2"));
    } else {
        auto g2x = extract_subgroup(g2);
        auto om = omega1(g2x);
        auto ze = center(g2x);
        bool ok = exponent(g2x) <= 4 && members_subset(om.members, ze.members);
        rep.checks.push_back(clause("sylow2-exponent-omega1-central", ok));
    }

    {
        bool ok = true;
        std::string detail;
        if (g3.size() > 1) {
            auto g3x = extract_subgroup(g3);
            ok = exponent(g3x) <= 3;
        } else {
            detail = "trivial Sylow 3";
        }
        rep.checks.push_back(clause("sylow3-exponent-3", ok, detail));
    }

    if (g2.size() == 1) {
        rep.checks.push_back(clause("sylow2-chain", true, "trivial Sylow 2"));
        rep.checks.push_back(clause("omega1-elementary-abelian", true, "no involutions"));
        rep.checks.push_back(clause("sylow2-class-at-most-2", true, "trivial Sylow 2"));
    } else {
        auto g2x = extract_subgroup(g2);
        auto der = derived_subgroup(g2x);
        auto phi = frattini_pgroup(g2x);
        auto om = omega1(g2x);
        auto ze = center(g2x);
        bool chain = members_subset(der.members, phi.members) &&
                     members_subset(phi.members, om.members) &&
                     members_subset(om.members, ze.members);
        rep.checks.push_back(clause("sylow2-chain", chain,
                                    "derived <= Frattini <= Omega1 <= center inside the Sylow 2"));

        auto o1g = omega1(g, 2);
        bool o1_ok = is_elementary_abelian_2(o1g) && members_subset(o1g.members, g2.members);
        rep.checks.push_back(clause("omega1-elementary-abelian", o1_ok,
                                    "involutions generate an elementary abelian normal 2-group"));

        auto nc = nilpotency_class(g2x);
        rep.checks.push_back(clause("sylow2-class-at-most-2", nc.has_value() && *nc <= 2));
    }

    rep.all = true;
    for (const auto& c : rep.checks) rep.all = rep.all && c.pass;
    return rep;
}

}  // namespace icayley
