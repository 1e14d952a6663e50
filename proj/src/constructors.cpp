#include "icayley/constructors.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "icayley/errors.hpp"
#include "icayley/gf2k.hpp"

namespace icayley {

FiniteGroup with_recipe(const FiniteGroup& g, std::string r) {
    GroupData d = g.data();
    d.recipe = std::move(r);
    return FiniteGroup(std::make_shared<GroupData>(std::move(d)));
}

namespace {

long long ipow_checked(int base, int k) {
    long long n = 1;
    for (int i = 0; i < k; ++i) {
        n *= base;
        if (n > kSizeCeiling) throw SizeCeiling("group order exceeds the size ceiling");
    }
    return n;
}

// Direct power of Z_base on digit vectors (big-endian digit indexing).
FiniteGroup abelian_digits(int base, int k, std::string recipe) {
    int n = static_cast<int>(ipow_checked(base, k));
    GroupData d;
    d.n = n;
    d.table.resize(static_cast<std::size_t>(n) * n);
    std::vector<int> da(k), db(k);
    for (int a = 0; a < n; ++a) {
        int t = a;
        for (int i = k - 1; i >= 0; --i) {
            da[i] = t % base;
            t /= base;
        }
        for (int b = 0; b < n; ++b) {
            t = b;
            for (int i = k - 1; i >= 0; --i) {
                db[i] = t % base;
                t /= base;
            }
            int c = 0;
            for (int i = 0; i < k; ++i) c = c * base + (da[i] + db[i]) % base;
            d.table[static_cast<std::size_t>(a) * n + b] = c;
        }
    }
    int unit = n / base;  // index of the first digit's unit vector
    for (int i = 0; i < k; ++i) {
        d.gens.push_back(unit);
        unit /= base;
    }
    d.recipe = std::move(recipe);
    return finalize_structural(std::move(d));
}

std::string cycle_string(const std::vector<int>& perm) {
    int l = static_cast<int>(perm.size());
    std::vector<char> seen(l, 0);
    std::string out;
    for (int i = 0; i < l; ++i) {
        if (seen[i] || perm[i] == i) {
            seen[i] = 1;
            continue;
        }
        out += '(';
        int x = i;
        bool first = true;
        while (!seen[x]) {
            seen[x] = 1;
            if (!first) out += ',';
            out += std::to_string(x);
            first = false;
            x = perm[x];
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

// ---- central type presentations for the builtin 2-groups ----

CTPresentation pres_q8() {
    CTPresentation p;
    p.m = 2;
    p.s = 1;
    p.sq = {{1}, {1}};
    p.set_comm(0, 1, {1});
    return p;
}

CTPresentation pres_h16() {
    CTPresentation p;
    p.m = 2;
    p.s = 2;
    p.sq = {{1, 0}, {0, 1}};
    p.set_comm(0, 1, {1, 0});
    return p;
}

CTPresentation pres_h32() {
    CTPresentation p;
    p.m = 2;
    p.s = 3;
    p.sq = {{1, 0, 0}, {0, 1, 0}};
    p.set_comm(0, 1, {0, 0, 1});
    return p;
}

CTPresentation pres_h32star() {
    CTPresentation p;
    p.m = 3;
    p.s = 2;
    p.sq = {{1, 0}, {0, 1}, {1, 0}};
    p.set_comm(0, 1, {0, 0});
    p.set_comm(0, 2, {1, 1});
    p.set_comm(1, 2, {0, 1});
    return p;
}

CTPresentation pres_h64() {
    CTPresentation p;
    p.m = 4;
    p.s = 2;
    p.sq = {{1, 0}, {0, 1}, {1, 1}, {1, 0}};
    p.set_comm(0, 1, {0, 0});
    p.set_comm(0, 2, {1, 0});
    p.set_comm(1, 2, {1, 1});
    p.set_comm(0, 3, {1, 1});
    p.set_comm(1, 3, {0, 1});
    p.set_comm(2, 3, {0, 0});
    return p;
}

CTPresentation pres_k256() {
    CTPresentation p;
    p.m = 4;
    p.s = 4;
    p.sq = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    p.set_comm(0, 1, {1, 0, 0, 0});
    p.set_comm(2, 3, {0, 0, 1, 0});
    p.set_comm(0, 3, {1, 0, 1, 0});
    p.set_comm(1, 2, {1, 0, 1, 0});
    p.set_comm(0, 2, {0, 0, 0, 0});
    p.set_comm(1, 3, {0, 0, 0, 0});
    return p;
}

CTPresentation pres_k1024() {
    CTPresentation p;
    p.m = 4;
    p.s = 6;
    p.sq = {{1, 0, 0, 0, 0, 0},
            {0, 1, 0, 0, 0, 0},
            {0, 0, 1, 0, 0, 0},
            {0, 0, 0, 1, 0, 0}};
    p.set_comm(0, 1, {0, 0, 0, 0, 1, 0});
    p.set_comm(2, 3, {0, 0, 0, 0, 0, 1});
    p.set_comm(0, 3, {0, 0, 0, 0, 1, 1});
    p.set_comm(1, 2, {0, 0, 0, 0, 1, 1});
    return p;
}

CTPresentation pres_heis27() {
    CTPresentation p;
    p.p = 3;
    p.m = 2;
    p.s = 1;
    p.sq = {{0}, {0}};
    p.set_comm(0, 1, {1});
    return p;
}

CTPresentation pres_u(int n) {
    CTPresentation p;
    p.m = 2 * n;
    p.s = 2 * n - 1;
    auto e = [&](int t) {
        std::vector<int> v(p.s, 0);
        v[t] = 1;
        return v;
    };
    p.sq.resize(p.m);
    for (int i = 0; i < n; ++i) {
        p.sq[2 * i] = e(i);      // a_{i+1}^2 = z_{i+1}
        p.sq[2 * i + 1] = e(i);  // b_{i+1}^2 = z_{i+1}
        p.set_comm(2 * i, 2 * i + 1, e(i));
    }
    for (int i = 0; i + 1 < n; ++i) {
        p.set_comm(2 * i, 2 * i + 3, e(n + i));      // [a_{i+1}, b_{i+2}]
        p.set_comm(2 * i + 1, 2 * i + 2, e(n + i));  // [b_{i+1}, a_{i+2}]
    }
    return p;
}

// parses "<head>(<int>)" and returns the int, or nullopt
std::optional<int> parse_paren_int(const std::string& name, const std::string& head) {
    if (name.size() < head.size() + 3) return std::nullopt;
    if (name.compare(0, head.size(), head) != 0) return std::nullopt;
    if (name[head.size()] != '(' || name.back() != ')') return std::nullopt;
    std::string digits = name.substr(head.size() + 1, name.size() - head.size() - 2);
    if (digits.empty()) return std::nullopt;
    for (char c : digits)
        if (c < '0' || c > '9') return std::nullopt;
    if (digits.size() > 6) return std::nullopt;
    return std::stoi(digits);
}

// Generator images of the certified order-3 fixed-point-free action on the
// order-64 builtin kernel, found once by exhaustive search; re-verified by
// hom_from_images + verify_frobenius on every build. Empty means "search".
const std::vector<Elem> kH64ActionGenImages = {51, 32, 13, 8};

}  // namespace

FiniteGroup cyclic(int n) {
    if (n < 1) throw BadConstruction("cyclic group order must be positive");
    if (n > kSizeCeiling) throw SizeCeiling("group order exceeds the size ceiling");
    GroupData d;
    d.n = n;
    d.table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) d.table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    if (n > 1) d.gens = {1};
    d.recipe = "cyclic(" + std::to_string(n) + ")";
    return finalize_structural(std::move(d));
}

FiniteGroup dihedral(int n) {
    if (n < 1) throw BadConstruction("dihedral parameter must be positive");
    if (2ll * n > kSizeCeiling) throw SizeCeiling("group order exceeds the size ceiling");
    int sz = 2 * n;
    GroupData d;
    d.n = sz;
    d.table.resize(static_cast<std::size_t>(sz) * sz);
    auto idx = [&](int rot, int flip) { return flip * n + rot; };
    for (int i = 0; i < n; ++i)
        for (int f = 0; f < 2; ++f)
            for (int j = 0; j < n; ++j)
                for (int g = 0; g < 2; ++g) {
                    int rot = f == 0 ? (i + j) % n : (i - j + n) % n;
                    d.table[static_cast<std::size_t>(idx(i, f)) * sz + idx(j, g)] = idx(rot, f ^ g);
                }
    d.gens = n >= 2 ? std::vector<Elem>{1, n} : std::vector<Elem>{1};
    d.recipe = "dihedral(" + std::to_string(n) + ")";
    return finalize_structural(std::move(d));
}

FiniteGroup elem_abelian(int p, int k) {
    if (!is_prime(p)) throw BadConstruction("elementary abelian groups need a prime base");
    if (k < 1) throw BadConstruction("elementary abelian rank must be positive");
    return abelian_digits(p, k, "ea(" + std::to_string(p) + "," + std::to_string(k) + ")");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    long long n = static_cast<long long>(a.size()) * b.size();
    if (n > kSizeCeiling) throw SizeCeiling("product order exceeds the size ceiling");
    int na = a.size(), nb = b.size(), sz = static_cast<int>(n);
    GroupData d;
    d.n = sz;
    d.table.resize(static_cast<std::size_t>(sz) * sz);
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2)
                    d.table[static_cast<std::size_t>(a1 * nb + b1) * sz + (a2 * nb + b2)] =
                        a.mul(a1, a2) * nb + b.mul(b1, b2);
    for (Elem g : a.gens()) d.gens.push_back(g * nb);
    for (Elem g : b.gens()) d.gens.push_back(g);
    if (!a.recipe().empty() && !b.recipe().empty()) d.recipe = a.recipe() + " x " + b.recipe();
    return finalize_structural(std::move(d));
}

FiniteGroup perm_group(const std::vector<std::vector<int>>& gens) {
    if (gens.empty()) throw BadConstruction("at least one permutation required");
    std::size_t l = gens[0].size();
    if (l == 0) throw BadConstruction("permutations must act on at least one point");
    for (const auto& p : gens) {
        if (p.size() != l) throw BadConstruction("permutations act on different point counts");
        std::vector<char> seen(l, 0);
        for (int v : p) {
            if (v < 0 || v >= static_cast<int>(l) || seen[v])
                throw BadConstruction("not a permutation");
            seen[v] = 1;
        }
    }

    std::vector<int> id(l);
    for (std::size_t i = 0; i < l; ++i) id[i] = static_cast<int>(i);
    std::set<std::vector<int>> members;
    std::vector<std::vector<int>> queue{id};
    members.insert(id);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto cur = queue[head];
        for (const auto& g : gens) {
            std::vector<int> nxt(l);
            for (std::size_t i = 0; i < l; ++i) nxt[i] = cur[g[i]];  // cur after g
            if (members.insert(nxt).second) {
                if (members.size() > static_cast<std::size_t>(kSizeCeiling))
                    throw SizeCeiling("permutation closure exceeds the size ceiling");
                queue.push_back(std::move(nxt));
            }
        }
    }

    std::vector<std::vector<int>> elems(members.begin(), members.end());  // lex order
    int n = static_cast<int>(elems.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[elems[i]] = i;

    GroupData d;
    d.n = n;
    d.table.resize(static_cast<std::size_t>(n) * n);
    std::vector<int> prod(l);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (std::size_t i = 0; i < l; ++i) prod[i] = elems[a][elems[b][i]];
            d.table[static_cast<std::size_t>(a) * n + b] = index[prod];
        }
    std::string atoms;
    for (const auto& g : gens) {
        int gi = index[g];
        if (gi != 0 && std::find(d.gens.begin(), d.gens.end(), gi) == d.gens.end())
            d.gens.push_back(gi);
        if (!atoms.empty()) atoms += ',';
        atoms += cycle_string(g);
    }
    if (n <= kSizeWarn)
        for (int i = 0; i < n; ++i) d.labels.push_back(cycle_string(elems[i]));
    d.recipe = "perm(" + atoms + ")";
    return finalize_structural(std::move(d));
}

FiniteGroup dicyclic(const FiniteGroup& a) {
    if (!is_abelian(a)) throw NotAbelian("dicyclic construction needs an abelian base");
    Elem t = -1;
    for (Elem x = 0; x < a.size(); ++x)
        if (a.order(x) == 2) {
            if (t != -1) throw NoUniqueInvolution("base has several involutions");
            t = x;
        }
    if (t == -1) throw NoUniqueInvolution("base has no involution");
    long long n2 = 2ll * a.size();
    if (n2 > kSizeCeiling) throw SizeCeiling("group order exceeds the size ceiling");
    int na = a.size(), n = static_cast<int>(n2);
    GroupData d;
    d.n = n;
    d.table.resize(static_cast<std::size_t>(n) * n);
    auto idx = [&](Elem x, int e) { return e * na + x; };
    for (Elem x = 0; x < na; ++x)
        for (int e = 0; e < 2; ++e)
            for (Elem y = 0; y < na; ++y)
                for (int f = 0; f < 2; ++f) {
                    Elem r;
                    int re;
                    if (e == 0) {
                        r = a.mul(x, y);
                        re = f;
                    } else if (f == 0) {
                        r = a.mul(x, a.inv(y));
                        re = 1;
                    } else {
                        r = a.mul(a.mul(x, a.inv(y)), t);
                        re = 0;
                    }
                    d.table[static_cast<std::size_t>(idx(x, e)) * n + idx(y, f)] = idx(r, re);
                }
    for (Elem g : a.gens()) d.gens.push_back(g);
    d.gens.push_back(na);  // the extra generator x with x^2 = t
    if (!a.recipe().empty()) d.recipe = "dic(" + a.recipe() + ")";
    return finalize_structural(std::move(d));
}

FiniteGroup semidirect_product(const FiniteGroup& k, const AutomorphismMap& alpha, int m) {
    if (!alpha.group.same_table(k)) throw NotAutomorphism("action belongs to a different group");
    if (m < 1) throw BadConstruction("complement order must be positive");
    long long n = static_cast<long long>(k.size()) * m;
    if (n > kSizeCeiling) throw SizeCeiling("product order exceeds the size ceiling");

    std::vector<std::vector<Elem>> pw(m);
    pw[0].resize(k.size());
    for (Elem x = 0; x < k.size(); ++x) pw[0][x] = x;
    for (int i = 1; i < m; ++i) {
        pw[i].resize(k.size());
        for (Elem x = 0; x < k.size(); ++x) pw[i][x] = alpha.img[pw[i - 1][x]];
    }
    {  // alpha^m must act trivially
        bool ok = true;
        for (Elem x = 0; x < k.size() && ok; ++x) ok = alpha.img[pw[m - 1][x]] == x;
        if (!ok) throw OrderMismatch("the action's order does not divide the complement order");
    }

    int nk = k.size(), sz = static_cast<int>(n);
    GroupData d;
    d.n = sz;
    d.table.resize(static_cast<std::size_t>(sz) * sz);
    for (int i = 0; i < m; ++i)
        for (Elem x = 0; x < nk; ++x)
            for (int j = 0; j < m; ++j)
                for (Elem y = 0; y < nk; ++y)
                    d.table[static_cast<std::size_t>(i * nk + x) * sz + (j * nk + y)] =
                        ((i + j) % m) * nk + k.mul(x, pw[i][y]);
    d.gens = k.gens();
    d.gens.push_back(nk);
    d.sdp_kernel = nk;
    d.sdp_m = m;
    if (!k.recipe().empty() && !alpha.ref.empty())
        d.recipe = "sdp(" + k.recipe() + "," + alpha.ref + "," + std::to_string(m) + ")";
    return finalize_structural(std::move(d));
}

FiniteGroup u_group(int n) { return u_group_with_phi(n).group; }

GroupWithAut u_group_with_phi(int n) {
    if (n < 1) throw BadConstruction("the block count must be positive");
    FiniteGroup g = with_recipe(central_type_group(pres_u(n)), "u(" + std::to_string(n) + ")");
    const auto& gens = g.gens();
    std::vector<Elem> images;
    for (int i = 0; i < n; ++i) {
        Elem a = gens[2 * i], b = gens[2 * i + 1];
        images.push_back(b);                    // a_i -> b_i
        images.push_back(g.mul(b, g.inv(a)));   // b_i -> b_i a_i^-1
    }
    auto hom = hom_from_images(g, gens, g, images);
    if (!hom.ok()) throw BadConstruction("internal: block rotation does not extend");
    auto phi = make_automorphism(g, std::move(*hom.img));
    if (phi.order != 3) throw BadConstruction("internal: block rotation has wrong order");
    return {g, std::move(phi)};
}

FiniteGroup w_group(int m) {
    if (m < 1) throw BadConstruction("kernel rank must be positive");
    std::string krec = m == 1 ? "cyclic(4)" : "cyclic(4)^" + std::to_string(m);
    FiniteGroup kern = abelian_digits(4, m, krec);
    return semidirect_product(kern, inversion_automorphism(kern), 4);
}

FiniteGroup su3_sylow2(int n, bool allow_oversize) { return su3_sylow2_with_z(n, allow_oversize).group; }

GroupWithAut su3_sylow2_with_z(int n, bool allow_oversize) {
    if (n < 1) throw BadConstruction("parameter must be positive");
    if (n > 2) throw BadConstruction("only n <= 2 is supported");
    if (n == 2 && !allow_oversize)
        throw SizeCeiling("order 32768 group; enable the size override to build it");

    const int qexp = 2 * n + 1;
    Gf2k f(2 * qexp);
    const std::uint32_t qq = 1u << (2 * qexp);  // |GF(q^2)|

    std::vector<std::uint32_t> conj(qq);
    for (std::uint32_t x = 0; x < qq; ++x) conj[x] = f.frob(x, qexp);  // x^q

    // group support: pairs (a, b) with a a^q = b + b^q, enumerated in
    // lexicographic order so (0, 0) gets index 0
    std::vector<std::pair<std::uint32_t, std::uint32_t>> elems;
    for (std::uint32_t a = 0; a < qq; ++a) {
        std::uint32_t na = f.mul(a, conj[a]);
        for (std::uint32_t b = 0; b < qq; ++b)
            if (Gf2k::add(b, conj[b]) == na) elems.emplace_back(a, b);
    }
    int sz = static_cast<int>(elems.size());
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> index;
    for (int i = 0; i < sz; ++i) index[elems[i]] = i;

    GroupData d;
    d.n = sz;
    d.table.resize(static_cast<std::size_t>(sz) * sz);
    for (int i = 0; i < sz; ++i) {
        auto [a, b] = elems[i];
        for (int j = 0; j < sz; ++j) {
            auto [c, e] = elems[j];
            std::uint32_t ra = Gf2k::add(a, c);
            std::uint32_t rb = Gf2k::add(Gf2k::add(b, e), f.mul(a, conj[c]));
            d.table[static_cast<std::size_t>(i) * sz + j] = index.at({ra, rb});
        }
    }
    d.recipe = "su3(" + std::to_string(n) + ")";
    FiniteGroup g = finalize_structural(std::move(d));

    // mu of multiplicative order 3; (a, b) -> (mu a, b) is an automorphism
    // because mu^(1+q) = 1
    std::uint32_t mu = 0;
    for (std::uint32_t x = 2; x < qq; ++x)
        if (f.pow(x, 3) == 1u) {
            mu = x;
            break;
        }
    if (mu == 0) throw BadConstruction("internal: no cube root of unity");
    std::vector<Elem> img(sz);
    for (int i = 0; i < sz; ++i) img[i] = index.at({f.mul(mu, elems[i].first), elems[i].second});
    auto z = make_automorphism(g, std::move(img));
    if (z.order != 3) throw BadConstruction("internal: diagonal action has wrong order");
    return {g, std::move(z)};
}

FiniteGroup family_a(int m, int n) {
    if (m < 1 || n < 0) throw BadConstruction("family a needs m >= 1, n >= 0");
    FiniteGroup base = direct_product(elem_abelian(3, m), cyclic(2));
    FiniteGroup g = dicyclic(base);
    if (n > 0) g = direct_product(g, elem_abelian(2, n));
    return with_recipe(g, "famA(" + std::to_string(m) + "," + std::to_string(n) + ")");
}

FiniteGroup family_b(const FiniteGroup& u, const std::optional<AutomorphismMap>& u_act,
                     int blocks) {
    if (blocks < 1) throw BadConstruction("family b needs at least one block");
    int p = 0;
    bool u_ok = u.size() == 1 || (is_prime_power(u.size(), &p) && p == 3);
    if (!u_ok) throw BadConstruction("the odd part must be a 3-group");
    if (exponent(u) > 3) throw BadConstruction("the odd part must have exponent dividing 3");

    AutomorphismMap act = u_act ? *u_act : identity_automorphism(u);
    if (!act.group.same_table(u)) throw NotAutomorphism("action belongs to a different group");
    if (act.order != 1 && act.order != 3)
        throw BadConstruction("the action on the odd part must have order dividing 3");
    for (Elem x = 0; x < u.size(); ++x)
        if (u.mul(x, u.mul(act.img[x], act.img[act.img[x]])) != 0)
            throw BadConstruction("twisted cubes in the odd part must vanish");

    FiniteGroup v = elem_abelian(2, 2 * blocks);
    // blockwise (x, y) -> (y, x + y), an order-3 fixed-point-free map
    auto block_image = [&](Elem vv) {
        int digits = 2 * blocks;
        std::vector<int> dv(digits);
        int t = vv;
        for (int i = digits - 1; i >= 0; --i) {
            dv[i] = t & 1;
            t >>= 1;
        }
        int r = 0;
        for (int i = 0; i < blocks; ++i) {
            int x = dv[2 * i], y = dv[2 * i + 1];
            r = (r << 2) | (y << 1) | (x ^ y);
        }
        return static_cast<Elem>(r);
    };

    FiniteGroup kern = u.size() == 1 ? v : direct_product(u, v);
    std::vector<Elem> img(kern.size());
    if (u.size() == 1) {
        for (Elem x = 0; x < kern.size(); ++x) img[x] = block_image(x);
    } else {
        for (Elem uu = 0; uu < u.size(); ++uu)
            for (Elem vv = 0; vv < v.size(); ++vv)
                img[uu * v.size() + vv] = act.img[uu] * v.size() + block_image(vv);
    }
    auto alpha = make_automorphism(kern, std::move(img));
    FiniteGroup g = semidirect_product(kern, alpha, 3);

    // sanity: the first block together with z spans A4
    {
        // unit digits of block 1; (0, v) has kernel index v, which embeds as-is
        int shift = 2 * (blocks - 1);
        Elem v1 = 1 << (shift + 1), v2 = 1 << shift;
        auto sub = closure_nocap(g, {v1, v2, g.sdp_z()});
        Fingerprint a4fp;
        a4fp.order = 12;
        a4fp.abelian = false;
        a4fp.profile.add(1);
        for (int i = 0; i < 3; ++i) a4fp.profile.add(2);
        for (int i = 0; i < 8; ++i) a4fp.profile.add(3);
        if (fingerprint(sub) != a4fp)
            throw BadConstruction("internal: block does not span A4 with the complement");
    }

    bool plain = !u_act || u_act->ref == "id";
    if (plain && !u.recipe().empty())
        return with_recipe(g, "famB(" + u.recipe() + "," + std::to_string(blocks) + ")");
    return with_recipe(g, "");
}

FiniteGroup family_c(const std::string& kernel_name) {
    if (kernel_name != "H64" && kernel_name != "K256" && kernel_name != "K1024")
        throw UnknownName("family c kernels are H64, K256 and K1024");
    FiniteGroup k = builtin_group(kernel_name);
    const auto& gens = k.gens();
    std::vector<Elem> gen_images;
    if (kernel_name == "H64") {
        if (!kH64ActionGenImages.empty()) {
            gen_images = kH64ActionGenImages;
        } else {
            auto found = find_order3_fpf(k);
            if (!found) throw BadConstruction("internal: no order-3 action on the kernel");
            for (Elem g : gens) gen_images.push_back(found->img[g]);
        }
    } else {
        // a -> c, b -> d, c -> (ac)^-1, d -> (bd)^-1
        Elem a = gens[0], b = gens[1], c = gens[2], dd = gens[3];
        gen_images = {c, dd, k.inv(k.mul(a, c)), k.inv(k.mul(b, dd))};
    }
    auto hom = hom_from_images(k, gens, k, gen_images);
    if (!hom.ok()) throw BadConstruction("internal: kernel action does not extend");
    auto phi = make_automorphism(k, std::move(*hom.img));
    if (phi.order != 3) throw BadConstruction("internal: kernel action has wrong order");
    auto frob = verify_frobenius(k, phi, 3);
    if (!frob.ok) throw BadConstruction("internal: kernel action is not fixed point free");
    FiniteGroup g = semidirect_product(k, phi, 3);
    return with_recipe(g, "famC(" + kernel_name + ")");
}

FiniteGroup family_d(const std::string& core_name, int m) {
    if (m < 0) throw BadConstruction("the elementary abelian rank cannot be negative");
    std::optional<GroupWithAut> core;
    if (auto n = parse_paren_int(core_name, "U"))
        core = u_group_with_phi(*n);
    else if (auto n2 = parse_paren_int(core_name, "SU3"))
        core = su3_sylow2_with_z(*n2);
    else
        throw UnknownName("family d cores are U(n) and SU3(n)");
    FiniteGroup g = semidirect_product(core->group, core->aut, 3);
    if (m > 0) g = direct_product(g, elem_abelian(2, m));
    return with_recipe(g, "famD(" + core_name + "," + std::to_string(m) + ")");
}

FiniteGroup builtin_group(const std::string& name) {
    FiniteGroup g = [&]() -> FiniteGroup {
        if (name == "Q8") return central_type_group(pres_q8());
        if (name == "H16") return central_type_group(pres_h16());
        if (name == "H32") return central_type_group(pres_h32());
        if (name == "H32star") return central_type_group(pres_h32star());
        if (name == "H64") return central_type_group(pres_h64());
        if (name == "K256") return central_type_group(pres_k256());
        if (name == "K1024") return central_type_group(pres_k1024());
        if (name == "Heis27") return central_type_group(pres_heis27());
        if (name == "A4") return perm_group({{1, 0, 3, 2}, {1, 2, 0, 3}});
        if (name == "S4") return perm_group({{1, 0, 2, 3}, {1, 2, 3, 0}});
        if (name == "D6") return dihedral(3);
        if (name == "D8") return dihedral(4);
        if (name == "D12") return dihedral(6);
        if (auto n = parse_paren_int(name, "U")) return u_group(*n);
        if (auto n = parse_paren_int(name, "W")) return w_group(*n);
        if (auto n = parse_paren_int(name, "SU3")) return su3_sylow2(*n);
        throw UnknownName("unknown builtin group: " + name);
    }();
    return with_recipe(g, "builtin(" + name + ")");
}

std::vector<std::string> builtin_names() {
    return {"Q8",  "H16",  "H32",  "H32star", "H64",  "K256", "K1024", "Heis27", "A4",
            "S4",  "D6",   "D8",   "D12",     "U(1)", "U(2)", "U(3)",  "W(2)",   "W(3)",
            "SU3(1)"};
}

}  // namespace icayley
