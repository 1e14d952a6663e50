#include "icayley/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace icayley {

std::string OrderProfile::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [k, v] : counts_) {
        if (!first) os << ", ";
        first = false;
        os << k << ":" << v;
    }
    os << "}";
    return os.str();
}

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << "(" << order << ", " << (abelian ? "abelian" : "non-abelian") << ", "
       << profile.to_string() << ")";
    return os.str();
}

Elem FiniteGroup::pow(Elem a, int k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    Elem r = 0;
    while (k-- > 0) r = mul(r, a);
    return r;
}

std::string FiniteGroup::label(Elem a) const {
    if (!d_->labels.empty()) return d_->labels[a];
    return std::to_string(a);
}

bool FiniteGroup::same_table(const FiniteGroup& o) const {
    return d_->n == o.d_->n && d_->table == o.d_->table;
}

bool Subgroup::contains(Elem x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; (long)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_prime_power(int n, int* prime_out) {
    if (n < 2) return false;
    int p = 0;
    for (int d = 2; (long)d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = n;  // n itself prime
    int m = n;
    while (m % p == 0) m /= p;
    if (m != 1) return false;
    if (prime_out) *prime_out = p;
    return true;
}

namespace {

void check_latin(const GroupData& d) {
    int n = d.n;
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int v = d.table[(std::size_t)a * n + b];
            if (v < 0 || v >= n) throw NotAGroup("table entry out of range");
            if (seen[v]) throw NotAGroup("row " + std::to_string(a) + " repeats an entry");
            seen[v] = 1;
        }
    }
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n; ++a) {
            int v = d.table[(std::size_t)a * n + b];
            if (seen[v]) throw NotAGroup("column " + std::to_string(b) + " repeats an entry");
            seen[v] = 1;
        }
    }
}

void fill_inverse_and_order(GroupData& d) {
    int n = d.n;
    d.inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (d.table[(std::size_t)a * n + b] == 0) {
                if (d.table[(std::size_t)b * n + a] != 0)
                    throw NotAGroup("inverse of " + std::to_string(a) + " is one-sided");
                d.inv[a] = b;
                break;
            }
    for (int a = 0; a < n; ++a)
        if (d.inv[a] < 0) throw NotAGroup("no inverse for " + std::to_string(a));
    d.ord.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        int x = a, k = 1;
        while (x != 0) {
            x = d.table[(std::size_t)x * n + a];
            ++k;
            if (k > n + 1) throw NotAGroup("power walk does not close");
        }
        // for a != 0 the loop exits with x = a^k = identity; for a = 0, k = 1
        d.ord[a] = a == 0 ? 1 : k;
    }
}

std::vector<Elem> greedy_generating_set(const GroupData& d);

}  // namespace

FiniteGroup finalize_structural(GroupData data) {
    if (data.n < 1 || data.table.size() != (std::size_t)data.n * data.n)
        throw NotAGroup("bad table shape");
    check_latin(data);
    for (int b = 0; b < data.n; ++b)
        if (data.table[b] != b || data.table[(std::size_t)b * data.n] != b)
            throw NotAGroup("structural builder must put the identity at index 0");
    fill_inverse_and_order(data);
    if (data.gens.empty() && data.n > 1) data.gens = greedy_generating_set(data);
    return FiniteGroup(std::make_shared<const GroupData>(std::move(data)));
}

FiniteGroup group_from_table(const std::vector<std::vector<int>>& table,
                             std::vector<std::string> labels, std::uint64_t seed,
                             bool allow_oversize) {
    int n = (int)table.size();
    if (n < 1) throw NotAGroup("empty table");
    if (n > kSizeCeiling && !allow_oversize)
        throw SizeCeiling("order " + std::to_string(n) + " exceeds ceiling " +
                          std::to_string(kSizeCeiling));
    GroupData d;
    d.n = n;
    d.table.resize((std::size_t)n * n);
    for (int a = 0; a < n; ++a) {
        if ((int)table[a].size() != n) throw NotAGroup("table is not square");
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n) throw NotAGroup("table entry out of range");
            d.table[(std::size_t)a * n + b] = v;
        }
    }
    check_latin(d);

    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b)
            ok = d.table[(std::size_t)cand * n + b] == b && d.table[(std::size_t)b * n + cand] == b;
        if (ok) {
            e = cand;
            break;
        }
    }
    if (e < 0) throw NotAGroup("no two-sided identity");

    if (e != 0) {
        // transpose indices 0 and e
        auto sig = [e](int x) { return x == 0 ? e : x == e ? 0 : x; };
        std::vector<std::int32_t> t2((std::size_t)n * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                t2[(std::size_t)sig(a) * n + sig(b)] = sig(d.table[(std::size_t)a * n + b]);
        d.table = std::move(t2);
        if (!labels.empty()) std::swap(labels[0], labels[(std::size_t)e]);
    }

    auto mul = [&d, n](int a, int b) { return d.table[(std::size_t)a * n + b]; };
    if (n <= kFullAssocLimit) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ab = mul(a, b);
                for (int c = 0; c < n; ++c)
                    if (mul(ab, c) != mul(a, mul(b, c)))
                        throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
            }
    } else {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < kAssocSamples; ++i) {
            int a = (int)(rng() % n), b = (int)(rng() % n), c = (int)(rng() % n);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw NotAGroup("associativity fails at sampled (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
        }
    }

    fill_inverse_and_order(d);
    if (!labels.empty()) {
        if ((int)labels.size() != n) throw NotAGroup("labels count mismatch");
        d.labels = std::move(labels);
    }
    if (n > 1) d.gens = greedy_generating_set(d);
    return FiniteGroup(std::make_shared<const GroupData>(std::move(d)));
}

namespace {

// BFS closure inside a known group table. Returns members sorted, or an
// empty vector if the cap was exceeded (reached then holds the count).
std::vector<Elem> closure_members(const GroupData& d, const std::vector<Elem>& seed, int cap,
                                  bool* exceeded, int* reached) {
    int n = d.n;
    std::vector<char> in(n, 0);
    std::vector<Elem> q;
    q.reserve(64);
    in[0] = 1;
    q.push_back(0);
    std::vector<Elem> gens;
    for (Elem s : seed)
        if (!in[s]) {
            in[s] = 1;
            q.push_back(s);
            gens.push_back(s);
        } else if (s != 0) {
            gens.push_back(s);
        }
    if (exceeded) *exceeded = false;
    for (std::size_t head = 0; head < q.size(); ++head) {
        Elem x = q[head];
        for (Elem g : gens) {
            Elem y = d.table[(std::size_t)x * n + g];
            if (!in[y]) {
                in[y] = 1;
                q.push_back(y);
                if (cap > 0 && (int)q.size() > cap) {
                    if (exceeded) *exceeded = true;
                    if (reached) *reached = (int)q.size();
                    return {};
                }
            }
        }
    }
    std::sort(q.begin(), q.end());
    return q;
}

// Greedy smallest-index picks modulo the Frattini subgroup when |G| is a
// prime power (Burnside basis: the picks then generate G outright).
std::vector<Elem> greedy_generating_set(const GroupData& d) {
    int n = d.n;
    std::vector<Elem> frat = {0};
    int p = 0;
    if (is_prime_power(n, &p)) {
        std::vector<char> seen(n, 0);
        std::vector<Elem> seed;
        auto push = [&](Elem v) {
            if (!seen[v]) {
                seen[v] = 1;
                seed.push_back(v);
            }
        };
        for (int a = 0; a < n; ++a) {
            int x = a;
            for (int i = 1; i < p; ++i) x = d.table[(std::size_t)x * n + a];
            push(x);  // a^p
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ia = d.inv[a], ib = d.inv[b];
                int v = d.table[(std::size_t)ia * n + ib];
                v = d.table[(std::size_t)v * n + a];
                v = d.table[(std::size_t)v * n + b];
                push(v);  // [a,b]
            }
        frat = closure_members(d, seed, 0, nullptr, nullptr);
    }
    std::vector<Elem> gens;
    std::vector<Elem> covered = frat;
    std::vector<char> in(n, 0);
    for (Elem m : covered) in[m] = 1;
    while ((int)covered.size() < n) {
        int pick = -1;
        for (int x = 1; x < n; ++x)
            if (!in[x]) {
                pick = x;
                break;
            }
        gens.push_back(pick);
        std::vector<Elem> seed = frat;
        seed.insert(seed.end(), gens.begin(), gens.end());
        covered = closure_members(d, seed, 0, nullptr, nullptr);
        std::fill(in.begin(), in.end(), 0);
        for (Elem m : covered) in[m] = 1;
    }
    return gens;
}

}  // namespace

ClosureResult closure(const FiniteGroup& g, const std::vector<Elem>& seed, int cap) {
    ClosureResult r;
    bool exceeded = false;
    int reached = 0;
    auto members = closure_members(g.data(), seed, cap, &exceeded, &reached);
    if (exceeded) {
        r.exceeded = true;
        r.reached = reached;
        return r;
    }
    r.subgroup = Subgroup{g, std::move(members)};
    r.reached = r.subgroup->size();
    return r;
}

Subgroup closure_nocap(const FiniteGroup& g, const std::vector<Elem>& seed) {
    return *closure(g, seed, 0).subgroup;
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{g, {0}}; }

Subgroup whole_subgroup(const FiniteGroup& g) {
    std::vector<Elem> m(g.size());
    std::iota(m.begin(), m.end(), 0);
    return Subgroup{g, std::move(m)};
}

Subgroup center(const FiniteGroup& g) {
    int n = g.size();
    std::vector<Elem> m;
    for (int z = 0; z < n; ++z) {
        bool central = true;
        for (int x = 0; x < n && central; ++x) central = g.mul(z, x) == g.mul(x, z);
        if (central) m.push_back(z);
    }
    return Subgroup{g, std::move(m)};
}

Subgroup derived_subgroup(const FiniteGroup& g) {
    int n = g.size();
    std::vector<char> seen(n, 0);
    std::vector<Elem> seed;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Elem c = g.comm(a, b);
            if (!seen[c]) {
                seen[c] = 1;
                seed.push_back(c);
            }
        }
    return closure_nocap(g, seed);
}

Subgroup omega1(const FiniteGroup& g, int p) {
    if (!is_prime(p)) throw PreconditionViolated("omega1 needs a prime");
    std::vector<Elem> seed;
    for (int x = 0; x < g.size(); ++x)
        if (g.order(x) == p) seed.push_back(x);
    return closure_nocap(g, seed);
}

Subgroup frattini_pgroup(const FiniteGroup& g) {
    int p = 0;
    if (g.size() == 1) return trivial_subgroup(g);
    if (!is_prime_power(g.size(), &p))
        throw NotPGroup("frattini_pgroup needs a group of prime power order");
    std::vector<char> seen(g.size(), 0);
    std::vector<Elem> seed;
    auto push = [&](Elem v) {
        if (!seen[v]) {
            seen[v] = 1;
            seed.push_back(v);
        }
    };
    for (int a = 0; a < g.size(); ++a) push(g.pow(a, p));
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b) push(g.comm(a, b));
    return closure_nocap(g, seed);
}

Subgroup centralizer(const FiniteGroup& g, const std::vector<Elem>& xs) {
    std::vector<Elem> m;
    for (int z = 0; z < g.size(); ++z) {
        bool ok = true;
        for (Elem x : xs)
            if (g.mul(z, x) != g.mul(x, z)) {
                ok = false;
                break;
            }
        if (ok) m.push_back(z);
    }
    return Subgroup{g, std::move(m)};
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
    std::vector<char> in(g.size(), 0);
    for (Elem m : h.members) in[m] = 1;
    std::vector<Elem> res;
    for (int z = 0; z < g.size(); ++z) {
        bool ok = true;
        for (Elem m : h.members)
            if (!in[g.conj(m, z)]) {
                ok = false;
                break;
            }
        if (ok) res.push_back(z);
    }
    return Subgroup{g, std::move(res)};
}

Subgroup sylow(const FiniteGroup& g, int p) {
    if (!is_prime(p)) throw PreconditionViolated("sylow needs a prime");
    int n = g.size();
    int ppart = 1;
    int m = n;
    while (m % p == 0) {
        m /= p;
        ppart *= p;
    }
    if (ppart == 1) return trivial_subgroup(g);

    auto is_p_elem = [&](Elem x) {
        int o = g.order(x);
        while (o % p == 0) o /= p;
        return o == 1 && x != 0;
    };

    Elem first = -1;
    for (int x = 1; x < n; ++x)
        if (is_p_elem(x)) {
            first = x;
            break;
        }
    Subgroup cur = closure_nocap(g, {first});
    while (cur.size() < ppart) {
        Subgroup nor = normalizer(g, cur);
        Elem pick = -1;
        for (Elem x : nor.members) {
            if (cur.contains(x) || !is_p_elem(x)) continue;
            if (cur.contains(g.pow(x, p))) {
                pick = x;
                break;
            }
        }
        if (pick < 0) throw Error("sylow climbing stalled");  // cannot happen in a group
        std::vector<Elem> seed = cur.members;
        seed.push_back(pick);
        cur = closure_nocap(g, seed);
    }
    return cur;
}

Subgroup o_p(const FiniteGroup& g, int p) {
    Subgroup s = sylow(g, p);
    if (s.size() == 1) return s;
    std::vector<char> keep(g.size(), 0);
    for (Elem m : s.members) keep[m] = 1;
    for (int z = 0; z < g.size(); ++z) {
        std::vector<char> conj(g.size(), 0);
        for (Elem m : s.members) conj[g.conj(m, z)] = 1;
        for (int x = 0; x < g.size(); ++x) keep[x] = keep[x] && conj[x];
    }
    std::vector<Elem> res;
    for (int x = 0; x < g.size(); ++x)
        if (keep[x]) res.push_back(x);
    return Subgroup{g, std::move(res)};
}

std::optional<int> nilpotency_class(const FiniteGroup& g) {
    if (g.size() == 1) return 0;
    Subgroup gamma = whole_subgroup(g);
    int cls = 0;
    while (true) {
        // next term: closure of [G, gamma]
        std::vector<char> seen(g.size(), 0);
        std::vector<Elem> seed;
        for (int a = 0; a < g.size(); ++a)
            for (Elem h : gamma.members) {
                Elem c = g.comm(a, h);
                if (!seen[c]) {
                    seen[c] = 1;
                    seed.push_back(c);
                }
            }
        Subgroup next = closure_nocap(g, seed);
        ++cls;
        if (next.size() == 1) return cls;
        if (next.size() == gamma.size()) return std::nullopt;
        gamma = std::move(next);
    }
}

int exponent(const FiniteGroup& g) {
    long e = 1;
    for (int x = 0; x < g.size(); ++x) e = std::lcm(e, (long)g.order(x));
    return (int)e;
}

bool is_abelian(const FiniteGroup& g) {
    for (int a = 0; a < g.size(); ++a)
        for (int b = a + 1; b < g.size(); ++b)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

OrderProfile order_profile(const FiniteGroup& g) {
    OrderProfile p;
    for (int x = 0; x < g.size(); ++x) p.add(g.order(x));
    return p;
}

Fingerprint fingerprint(const FiniteGroup& g) {
    return Fingerprint{g.size(), is_abelian(g), order_profile(g)};
}

bool is_abelian(const Subgroup& h) {
    const auto& g = h.parent;
    for (std::size_t i = 0; i < h.members.size(); ++i)
        for (std::size_t j = i + 1; j < h.members.size(); ++j)
            if (g.mul(h.members[i], h.members[j]) != g.mul(h.members[j], h.members[i]))
                return false;
    return true;
}

int exponent(const Subgroup& h) {
    long e = 1;
    for (Elem m : h.members) e = std::lcm(e, (long)h.parent.order(m));
    return (int)e;
}

OrderProfile order_profile(const Subgroup& h) {
    OrderProfile p;
    for (Elem m : h.members) p.add(h.parent.order(m));
    return p;
}

Fingerprint fingerprint(const Subgroup& h) {
    return Fingerprint{h.size(), is_abelian(h), order_profile(h)};
}

bool is_elementary_abelian_2(const Subgroup& h) {
    for (Elem m : h.members)
        if (h.parent.order(m) > 2) return false;
    return is_abelian(h);
}

bool is_normal(const Subgroup& h) { return normalizer(h.parent, h).size() == h.parent.size(); }

SpecialReport is_special_2group(const FiniteGroup& g) {
    int p = 0;
    if (g.size() > 1 && (!is_prime_power(g.size(), &p) || p != 2))
        throw NotPGroup("special test needs a 2-group");
    SpecialReport r{false, false, trivial_subgroup(g), trivial_subgroup(g), trivial_subgroup(g),
                    ""};
    r.derived = derived_subgroup(g);
    r.frattini = frattini_pgroup(g);
    r.center = center(g);
    if (exponent(g) <= 2) {
        r.special = true;
        r.elementary_abelian = true;
        r.detail = "elementary abelian";
        return r;
    }
    bool eq = r.derived.members == r.frattini.members && r.frattini.members == r.center.members;
    bool elem = eq && is_elementary_abelian_2(r.center);
    r.special = eq && elem;
    r.detail = r.special ? "derived = Frattini = center, elementary abelian"
               : !eq     ? "derived/Frattini/center differ"
                         : "common subgroup is not elementary abelian";
    return r;
}

FiniteGroup extract_subgroup(const Subgroup& h) {
    const auto& g = h.parent;
    int k = h.size();
    std::vector<int> rank(g.size(), -1);
    for (int i = 0; i < k; ++i) rank[h.members[i]] = i;
    GroupData d;
    d.n = k;
    d.table.resize((std::size_t)k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Elem prod = g.mul(h.members[i], h.members[j]);
            if (rank[prod] < 0) throw Error("member list is not closed");
            d.table[(std::size_t)i * k + j] = rank[prod];
        }
    if (!g.labels().empty()) {
        d.labels.resize(k);
        for (int i = 0; i < k; ++i) d.labels[i] = g.labels()[h.members[i]];
    }
    return finalize_structural(std::move(d));
}

std::vector<Elem> generating_set(const FiniteGroup& g) {
    if (g.size() == 1) return {};
    return greedy_generating_set(g.data());
}

std::vector<int> conjugacy_class_sizes(const FiniteGroup& g) {
    int n = g.size();
    std::vector<int> cls(n, -1);
    std::vector<int> size_of(n, 0);
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        std::vector<Elem> orbit;
        std::vector<char> in(n, 0);
        orbit.push_back(x);
        in[x] = 1;
        for (std::size_t h = 0; h < orbit.size(); ++h)
            for (int z = 0; z < n; ++z) {
                Elem y = g.conj(orbit[h], z);
                if (!in[y]) {
                    in[y] = 1;
                    orbit.push_back(y);
                }
            }
        for (Elem y : orbit) cls[y] = x;
        size_of[x] = (int)orbit.size();
    }
    std::vector<int> res(n);
    for (int x = 0; x < n; ++x) res[x] = size_of[cls[x]];
    return res;
}

}  // namespace icayley
