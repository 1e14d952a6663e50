#include "icayley/presentation.hpp"

#include <algorithm>

#include "icayley/errors.hpp"

namespace icayley {

namespace {

std::vector<int> zero_vec(int s) { return std::vector<int>(s, 0); }

}  // namespace

void CTPresentation::set_comm(int i, int j, std::vector<int> v) {
    if (i >= j) throw BadConstruction("set_comm expects i < j");
    if (comm.empty()) comm.assign(m, std::vector<std::vector<int>>(m));
    comm.at(i).at(j) = std::move(v);
}

const std::vector<int>& CTPresentation::get_comm(int i, int j) const {
    static const std::vector<int> empty;
    if (comm.empty()) return empty;
    const auto& v = comm.at(i).at(j);
    return v;
}

void CTPresentation::validate() const {
    if (!is_prime(p)) throw BadConstruction("presentation modulus must be prime");
    if (m < 1 || s < 0) throw BadConstruction("presentation needs m >= 1, s >= 0");
    if (static_cast<int>(sq.size()) != m) throw BadConstruction("sq must have one row per generator");
    auto check_vec = [&](const std::vector<int>& v) {
        if (static_cast<int>(v.size()) != s) throw BadConstruction("exponent vector has wrong length");
        for (int c : v)
            if (c < 0 || c >= p) throw BadConstruction("exponent out of range");
    };
    for (const auto& v : sq) check_vec(v);
    if (!comm.empty()) {
        if (static_cast<int>(comm.size()) != m) throw BadConstruction("comm must be m x m");
        for (int i = 0; i < m; ++i) {
            if (static_cast<int>(comm[i].size()) != m) throw BadConstruction("comm must be m x m");
            for (int j = i + 1; j < m; ++j)
                if (!comm[i][j].empty()) check_vec(comm[i][j]);
        }
    }
    double n = 1;
    for (int i = 0; i < m + s; ++i) n *= p;
    if (n > kSizeCeiling) throw SizeCeiling("presentation group exceeds the size ceiling");
}

FiniteGroup central_type_group(const CTPresentation& pres, bool paranoid) {
    pres.validate();
    const int p = pres.p, m = pres.m, s = pres.s, d = m + s;
    int n = 1;
    for (int i = 0; i < d; ++i) n *= p;

    auto digits_of = [&](int idx, std::vector<int>& dig) {
        for (int i = d - 1; i >= 0; --i) {
            dig[i] = idx % p;
            idx /= p;
        }
    };
    auto index_of = [&](const std::vector<int>& dig) {
        int idx = 0;
        for (int i = 0; i < d; ++i) idx = idx * p + dig[i];
        return idx;
    };

    std::vector<int> da(d), db(d), dc(d);
    std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n);
    const std::vector<int> zero = zero_vec(s);
    for (int a = 0; a < n; ++a) {
        digits_of(a, da);
        for (int b = 0; b < n; ++b) {
            digits_of(b, db);
            for (int i = 0; i < m; ++i) dc[i] = (da[i] + db[i]) % p;
            for (int t = 0; t < s; ++t) dc[m + t] = (da[m + t] + db[m + t]) % p;
            for (int i = 0; i < m; ++i) {
                if (da[i] + db[i] >= p)
                    for (int t = 0; t < s; ++t) dc[m + t] = (dc[m + t] + pres.sq[i][t]) % p;
                for (int j = i + 1; j < m; ++j) {
                    int mult = (da[j] * db[i]) % p;
                    if (mult == 0) continue;
                    const auto& cv = pres.get_comm(i, j);
                    if (cv.empty()) continue;
                    for (int t = 0; t < s; ++t) dc[m + t] = (dc[m + t] + mult * cv[t]) % p;
                }
            }
            table[static_cast<std::size_t>(a) * n + b] = index_of(dc);
        }
    }

    // generators: the x_i, then any z_j outside their closure
    GroupData data;
    data.n = n;
    data.table = std::move(table);
    std::vector<Elem> gens;
    std::vector<int> dig(d, 0);
    for (int i = 0; i < m; ++i) {
        std::fill(dig.begin(), dig.end(), 0);
        dig[i] = 1;
        gens.push_back(index_of(dig));
    }
    data.gens = gens;
    FiniteGroup g = finalize_structural(std::move(data));

    if (paranoid && n <= 4096) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                        throw NotAGroup("presentation product is not associative");
    }

    auto reached = closure_nocap(g, gens);
    bool extended = false;
    for (int t = 0; t < s; ++t) {
        std::fill(dig.begin(), dig.end(), 0);
        dig[m + t] = 1;
        Elem z = index_of(dig);
        if (!reached.contains(z)) {
            gens.push_back(z);
            reached = closure_nocap(g, gens);
            extended = true;
        }
    }
    if (!extended) return g;
    GroupData d2 = g.data();
    d2.gens = gens;
    return FiniteGroup(std::make_shared<GroupData>(std::move(d2)));
}

}  // namespace icayley
