#ifndef ICAYLEY_GROUP_HPP
#define ICAYLEY_GROUP_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "icayley/errors.hpp"

namespace icayley {

using Elem = int;

constexpr int kSizeCeiling = 32768;   // hard cap on group order
constexpr int kSizeWarn = 4096;       // builders flag sizes above this
constexpr int kFullAssocLimit = 512;  // full associativity check up to here
constexpr int kAssocSamples = 10000;  // sampled triples above the limit
constexpr std::uint64_t kDefaultSeed = 0xC41E9;

// Multiset of element orders, e.g. {1:1, 2:3, 4:12}.
class OrderProfile {
  public:
    OrderProfile() = default;
    void add(int order) { ++counts_[order]; }
    int count(int order) const {
        auto it = counts_.find(order);
        return it == counts_.end() ? 0 : it->second;
    }
    const std::map<int, int>& counts() const { return counts_; }
    bool operator==(const OrderProfile& o) const { return counts_ == o.counts_; }
    bool operator!=(const OrderProfile& o) const { return !(*this == o); }
    std::string to_string() const;

  private:
    std::map<int, int> counts_;
};

struct Fingerprint {
    int order = 1;
    bool abelian = true;
    OrderProfile profile;
    bool operator==(const Fingerprint& o) const {
        return order == o.order && abelian == o.abelian && profile == o.profile;
    }
    bool operator!=(const Fingerprint& o) const { return !(*this == o); }
    std::string to_string() const;
};

// Immutable payload shared by FiniteGroup handles.
struct GroupData {
    int n = 1;
    std::vector<std::int32_t> table;  // row-major, table[a*n+b] = a*b
    std::vector<std::int32_t> inv;
    std::vector<std::int32_t> ord;
    std::vector<int> gens;                // distinguished generating list
    std::vector<std::string> labels;      // empty, or one label per element
    std::string recipe;                   // how the group was built, if known
    int sdp_kernel = 0;                   // >0: top level is K x| <z>, |K| = sdp_kernel
    int sdp_m = 0;                        // complement order when sdp_kernel > 0
};

class FiniteGroup {
  public:
    explicit FiniteGroup(std::shared_ptr<const GroupData> d) : d_(std::move(d)) {}

    int size() const { return d_->n; }
    Elem mul(Elem a, Elem b) const { return d_->table[(std::size_t)a * d_->n + b]; }
    Elem inv(Elem a) const { return d_->inv[a]; }
    int order(Elem a) const { return d_->ord[a]; }
    Elem conj(Elem x, Elem g) const { return mul(inv(g), mul(x, g)); }  // x^g
    Elem comm(Elem x, Elem y) const {                                   // [x,y]
        return mul(inv(x), mul(inv(y), mul(x, y)));
    }
    Elem pow(Elem a, int k) const;

    const std::vector<int>& gens() const { return d_->gens; }
    const std::vector<std::string>& labels() const { return d_->labels; }
    std::string label(Elem a) const;
    const std::string& recipe() const { return d_->recipe; }
    int sdp_kernel() const { return d_->sdp_kernel; }
    int sdp_m() const { return d_->sdp_m; }
    // index of the distinguished complement generator of a semidirect product
    Elem sdp_z() const {
        if (d_->sdp_kernel <= 0) throw Error("group was not built as a semidirect product");
        return d_->sdp_kernel;
    }

    const GroupData& data() const { return *d_; }
    std::shared_ptr<const GroupData> shared_data() const { return d_; }

    bool same_table(const FiniteGroup& o) const;

  private:
    std::shared_ptr<const GroupData> d_;
};

// A subgroup is a sorted member list against a parent group.
struct Subgroup {
    FiniteGroup parent;
    std::vector<Elem> members;  // sorted ascending, always contains 0

    int size() const { return (int)members.size(); }
    bool contains(Elem x) const;
    bool is_whole_group() const { return size() == parent.size(); }
};

struct ClosureResult {
    std::optional<Subgroup> subgroup;  // set unless the cap was exceeded
    bool exceeded = false;
    int reached = 0;  // elements seen before giving up (only if exceeded)
};

// Validates an arbitrary table (Latin property, identity, inverses,
// associativity: all triples for n <= 512, >= 10000 seeded samples above)
// and relabels so the identity gets index 0. Throws NotAGroup / SizeCeiling.
FiniteGroup group_from_table(const std::vector<std::vector<int>>& table,
                             std::vector<std::string> labels = {},
                             std::uint64_t seed = kDefaultSeed,
                             bool allow_oversize = false);

// Internal entry point for structural builders whose tables are associative
// by construction; still derives inv/ord and checks the Latin property.
FiniteGroup finalize_structural(GroupData data);

ClosureResult closure(const FiniteGroup& g, const std::vector<Elem>& seed, int cap = 0);
Subgroup closure_nocap(const FiniteGroup& g, const std::vector<Elem>& seed);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_subgroup(const FiniteGroup& g);

Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
// <x : x^p = 1>; p must be prime.
Subgroup omega1(const FiniteGroup& g, int p = 2);
// Frattini subgroup of a p-group: closure of commutators and p-th powers.
Subgroup frattini_pgroup(const FiniteGroup& g);
// Sylow p-subgroup by normalizer climbing; trivial subgroup if p does not
// divide |G|.
Subgroup sylow(const FiniteGroup& g, int p);
// Largest normal p-subgroup: intersection of the Sylow p-subgroup's
// conjugates.
Subgroup o_p(const FiniteGroup& g, int p);

// nullopt when the lower central series stalls above the trivial group.
std::optional<int> nilpotency_class(const FiniteGroup& g);
int exponent(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);
OrderProfile order_profile(const FiniteGroup& g);
Fingerprint fingerprint(const FiniteGroup& g);

// Subgroup views of the same invariants (computed inside the parent table).
bool is_abelian(const Subgroup& h);
int exponent(const Subgroup& h);
OrderProfile order_profile(const Subgroup& h);
Fingerprint fingerprint(const Subgroup& h);
bool is_elementary_abelian_2(const Subgroup& h);
bool is_normal(const Subgroup& h);

struct SpecialReport {
    bool special = false;
    bool elementary_abelian = false;  // the whole group is elementary abelian
    Subgroup derived;
    Subgroup frattini;
    Subgroup center;
    std::string detail;
};

// Special 2-group test: elementary abelian, or G' = Phi(G) = Z(G) elementary
// abelian. Throws NotPGroup when |G| is not a power of 2.
SpecialReport is_special_2group(const FiniteGroup& g);

Subgroup centralizer(const FiniteGroup& g, const std::vector<Elem>& xs);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);

// Reindexes a subgroup as a standalone group (sorted members, so the
// identity stays at index 0). Generating list is recomputed greedily.
FiniteGroup extract_subgroup(const Subgroup& h);

// Greedy smallest-index generating list; uses the Burnside basis (mod
// Frattini) when |G| is a prime power, which makes it minimal there.
std::vector<Elem> generating_set(const FiniteGroup& g);

std::vector<int> conjugacy_class_sizes(const FiniteGroup& g);  // per element

bool is_prime(int p);
bool is_prime_power(int n, int* prime_out = nullptr);

}  // namespace icayley

#endif
