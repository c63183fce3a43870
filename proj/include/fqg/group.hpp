#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "fqg/errors.hpp"

namespace fqg {

using Idx = int32_t;  // element index within a Group; identity is always 0

struct Permutation {
    std::vector<int32_t> img;  // 0-based images

    int32_t degree() const { return static_cast<int32_t>(img.size()); }
    static Permutation identity(int32_t n);
    Permutation compose(const Permutation& other) const;  // apply *this, then other
    Permutation inverse() const;
    bool is_identity() const;
    bool operator==(const Permutation& o) const { return img == o.img; }
    bool operator<(const Permutation& o) const { return img < o.img; }
    std::string cycle_notation() const;  // 1-based
};

/// Letters are (generator position, exponent); words multiply left to right.
using PcWord = std::vector<std::pair<int, int64_t>>;

struct PcPresentation {
    std::vector<int64_t> rel_orders;          // relative order of each generator, >= 2
    std::vector<PcWord> power;                // power[i]: g_i^{o_i}, letters with gen > i; empty = 1
    std::vector<std::vector<PcWord>> conj;    // conj[i][j], i < j: g_j^{g_i}; empty = trivial
    std::vector<std::string> names;           // optional generator names

    int ngens() const { return static_cast<int>(rel_orders.size()); }
    void validate() const;  // shape/index checks; throws InvalidParameters
};

class Group;
using GroupRef = std::shared_ptr<const Group>;

class Group : public std::enable_shared_from_this<Group> {
public:
    static constexpr int64_t kDefaultOrderCap = 200000;

    int64_t order() const { return order_; }
    Idx identity() const { return 0; }
    Idx mult(Idx a, Idx b) const;
    Idx inv(Idx a) const { return inv_[a]; }
    Idx conj(Idx a, Idx g) const { return mult(mult(inv(g), a), g); }  // a^g
    Idx pow(Idx a, int64_t e) const;
    int64_t element_order(Idx a) const;
    std::string element_name(Idx a) const;

    const std::vector<Idx>& generators() const { return gens_; }
    int ngens() const { return static_cast<int>(gens_.size()); }
    Idx mult_gen(Idx a, int i) const { return gen_mult_[i][a]; }  // a * generators()[i]
    Idx conj_gen(Idx a, int i) const { return gen_conj_[i][a]; }  // a ^ generators()[i]

    // conjugacy classes: orbit BFS under generator conjugation; classes ordered by
    // least member, members sorted. Cached; thread-safe.
    const std::vector<std::vector<Idx>>& conjugacy_classes() const;
    const std::vector<int32_t>& class_of() const;  // element -> class id

    // dense multiplication table, built on demand for |G| <= cap (row-major a*|G|+b)
    const std::vector<Idx>* cayley_table(int64_t cap = 2048) const;

    static GroupRef from_permutations(const std::vector<Permutation>& gens,
                                      int64_t max_order = kDefaultOrderCap);
    static GroupRef from_pc(const PcPresentation& pres, int64_t max_order = kDefaultOrderCap);
    static GroupRef trivial();
    // group structure induced on a multiplicatively closed member set
    static GroupRef subview(GroupRef parent, const std::vector<Idx>& members,
                            const std::vector<Idx>& gens);
    // quotient structure on coset representatives (proj/section as computed by caller)
    static GroupRef quotient_group(GroupRef parent, std::vector<Idx> proj, std::vector<Idx> section,
                                   const std::vector<Idx>& gens);

    // subview/quotient backends: translation to the parent
    GroupRef parent() const { return parent_; }
    const std::vector<Idx>& subview_members() const { return members_; }
    const std::vector<Idx>& quotient_proj() const { return proj_; }
    const std::vector<Idx>& quotient_section() const { return section_; }

private:
    enum class Backend { Pc, Perm, Sub, Quot };

    Group() = default;
    void finish_construction();  // inv table, generator tables

    Backend backend_ = Backend::Pc;
    int64_t order_ = 0;
    std::vector<Idx> gens_;
    std::vector<Idx> inv_;
    std::vector<std::vector<Idx>> gen_mult_, gen_conj_;

    // pc backend
    PcPresentation pres_;
    std::vector<int64_t> stride_;
    std::vector<std::vector<std::vector<Idx>>> pc_pow_mult_;  // [i][j]: right-mult by g_i^(2^j)

    // perm backend
    std::vector<Permutation> elems_;
    std::unordered_map<uint64_t, std::vector<Idx>> perm_index_;  // hash -> candidates

    // sub/quot backends
    GroupRef parent_;
    std::vector<Idx> members_, parent_to_local_;  // sub
    std::vector<Idx> proj_, section_;             // quot

    Idx mult_raw(Idx a, Idx b) const;
    Idx perm_lookup(const Permutation& p) const;
    void decode_pc(Idx a, std::vector<int64_t>& e) const;

    mutable std::once_flag class_once_;
    mutable std::vector<std::vector<Idx>> classes_;
    mutable std::vector<int32_t> class_of_;
    mutable std::once_flag cayley_once_;
    mutable std::vector<Idx> cayley_;
    mutable bool cayley_built_ = false;
};

/// Subgroup as a sorted list of element indices of the parent, plus a small
/// generating set used by conjugation tests.
struct SubgroupHandle {
    GroupRef parent;
    std::vector<Idx> members;  // strictly increasing, contains 0
    std::vector<Idx> gens;     // generate the subgroup; may be empty for the trivial one

    int64_t order() const { return static_cast<int64_t>(members.size()); }
    bool contains(Idx x) const;
    uint64_t hash() const;
    bool operator==(const SubgroupHandle& o) const {
        return parent == o.parent && members == o.members;
    }
    bool operator<(const SubgroupHandle& o) const {
        if (members.size() != o.members.size()) return members.size() < o.members.size();
        return members < o.members;
    }
    void check_invariants() const;  // contains identity, Lagrange, closure spot checks
};

struct QuotientData {
    GroupRef parent;
    GroupRef quotient;
    std::vector<Idx> projection;  // parent index -> quotient index (surjective hom)
    std::vector<Idx> section;     // quotient index -> least coset representative
};

}  // namespace fqg
