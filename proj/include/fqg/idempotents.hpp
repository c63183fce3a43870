#pragma once

#include "fqg/cyclo.hpp"
#include "fqg/gf.hpp"
#include "fqg/shoda.hpp"

namespace fqg {

/// Element of F_qG: dense coefficient vector indexed by group element.
struct AlgebraElement {
    GroupRef group;
    FieldRef field;
    std::vector<FF> coeffs;

    bool is_zero() const;
    uint64_t hash() const;
    bool operator==(const AlgebraElement& o) const { return coeffs == o.coeffs; }
};

AlgebraElement algebra_zero(GroupRef G, FieldRef F);
AlgebraElement algebra_one(GroupRef G, FieldRef F);
AlgebraElement algebra_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement algebra_sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement algebra_mult(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement conjugate_element(const AlgebraElement& x, Idx g);  // g^-1 x g
bool is_class_function(const AlgebraElement& x);  // equivalent to centrality in F_qG

// K-hat: coefficient 1/|K| on K, zero elsewhere. Throws NotCoprime if p divides |K|.
AlgebraElement hat(const SubgroupHandle& K, FieldRef F);

// eps(K,H): K-hat if K = H, else the product of (H-hat - L-hat) over the normal
// subgroups L of K minimal over those properly containing H
AlgebraElement epsilon(GroupRef G, const SubgroupHandle& K, const SubgroupHandle& H, FieldRef F);

AlgebraElement sum_distinct_conjugates(GroupRef G, const AlgebraElement& x);

// eps_C(K,H) = 1/|K| sum_{g in K} tr(chi(g-bar)) g^-1, chi indexed by the coset label
AlgebraElement epsilon_C(GroupRef G, const ShodaPair& pair, const CyclotomicCoset& C, FieldRef F);

// e(G,K,H) and e_C(G,K,H): sums of distinct G-conjugates
AlgebraElement e_pair(GroupRef G, const SubgroupHandle& K, const SubgroupHandle& H, FieldRef F);
AlgebraElement e_C(GroupRef G, const ShodaPair& pair, const CyclotomicCoset& C, FieldRef F);

struct IdempotentRecord {
    int pair_index = 0;
    int64_t coset_label = 0;
    AlgebraElement value;
};

struct CompletenessReport {
    std::vector<IdempotentRecord> idempotents;
    bool distinct = false;
    bool all_central = false;
    bool all_idempotent = false;   // only meaningful when thorough
    bool all_orthogonal = false;   // only meaningful when thorough
    bool sum_is_one = false;
    bool thorough = false;
    int64_t dimension_covered = 0;  // sum of n^2 f over (pair, orbit)
    bool normally_monomial = false;
};

struct PairOrbits {
    ShodaPair pair;
    OrbitData orbits;
};

// builds E = { e_C(G,A,D) } and verifies its properties. `thorough` adds the
// quadratic checks (idempotency, pairwise orthogonality); by default they run
// when |G| is small enough for a multiplication table.
CompletenessReport completeness_check(GroupRef G, FieldRef F, const std::vector<PairOrbits>& pairs,
                                      int thoroughness = -1, int threads = 1);

}  // namespace fqg
