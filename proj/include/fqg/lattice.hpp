#pragma once

#include "fqg/group_ops.hpp"

namespace fqg {

struct NormalLattice {
    GroupRef group;
    std::vector<SubgroupHandle> normals;  // sorted by (order, member list)

    int find(const std::vector<Idx>& members) const;  // -1 if absent
};

// all normal subgroups: normal closures of single conjugacy classes, closed
// under pairwise joins (and intersections) to a fixed point
NormalLattice normal_subgroups(GroupRef G);

// A_N: normal subgroup over N whose quotient A_N/N is abelian of maximal order;
// deterministic tie-break (least member list)
SubgroupHandle maximal_abelian_normal_over(GroupRef G, const SubgroupHandle& N,
                                           const NormalLattice& L);

// every candidate of maximal order (for choice-invariance checks)
std::vector<SubgroupHandle> all_maximal_abelian_normal_over(GroupRef G, const SubgroupHandle& N,
                                                            const NormalLattice& L);

}  // namespace fqg
