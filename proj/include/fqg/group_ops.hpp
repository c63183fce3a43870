#pragma once

#include "fqg/group.hpp"

namespace fqg {

SubgroupHandle whole_group(GroupRef G);
SubgroupHandle trivial_subgroup(GroupRef G);

// smallest subgroup containing gens; members sorted
SubgroupHandle subgroup_closure(GroupRef G, const std::vector<Idx>& gens);

// closure that also reduces the generating set greedily (each kept generator
// strictly enlarges the subgroup)
SubgroupHandle subgroup_closure_reduced(GroupRef G, const std::vector<Idx>& candidates);

// greedy small generating set for a known member list
std::vector<Idx> reduce_generators(GroupRef G, const std::vector<Idx>& members);

SubgroupHandle conjugate_subgroup(const SubgroupHandle& H, Idx g);
bool is_normal(GroupRef G, const SubgroupHandle& H);

// N_G(H) = {g : H^g = H}
SubgroupHandle normalizer(GroupRef G, const SubgroupHandle& H);

// largest normal subgroup of G inside H (union of the conjugacy classes contained in H)
SubgroupHandle core(GroupRef G, const SubgroupHandle& H);

SubgroupHandle intersect(const SubgroupHandle& A, const SubgroupHandle& B);
// AB for normal A (or B normalizing A); the product set is then a subgroup
SubgroupHandle join(GroupRef G, const SubgroupHandle& A, const SubgroupHandle& B);

QuotientData quotient(GroupRef G, const SubgroupHandle& N);  // throws NotNormal

GroupRef subgroup_as_group(const SubgroupHandle& H);
// H viewed inside the subview group S built from A (H must lie in A)
SubgroupHandle localize(const SubgroupHandle& H, const SubgroupHandle& A, GroupRef S);
// image of H under a quotient map
SubgroupHandle project_subgroup(const SubgroupHandle& H, const QuotientData& qd);

struct Predicates {
    bool is_abelian = false;
    bool is_cyclic = false;
    int64_t exponent = 1;
};

Predicates predicates(GroupRef G);
Predicates predicates(const SubgroupHandle& H);

// [x, y] commutes-check on generators, relative to a normal subgroup's member set:
// true iff [g_i, g_j] lies in N for all generator pairs of H
bool quotient_abelian(GroupRef G, const SubgroupHandle& H, const SubgroupHandle& N);

// derived subgroup H' (normal closure in H of generator commutators)
SubgroupHandle derived_subgroup(GroupRef G, const SubgroupHandle& H);

std::vector<uint8_t> member_mask(const SubgroupHandle& H);

}  // namespace fqg
