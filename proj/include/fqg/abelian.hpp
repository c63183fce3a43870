#pragma once

#include "fqg/group_ops.hpp"

namespace fqg {

/// Elementary-divisor basis of a finite abelian subgroup: members factor uniquely
/// as products of basis powers, with divisors d_1 | d_2 | ... | d_k.
struct AbelianBasis {
    SubgroupHandle group;
    std::vector<Idx> basis;          // element indices in group.parent
    std::vector<int64_t> divisors;   // orders of the basis elements, ascending chain
    std::vector<std::vector<int64_t>> exps;  // exps[i]: exponent tuple of group.members[i]

    int64_t order() const { return group.order(); }
    int64_t exponent() const { return divisors.empty() ? 1 : divisors.back(); }
};

struct LinearCharacter {
    std::vector<int64_t> exponents;  // c_i in [0, d_i)
    int64_t order = 1;               // lcm of d_i / gcd(c_i, d_i)
};

// throws NotAbelian
AbelianBasis abelian_basis(const SubgroupHandle& A);

// chi(member j) = zeta_L ^ eval; L = exponent of the group
int64_t character_exponent(const AbelianBasis& B, const LinearCharacter& chi, size_t member_pos);

std::vector<LinearCharacter> linear_characters(const AbelianBasis& B);

SubgroupHandle character_kernel(const AbelianBasis& B, const LinearCharacter& chi);

// exactly the subgroups D <= A with A/D cyclic (kernels of linear characters,
// deduplicated), sorted by (order, member list); includes A itself
std::vector<SubgroupHandle> cyclic_quotient_subgroups(const AbelianBasis& B);

}  // namespace fqg
