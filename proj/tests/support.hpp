#pragma once

// shared helpers for the test suites: small group builders and brute-force oracles

#include <set>
#include <vector>

#include "fqg/group_ops.hpp"

namespace fqg::testsupport {

inline Permutation perm(std::vector<int32_t> img) { return Permutation{std::move(img)}; }

inline GroupRef s3() { return Group::from_permutations({perm({1, 2, 0}), perm({1, 0, 2})}); }

inline GroupRef a4() {
    return Group::from_permutations({perm({1, 2, 0, 3}), perm({1, 0, 3, 2})});
}

inline GroupRef q8() {
    PcPresentation P;
    P.rel_orders = {2, 2, 2};
    P.power = {{{2, 1}}, {{2, 1}}, {}};
    P.conj = {{{}, {{1, 1}, {2, 1}}, {}}, {{}, {}, {}}, {{}, {}, {}}};
    P.names = {"i", "j", "z"};
    return Group::from_pc(P);
}

inline GroupRef dihedral(int64_t n) {  // order 2n
    PcPresentation P;
    P.rel_orders = {2, n};
    P.power = {{}, {}};
    P.conj = {{{}, {{1, n - 1}}}, {{}, {}}};
    P.names = {"s", "r"};
    return Group::from_pc(P);
}

inline GroupRef abelian_pc(const std::vector<int64_t>& orders) {
    PcPresentation P;
    P.rel_orders = orders;
    P.power.assign(orders.size(), {});
    P.conj.assign(orders.size(), std::vector<PcWord>(orders.size()));
    return Group::from_pc(P);
}

inline GroupRef cyclic(int64_t n) { return abelian_pc({n}); }

// SL(2,3): Q8 extended by an order-3 cycle of i, j, ij
inline GroupRef sl23() {
    PcPresentation P;
    P.rel_orders = {3, 2, 2, 2};
    P.power = {{}, {{3, 1}}, {{3, 1}}, {}};
    P.conj.assign(4, std::vector<PcWord>(4));
    P.conj[0][1] = {{2, 1}};          // i^t = j
    P.conj[0][2] = {{1, 1}, {2, 1}};  // j^t = ij
    P.conj[1][2] = {{2, 1}, {3, 1}};  // j^i = jz
    P.names = {"t", "i", "j", "z"};
    return Group::from_pc(P);
}

// every subgroup by closure growth; exponential, keep |G| small
inline std::vector<SubgroupHandle> all_subgroups(GroupRef G) {
    std::vector<SubgroupHandle> out{trivial_subgroup(G)};
    std::set<std::vector<Idx>> seen{out[0].members};
    for (size_t head = 0; head < out.size(); ++head) {
        SubgroupHandle H = out[head];
        for (Idx g = 0; g < G->order(); ++g) {
            if (H.contains(g)) continue;
            std::vector<Idx> gens = H.gens;
            gens.push_back(g);
            auto K = subgroup_closure(G, gens);
            if (seen.insert(K.members).second) out.push_back(K);
        }
    }
    return out;
}

inline Idx element_of_order(GroupRef G, int64_t n) {
    for (Idx a = 0; a < G->order(); ++a)
        if (G->element_order(a) == n) return a;
    return -1;
}

}  // namespace fqg::testsupport
