#include "fqg/lattice.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "fqg/util.hpp"

namespace fqg {

int NormalLattice::find(const std::vector<Idx>& members) const {
    for (size_t i = 0; i < normals.size(); ++i)
        if (normals[i].members == members) return static_cast<int>(i);
    return -1;
}

NormalLattice normal_subgroups(GroupRef G) {
    const auto& classes = G->conjugacy_classes();
    const auto& class_of = G->class_of();

    // classes of g and g^k (k coprime to |g|) have the same normal closure
    std::vector<uint8_t> done(classes.size(), 0);

    std::vector<SubgroupHandle> list;
    std::unordered_set<uint64_t> seen;
    auto add = [&](SubgroupHandle H) -> bool {
        uint64_t h = H.hash();
        if (!seen.insert(h).second) return false;
        list.push_back(std::move(H));
        return true;
    };

    add(trivial_subgroup(G));
    add(whole_group(G));
    for (size_t c = 0; c < classes.size(); ++c) {
        if (done[c]) continue;
        Idx rep = classes[c][0];
        int64_t o = G->element_order(rep);
        for (int64_t k = 1; k < o; ++k)
            if (std::gcd(k, o) == 1) done[class_of[G->pow(rep, k)]] = 1;
        add(subgroup_closure_reduced(G, classes[c]));
    }

    // close under joins; pairwise, to a fixed point
    size_t stable_from = 0;
    while (stable_from < list.size()) {
        size_t upto = list.size();
        for (size_t i = 0; i < upto; ++i) {
            size_t j0 = std::max(i + 1, stable_from);
            for (size_t j = j0; j < upto; ++j) {
                const auto& A = list[i];
                const auto& B = list[j];
                if (A.order() % B.order() == 0 &&
                    std::includes(A.members.begin(), A.members.end(), B.members.begin(),
                                  B.members.end()))
                    continue;
                if (B.order() % A.order() == 0 &&
                    std::includes(B.members.begin(), B.members.end(), A.members.begin(),
                                  A.members.end()))
                    continue;
                add(join(G, A, B));
            }
        }
        stable_from = upto;
    }

    // intersections cannot produce anything new (normal subgroups are unions of
    // classes, so the seeds already generate everything); kept as a cross-check
    {
        size_t n0 = list.size();
        for (size_t i = 0; i < n0; ++i)
            for (size_t j = i + 1; j < n0; ++j) {
                if (add(intersect(list[i], list[j])))
                    throw Error("normal lattice missed an intersection (internal)");
            }
    }

    for (const auto& H : list)
        if (!is_normal(G, H)) throw Error("normal lattice contains a non-normal subgroup (internal)");

    std::sort(list.begin(), list.end());
    NormalLattice L;
    L.group = std::move(G);
    L.normals = std::move(list);
    return L;
}

SubgroupHandle maximal_abelian_normal_over(GroupRef G, const SubgroupHandle& N,
                                           const NormalLattice& L) {
    const SubgroupHandle* best = nullptr;
    for (const auto& A : L.normals) {
        if (A.order() % N.order() != 0 || A.order() < N.order()) continue;
        if (!std::includes(A.members.begin(), A.members.end(), N.members.begin(), N.members.end()))
            continue;
        if (!quotient_abelian(G, A, N)) continue;
        if (!best || A.order() > best->order() ||
            (A.order() == best->order() && A.members < best->members))
            best = &A;
    }
    if (!best) throw Error("no abelian normal over N (internal; N itself qualifies)");
    return *best;
}

std::vector<SubgroupHandle> all_maximal_abelian_normal_over(GroupRef G, const SubgroupHandle& N,
                                                            const NormalLattice& L) {
    std::vector<SubgroupHandle> cands;
    int64_t best = 0;
    for (const auto& A : L.normals) {
        if (A.order() < N.order() || A.order() % N.order() != 0) continue;
        if (!std::includes(A.members.begin(), A.members.end(), N.members.begin(), N.members.end()))
            continue;
        if (!quotient_abelian(G, A, N)) continue;
        best = std::max(best, A.order());
        cands.push_back(A);
    }
    std::vector<SubgroupHandle> out;
    for (auto& A : cands)
        if (A.order() == best) out.push_back(std::move(A));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fqg
