#include "fqg/group_ops.hpp"

#include <algorithm>
#include <numeric>

#include "fqg/util.hpp"

namespace fqg {

SubgroupHandle whole_group(GroupRef G) {
    SubgroupHandle H;
    H.parent = G;
    H.members.resize(G->order());
    std::iota(H.members.begin(), H.members.end(), 0);
    H.gens = G->generators();
    return H;
}

SubgroupHandle trivial_subgroup(GroupRef G) {
    SubgroupHandle H;
    H.parent = std::move(G);
    H.members = {0};
    return H;
}

SubgroupHandle subgroup_closure(GroupRef G, const std::vector<Idx>& gens) {
    std::vector<uint8_t> in(G->order(), 0);
    std::vector<Idx> list{0};
    in[0] = 1;
    std::vector<Idx> use;
    for (Idx g : gens)
        if (g != 0 && !std::count(use.begin(), use.end(), g)) use.push_back(g);
    for (size_t head = 0; head < list.size(); ++head) {
        for (Idx g : use) {
            Idx y = G->mult(list[head], g);
            if (!in[y]) {
                in[y] = 1;
                list.push_back(y);
            }
        }
    }
    std::sort(list.begin(), list.end());
    SubgroupHandle H;
    H.parent = std::move(G);
    H.members = std::move(list);
    H.gens = std::move(use);
    return H;
}

SubgroupHandle subgroup_closure_reduced(GroupRef G, const std::vector<Idx>& candidates) {
    SubgroupHandle H = trivial_subgroup(G);
    std::vector<Idx> gens;
    for (Idx c : candidates) {
        if (!H.contains(c)) {
            gens.push_back(c);
            H = subgroup_closure(G, gens);
        }
    }
    return H;
}

std::vector<Idx> reduce_generators(GroupRef G, const std::vector<Idx>& members) {
    SubgroupHandle H = trivial_subgroup(G);
    std::vector<Idx> gens;
    for (Idx c : members) {
        if (!H.contains(c)) {
            gens.push_back(c);
            H = subgroup_closure(G, gens);
            if (H.order() == static_cast<int64_t>(members.size())) break;
        }
    }
    return gens;
}

SubgroupHandle conjugate_subgroup(const SubgroupHandle& H, Idx g) {
    SubgroupHandle R;
    R.parent = H.parent;
    R.members.reserve(H.members.size());
    for (Idx m : H.members) R.members.push_back(H.parent->conj(m, g));
    std::sort(R.members.begin(), R.members.end());
    R.gens.reserve(H.gens.size());
    for (Idx m : H.gens) R.gens.push_back(H.parent->conj(m, g));
    return R;
}

bool is_normal(GroupRef G, const SubgroupHandle& H) {
    for (size_t i = 0; i < G->generators().size(); ++i)
        for (Idx h : H.gens)
            if (!H.contains(G->conj_gen(h, static_cast<int>(i)))) return false;
    return true;
}

SubgroupHandle normalizer(GroupRef G, const SubgroupHandle& H) {
    if (H.order() == 1 || H.order() == G->order()) return whole_group(G);
    std::vector<uint8_t> visited(G->order(), 0);
    std::vector<Idx> result;
    std::vector<uint8_t> hm = member_mask(H);
    for (Idx rep = 0; rep < G->order(); ++rep) {
        if (visited[rep]) continue;
        std::vector<Idx> coset;
        coset.reserve(H.members.size());
        for (Idx m : H.members) {
            Idx x = G->mult(rep, m);
            visited[x] = 1;
            coset.push_back(x);
        }
        bool ok = true;
        for (Idx h : H.gens) {
            if (!hm[G->conj(h, rep)]) {
                ok = false;
                break;
            }
        }
        if (ok) result.insert(result.end(), coset.begin(), coset.end());
    }
    std::sort(result.begin(), result.end());
    SubgroupHandle N;
    N.parent = G;
    N.members = std::move(result);
    N.gens = reduce_generators(G, N.members);
    return N;
}

SubgroupHandle core(GroupRef G, const SubgroupHandle& H) {
    const auto& classes = G->conjugacy_classes();
    std::vector<uint8_t> hm = member_mask(H);
    std::vector<Idx> result;
    for (const auto& cls : classes) {
        bool inside = true;
        for (Idx x : cls) {
            if (!hm[x]) {
                inside = false;
                break;
            }
        }
        if (inside) result.insert(result.end(), cls.begin(), cls.end());
    }
    std::sort(result.begin(), result.end());
    SubgroupHandle C;
    C.parent = G;
    C.members = std::move(result);
    C.gens = reduce_generators(G, C.members);
    return C;
}

SubgroupHandle intersect(const SubgroupHandle& A, const SubgroupHandle& B) {
    SubgroupHandle R;
    R.parent = A.parent;
    std::set_intersection(A.members.begin(), A.members.end(), B.members.begin(), B.members.end(),
                          std::back_inserter(R.members));
    R.gens = reduce_generators(R.parent, R.members);
    return R;
}

SubgroupHandle join(GroupRef G, const SubgroupHandle& A, const SubgroupHandle& B) {
    std::vector<Idx> gens = A.gens;
    gens.insert(gens.end(), B.gens.begin(), B.gens.end());
    return subgroup_closure(std::move(G), gens);
}

QuotientData quotient(GroupRef G, const SubgroupHandle& N) {
    if (!is_normal(G, N)) throw NotNormal("quotient requires a normal subgroup");
    QuotientData qd;
    qd.parent = G;
    qd.projection.assign(G->order(), -1);
    for (Idx x = 0; x < G->order(); ++x) {
        if (qd.projection[x] >= 0) continue;
        Idx id = static_cast<Idx>(qd.section.size());
        qd.section.push_back(x);
        for (Idx m : N.members) qd.projection[G->mult(x, m)] = id;
    }
    qd.quotient = Group::quotient_group(G, qd.projection, qd.section, G->generators());
    return qd;
}

GroupRef subgroup_as_group(const SubgroupHandle& H) {
    return Group::subview(H.parent, H.members, H.gens);
}

SubgroupHandle localize(const SubgroupHandle& H, const SubgroupHandle& A, GroupRef S) {
    SubgroupHandle R;
    R.parent = std::move(S);
    R.members.reserve(H.members.size());
    auto pos = [&](Idx x) {
        auto it = std::lower_bound(A.members.begin(), A.members.end(), x);
        if (it == A.members.end() || *it != x) throw Error("localize: element outside subgroup");
        return static_cast<Idx>(it - A.members.begin());
    };
    for (Idx m : H.members) R.members.push_back(pos(m));
    std::sort(R.members.begin(), R.members.end());
    for (Idx g : H.gens) R.gens.push_back(pos(g));
    return R;
}

SubgroupHandle project_subgroup(const SubgroupHandle& H, const QuotientData& qd) {
    std::vector<Idx> mem;
    mem.reserve(H.members.size());
    for (Idx m : H.members) mem.push_back(qd.projection[m]);
    std::sort(mem.begin(), mem.end());
    mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
    SubgroupHandle R;
    R.parent = qd.quotient;
    R.members = std::move(mem);
    for (Idx g : H.gens) {
        Idx q = qd.projection[g];
        if (q != 0 && !std::count(R.gens.begin(), R.gens.end(), q)) R.gens.push_back(q);
    }
    return R;
}

namespace {

Predicates predicates_impl(const Group& G, const std::vector<Idx>& gens,
                           const std::vector<Idx>& members, GroupRef self) {
    Predicates P;
    P.is_abelian = true;
    for (size_t i = 0; i < gens.size() && P.is_abelian; ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            if (G.mult(gens[i], gens[j]) != G.mult(gens[j], gens[i])) {
                P.is_abelian = false;
                break;
            }
        }
    int64_t n = static_cast<int64_t>(members.size());
    P.exponent = 1;
    P.is_cyclic = false;
    for (Idx m : members) {
        int64_t o;
        if (self) {
            o = self->element_order(m);
        } else {
            o = G.element_order(m);
        }
        P.exponent = lcm64(P.exponent, o);
        if (o == n) P.is_cyclic = true;
    }
    return P;
}

}  // namespace

Predicates predicates(GroupRef G) {
    std::vector<Idx> all(G->order());
    std::iota(all.begin(), all.end(), 0);
    return predicates_impl(*G, G->generators(), all, nullptr);
}

Predicates predicates(const SubgroupHandle& H) {
    // orders computed in the parent; identical within the subgroup
    Predicates P;
    const Group& G = *H.parent;
    P.is_abelian = true;
    for (size_t i = 0; i < H.gens.size() && P.is_abelian; ++i)
        for (size_t j = i + 1; j < H.gens.size(); ++j)
            if (G.mult(H.gens[i], H.gens[j]) != G.mult(H.gens[j], H.gens[i])) {
                P.is_abelian = false;
                break;
            }
    P.exponent = 1;
    for (Idx m : H.members) {
        int64_t o = G.element_order(m);
        P.exponent = lcm64(P.exponent, o);
        if (o == H.order()) P.is_cyclic = true;
    }
    return P;
}

bool quotient_abelian(GroupRef G, const SubgroupHandle& H, const SubgroupHandle& N) {
    for (size_t i = 0; i < H.gens.size(); ++i)
        for (size_t j = i + 1; j < H.gens.size(); ++j) {
            Idx x = H.gens[i], y = H.gens[j];
            Idx comm = G->mult(G->mult(G->inv(x), G->inv(y)), G->mult(x, y));
            if (!N.contains(comm)) return false;
        }
    return true;
}

SubgroupHandle derived_subgroup(GroupRef G, const SubgroupHandle& H) {
    // normal closure in H of the generator commutators
    std::vector<Idx> comms;
    for (size_t i = 0; i < H.gens.size(); ++i)
        for (size_t j = i + 1; j < H.gens.size(); ++j) {
            Idx x = H.gens[i], y = H.gens[j];
            comms.push_back(G->mult(G->mult(G->inv(x), G->inv(y)), G->mult(x, y)));
        }
    SubgroupHandle D = subgroup_closure_reduced(G, comms);
    for (;;) {
        std::vector<Idx> extra;
        for (Idx d : D.gens)
            for (Idx h : H.gens) {
                Idx c = G->conj(d, h);
                if (!D.contains(c)) extra.push_back(c);
            }
        if (extra.empty()) break;
        std::vector<Idx> gens = D.gens;
        gens.insert(gens.end(), extra.begin(), extra.end());
        D = subgroup_closure(G, gens);
        D.gens = reduce_generators(G, D.members);
    }
    return D;
}

std::vector<uint8_t> member_mask(const SubgroupHandle& H) {
    std::vector<uint8_t> m(H.parent->order(), 0);
    for (Idx x : H.members) m[x] = 1;
    return m;
}

}  // namespace fqg
