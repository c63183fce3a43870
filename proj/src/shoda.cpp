#include "fqg/shoda.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "fqg/abelian.hpp"
#include "fqg/idempotents.hpp"
#include "fqg/util.hpp"

namespace fqg {

int64_t ShodaPair::dlog_of(Idx parent_element) const {
    auto it = std::lower_bound(A.members.begin(), A.members.end(), parent_element);
    if (it == A.members.end() || *it != parent_element)
        throw Error("dlog: element outside A (internal)");
    return dlog[it - A.members.begin()];
}

ShodaPair make_shoda_pair(GroupRef G, SubgroupHandle A, SubgroupHandle D,
                          std::optional<SubgroupHandle> normalizer_hint,
                          std::optional<SubgroupHandle> core_hint) {
    ShodaPair P;
    P.A = std::move(A);
    P.D = std::move(D);
    P.normalizer_D = normalizer_hint ? std::move(*normalizer_hint) : normalizer(G, P.D);
    P.N = core_hint ? std::move(*core_hint) : core(G, P.D);

    bool whole = P.A.order() == G->order();
    GroupRef S = whole ? G : subgroup_as_group(P.A);
    SubgroupHandle Dloc = whole ? P.D : localize(P.D, P.A, S);
    QuotientData qd = quotient(S, Dloc);
    P.n = qd.quotient->order();

    // least element of A generating the quotient
    Idx gen_img = -1;
    for (size_t j = 0; j < P.A.members.size(); ++j) {
        Idx img = qd.projection[whole ? P.A.members[j] : static_cast<Idx>(j)];
        if (qd.quotient->element_order(img) == P.n) {
            P.gen_rep = P.A.members[j];
            gen_img = img;
            break;
        }
    }
    if (gen_img < 0) throw Error("A/D is not cyclic");

    std::vector<int64_t> dlog_q(P.n, -1);
    Idx x = 0;
    for (int64_t t = 0; t < P.n; ++t) {
        dlog_q[x] = t;
        x = qd.quotient->mult(x, gen_img);
    }
    P.dlog.resize(P.A.members.size());
    for (size_t j = 0; j < P.A.members.size(); ++j)
        P.dlog[j] = dlog_q[qd.projection[whole ? P.A.members[j] : static_cast<Idx>(j)]];
    return P;
}

namespace {

struct Candidate {
    SubgroupHandle D;
    SubgroupHandle normalizer;
    SubgroupHandle core;
};

// all D <= A with A/D cyclic: preimages of the cyclic-quotient subgroups of A/A'
std::vector<SubgroupHandle> cyclic_quotient_subgroups_of(GroupRef G, const SubgroupHandle& A) {
    bool whole = A.order() == G->order();
    GroupRef S = whole ? G : subgroup_as_group(A);
    SubgroupHandle derived = derived_subgroup(G, A);
    SubgroupHandle Dloc = whole ? derived : localize(derived, A, S);
    QuotientData qd = quotient(S, Dloc);
    AbelianBasis B = abelian_basis(whole_group(qd.quotient));
    std::vector<SubgroupHandle> out;
    for (const auto& ker : cyclic_quotient_subgroups(B)) {
        std::vector<uint8_t> in_k(qd.quotient->order(), 0);
        for (Idx x : ker.members) in_k[x] = 1;
        SubgroupHandle D;
        D.parent = G;
        for (int64_t s = 0; s < S->order(); ++s)
            if (in_k[qd.projection[s]])
                D.members.push_back(whole ? static_cast<Idx>(s) : A.members[s]);
        std::sort(D.members.begin(), D.members.end());
        D.gens = reduce_generators(G, D.members);
        out.push_back(std::move(D));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// A/D must be maximal abelian in N_G(D)/D: its image equals its own centralizer
bool maximal_abelian_in_normalizer(GroupRef G, const SubgroupHandle& A, const SubgroupHandle& D,
                                   const SubgroupHandle& Nr) {
    bool whole = Nr.order() == G->order();
    GroupRef S = whole ? G : subgroup_as_group(Nr);
    SubgroupHandle Dloc = whole ? D : localize(D, Nr, S);
    QuotientData qd = quotient(S, Dloc);

    auto local_of = [&](Idx parent_elt) -> Idx {
        if (whole) return parent_elt;
        auto it = std::lower_bound(Nr.members.begin(), Nr.members.end(), parent_elt);
        return static_cast<Idx>(it - Nr.members.begin());
    };
    std::vector<Idx> img;
    img.reserve(A.members.size());
    for (Idx a : A.members) img.push_back(qd.projection[local_of(a)]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());

    std::vector<Idx> img_gens;
    for (Idx a : A.gens) img_gens.push_back(qd.projection[local_of(a)]);

    std::vector<Idx> centralizer;
    const Group& Q = *qd.quotient;
    for (Idx x = 0; x < Q.order(); ++x) {
        bool commutes = true;
        for (Idx gi : img_gens) {
            if (Q.mult(x, gi) != Q.mult(gi, x)) {
                commutes = false;
                break;
            }
        }
        if (commutes) centralizer.push_back(x);
    }
    return centralizer == img;
}

std::vector<Candidate> candidates_for(GroupRef G, const SubgroupHandle& A,
                                      const std::vector<SubgroupHandle>& cyc_subs, int threads) {
    std::vector<Candidate> out(cyc_subs.size());
    std::vector<uint8_t> keep(cyc_subs.size(), 0);
    parallel_for(static_cast<int64_t>(cyc_subs.size()), threads, [&](int64_t i) {
        const SubgroupHandle& D = cyc_subs[i];
        SubgroupHandle Nr = is_normal(G, D) ? whole_group(G) : normalizer(G, D);
        if (!maximal_abelian_in_normalizer(G, A, D, Nr)) return;
        out[i] = {D, std::move(Nr), core(G, D)};
        keep[i] = 1;
    });
    std::vector<Candidate> res;
    for (size_t i = 0; i < cyc_subs.size(); ++i)
        if (keep[i]) res.push_back(std::move(out[i]));
    return res;
}

}  // namespace

std::vector<SubgroupHandle> candidate_set_DN(GroupRef G, const SubgroupHandle& N,
                                             const SubgroupHandle& A_N) {
    std::vector<SubgroupHandle> out;
    for (auto& c : candidates_for(G, A_N, cyclic_quotient_subgroups_of(G, A_N), 1))
        if (c.core.members == N.members) out.push_back(std::move(c.D));
    return out;
}

std::vector<SubgroupHandle> transversal_TN(GroupRef G, const std::vector<SubgroupHandle>& DN) {
    std::unordered_set<uint64_t> seen;
    std::vector<SubgroupHandle> reps;
    for (const auto& D : DN) {
        if (seen.count(D.hash())) continue;
        // orbit under conjugation by the generators
        std::vector<SubgroupHandle> orbit{D};
        seen.insert(D.hash());
        const SubgroupHandle* least = &orbit[0];
        for (size_t head = 0; head < orbit.size(); ++head) {
            SubgroupHandle cur = orbit[head];
            for (Idx g : G->generators()) {
                SubgroupHandle c = conjugate_subgroup(cur, g);
                if (seen.insert(c.hash()).second) orbit.push_back(std::move(c));
            }
        }
        for (const auto& o : orbit)
            if (o.members < least->members) least = &o;
        reps.push_back(*least);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

std::vector<ShodaPair> strong_shoda_pairs(GroupRef G, const ShodaOptions& opts) {
    NormalLattice local_lattice;
    const NormalLattice* L = opts.lattice;
    if (!L) {
        local_lattice = normal_subgroups(G);
        L = &local_lattice;
    }

    std::vector<ShodaPair> pairs;
    SubgroupHandle whole = whole_group(G);

    // group the non-abelian-quotient N's by their chosen A_N
    std::map<std::vector<Idx>, std::pair<SubgroupHandle, std::vector<const SubgroupHandle*>>>
        buckets;

    for (const auto& N : L->normals) {
        if (quotient_abelian(G, whole, N)) {
            QuotientData qd = quotient(G, N);
            if (predicates(qd.quotient).is_cyclic)
                pairs.push_back(make_shoda_pair(G, whole, N, whole, N));
            continue;
        }
        SubgroupHandle A;
        auto ov = opts.A_overrides.find(N.members);
        if (ov != opts.A_overrides.end()) {
            A = ov->second;
        } else {
            A = maximal_abelian_normal_over(G, N, *L);
        }
        auto& bucket = buckets[A.members];
        bucket.first = A;
        bucket.second.push_back(&N);
    }

    for (auto& [amem, bucket] : buckets) {
        const SubgroupHandle& A = bucket.first;
        auto cands = candidates_for(G, A, cyclic_quotient_subgroups_of(G, A), opts.threads);
        for (const SubgroupHandle* N : bucket.second) {
            std::vector<SubgroupHandle> DN;
            std::unordered_map<uint64_t, const Candidate*> by_hash;
            for (const auto& c : cands) {
                if (c.core.members == N->members) {
                    DN.push_back(c.D);
                    by_hash[c.D.hash()] = &c;
                }
            }
            for (const auto& D : transversal_TN(G, DN)) {
                auto it = by_hash.find(D.hash());
                if (it != by_hash.end()) {
                    pairs.push_back(make_shoda_pair(G, A, D, it->second->normalizer, *N));
                } else {
                    pairs.push_back(make_shoda_pair(G, A, D, std::nullopt, *N));
                }
            }
        }
    }

    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

bool verify_ssp(GroupRef G, const SubgroupHandle& K, const SubgroupHandle& H, int64_t q) {
    if (!std::includes(K.members.begin(), K.members.end(), H.members.begin(), H.members.end()))
        return false;
    // (i) H normal in K
    for (Idx h : H.gens)
        for (Idx k : K.gens)
            if (!H.contains(G->conj(h, k))) return false;
    SubgroupHandle Nh = normalizer(G, H);
    if (!std::includes(Nh.members.begin(), Nh.members.end(), K.members.begin(), K.members.end()))
        return false;
    for (Idx k : K.gens)
        for (Idx g : Nh.gens)
            if (!K.contains(G->conj(k, g))) return false;

    // (ii) K/H cyclic and maximal abelian in N_G(H)/H
    {
        bool whole = K.order() == G->order();
        GroupRef S = whole ? G : subgroup_as_group(K);
        QuotientData qd = quotient(S, whole ? H : localize(H, K, S));
        if (!predicates(qd.quotient).is_cyclic) return false;
    }
    if (!maximal_abelian_in_normalizer(G, K, H, Nh)) return false;

    // (iii) distinct G-conjugates of eps(K,H) mutually orthogonal over F_q
    if (G->order() % get_field(q)->p() == 0)
        throw NotCoprime("verify_ssp needs gcd(q, |G|) = 1");
    FieldRef F = get_field(q);
    AlgebraElement eps = epsilon(G, K, H, F);
    std::vector<AlgebraElement> orbit{eps};
    std::unordered_map<uint64_t, std::vector<size_t>> seen;
    seen[eps.hash()].push_back(0);
    for (size_t head = 0; head < orbit.size(); ++head) {
        for (Idx g : G->generators()) {
            AlgebraElement y = conjugate_element(orbit[head], g);
            bool found = false;
            for (size_t i : seen[y.hash()])
                if (orbit[i] == y) {
                    found = true;
                    break;
                }
            if (!found) {
                seen[y.hash()].push_back(orbit.size());
                orbit.push_back(std::move(y));
            }
        }
    }
    for (size_t i = 0; i < orbit.size(); ++i)
        for (size_t j = i + 1; j < orbit.size(); ++j)
            if (!algebra_mult(orbit[i], orbit[j]).is_zero()) return false;
    return true;
}

}  // namespace fqg
