#include "fqg/idempotents.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "fqg/abelian.hpp"
#include "fqg/util.hpp"

namespace fqg {

bool AlgebraElement::is_zero() const {
    for (FF c : coeffs)
        if (c) return false;
    return true;
}

uint64_t AlgebraElement::hash() const { return hash_range(coeffs); }

AlgebraElement algebra_zero(GroupRef G, FieldRef F) {
    size_t n = static_cast<size_t>(G->order());
    return {std::move(G), std::move(F), std::vector<FF>(n, 0)};
}

AlgebraElement algebra_one(GroupRef G, FieldRef F) {
    AlgebraElement x = algebra_zero(std::move(G), std::move(F));
    x.coeffs[0] = 1;
    return x;
}

AlgebraElement algebra_add(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r = a;
    const FiniteField& F = *a.field;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = F.add(r.coeffs[i], b.coeffs[i]);
    return r;
}

AlgebraElement algebra_sub(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r = a;
    const FiniteField& F = *a.field;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = F.sub(r.coeffs[i], b.coeffs[i]);
    return r;
}

AlgebraElement algebra_mult(const AlgebraElement& a, const AlgebraElement& b) {
    const Group& G = *a.group;
    const FiniteField& F = *a.field;
    int64_t n = G.order();
    AlgebraElement r = algebra_zero(a.group, a.field);
    const std::vector<Idx>* tab = G.cayley_table();
    if (tab) {
        const Idx* t = tab->data();
        for (int64_t i = 0; i < n; ++i) {
            FF ai = a.coeffs[i];
            if (!ai) continue;
            const Idx* row = t + i * n;
            for (int64_t j = 0; j < n; ++j) {
                FF bj = b.coeffs[j];
                if (!bj) continue;
                FF& slot = r.coeffs[row[j]];
                slot = F.add(slot, F.mul(ai, bj));
            }
        }
    } else {
        for (int64_t i = 0; i < n; ++i) {
            FF ai = a.coeffs[i];
            if (!ai) continue;
            for (int64_t j = 0; j < n; ++j) {
                FF bj = b.coeffs[j];
                if (!bj) continue;
                Idx k = G.mult(static_cast<Idx>(i), static_cast<Idx>(j));
                r.coeffs[k] = F.add(r.coeffs[k], F.mul(ai, bj));
            }
        }
    }
    return r;
}

AlgebraElement conjugate_element(const AlgebraElement& x, Idx g) {
    const Group& G = *x.group;
    AlgebraElement r = algebra_zero(x.group, x.field);
    for (int64_t i = 0; i < G.order(); ++i)
        if (x.coeffs[i]) r.coeffs[G.conj(static_cast<Idx>(i), g)] = x.coeffs[i];
    return r;
}

bool is_class_function(const AlgebraElement& x) {
    const auto& classes = x.group->conjugacy_classes();
    for (const auto& cls : classes) {
        FF v = x.coeffs[cls[0]];
        for (Idx m : cls)
            if (x.coeffs[m] != v) return false;
    }
    return true;
}

AlgebraElement hat(const SubgroupHandle& K, FieldRef F) {
    if (K.order() % F->p() == 0) throw NotCoprime("|K| is divisible by the field characteristic");
    AlgebraElement r = algebra_zero(K.parent, F);
    FF inv_k = F->inv(F->from_int(K.order()));
    for (Idx m : K.members) r.coeffs[m] = inv_k;
    return r;
}

AlgebraElement epsilon(GroupRef G, const SubgroupHandle& K, const SubgroupHandle& H, FieldRef F) {
    if (K.members == H.members) return hat(K, F);
    // minimal normal subgroups of K/H, pulled back
    GroupRef S = K.order() == G->order() ? G : subgroup_as_group(K);
    SubgroupHandle Hloc = K.order() == G->order() ? H : localize(H, K, S);
    QuotientData qd;
    try {
        qd = quotient(S, Hloc);
    } catch (const NotNormal&) {
        throw NotNormalInK("epsilon requires H normal in K");
    }
    NormalLattice L = normal_subgroups(qd.quotient);
    std::vector<SubgroupHandle> minimal;
    for (const auto& M : L.normals) {
        if (M.order() == 1) continue;
        bool is_min = true;
        for (const auto& M2 : L.normals) {
            if (M2.order() == 1 || M2.order() >= M.order()) continue;
            if (std::includes(M.members.begin(), M.members.end(), M2.members.begin(),
                              M2.members.end())) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(M);
    }
    // pull back to subgroups of G
    std::vector<SubgroupHandle> pulled;
    for (const auto& M : minimal) {
        SubgroupHandle P;
        P.parent = G;
        std::vector<uint8_t> in_m(qd.quotient->order(), 0);
        for (Idx x : M.members) in_m[x] = 1;
        for (int64_t s = 0; s < S->order(); ++s)
            if (in_m[qd.projection[s]])
                P.members.push_back(K.order() == G->order() ? static_cast<Idx>(s)
                                                            : K.members[s]);
        std::sort(P.members.begin(), P.members.end());
        P.gens = reduce_generators(G, P.members);
        pulled.push_back(std::move(P));
    }
    std::sort(pulled.begin(), pulled.end());

    AlgebraElement prod = algebra_one(G, F);
    AlgebraElement hh = hat(H, F);
    bool first = true;
    for (const auto& Lsub : pulled) {
        AlgebraElement factor = algebra_sub(hh, hat(Lsub, F));
        prod = first ? factor : algebra_mult(prod, factor);
        first = false;
    }
    return prod;
}

AlgebraElement sum_distinct_conjugates(GroupRef G, const AlgebraElement& x) {
    std::vector<AlgebraElement> orbit{x};
    std::unordered_map<uint64_t, std::vector<size_t>> seen;
    seen[x.hash()].push_back(0);
    auto known = [&](const AlgebraElement& y) {
        auto it = seen.find(y.hash());
        if (it == seen.end()) return false;
        for (size_t i : it->second)
            if (orbit[i] == y) return true;
        return false;
    };
    for (size_t head = 0; head < orbit.size(); ++head) {
        for (Idx g : G->generators()) {
            AlgebraElement y = conjugate_element(orbit[head], g);
            if (!known(y)) {
                seen[y.hash()].push_back(orbit.size());
                orbit.push_back(std::move(y));
            }
        }
    }
    AlgebraElement sum = algebra_zero(G, x.field);
    for (const auto& y : orbit) sum = algebra_add(sum, y);
    return sum;
}

namespace {

const CyclotomicData& cached_cyclotomic(const FieldRef& F, int64_t n) {
    static std::map<std::pair<int64_t, int64_t>, CyclotomicData> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(F->q(), n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, cyclotomic_data(F, n)).first;
    return it->second;
}

}  // namespace

AlgebraElement epsilon_C(GroupRef G, const ShodaPair& pair, const CyclotomicCoset& C, FieldRef F) {
    if (G->order() % F->p() == 0) throw NotCoprime("gcd(q, |G|) must be 1");
    const CyclotomicData& cd = cached_cyclotomic(F, pair.n);
    AlgebraElement r = algebra_zero(G, F);
    FF inv_k = F->inv(F->from_int(pair.A.order()));
    int64_t c = C.label;
    for (size_t j = 0; j < pair.A.members.size(); ++j) {
        Idx g = pair.A.members[j];
        FF tr = cd.trace_of_power[pair.n == 1 ? 0 : (c * pair.dlog[j]) % pair.n];
        if (tr) r.coeffs[G->inv(g)] = F->add(r.coeffs[G->inv(g)], F->mul(inv_k, tr));
    }
    return r;
}

AlgebraElement e_pair(GroupRef G, const SubgroupHandle& K, const SubgroupHandle& H, FieldRef F) {
    return sum_distinct_conjugates(G, epsilon(G, K, H, F));
}

AlgebraElement e_C(GroupRef G, const ShodaPair& pair, const CyclotomicCoset& C, FieldRef F) {
    return sum_distinct_conjugates(G, epsilon_C(G, pair, C, F));
}

CompletenessReport completeness_check(GroupRef G, FieldRef F, const std::vector<PairOrbits>& pairs,
                                      int thoroughness, int threads) {
    if (G->order() % F->p() == 0) throw NotCoprime("gcd(q, |G|) must be 1");
    CompletenessReport rep;
    rep.thorough = thoroughness == 1 ||
                   (thoroughness < 0 && G->cayley_table() != nullptr);

    // slots: one idempotent per (pair, orbit representative)
    struct Slot {
        int pair_index;
        int orbit_rep_coset;
    };
    std::vector<Slot> slots;
    for (size_t pi = 0; pi < pairs.size(); ++pi) {
        for (int rc : pairs[pi].orbits.orbit_reps) slots.push_back({static_cast<int>(pi), rc});
        // dimension bookkeeping
        const auto& od = pairs[pi].orbits;
        int64_t n_mat = G->order() / pairs[pi].pair.A.order();
        int64_t e_over_a = od.stabilizer.order() / pairs[pi].pair.A.order();
        if (e_over_a == 0 || od.o % e_over_a != 0)
            throw DivisibilityViolation("[E:A] does not divide o");
        int64_t f = od.o / e_over_a;
        rep.dimension_covered += static_cast<int64_t>(od.orbit_reps.size()) * n_mat * n_mat * f;
    }

    rep.idempotents.resize(slots.size());
    parallel_for(static_cast<int64_t>(slots.size()), threads, [&](int64_t s) {
        const auto& slot = slots[s];
        const auto& po = pairs[slot.pair_index];
        const CyclotomicCoset& C = po.orbits.cosets[slot.orbit_rep_coset];
        rep.idempotents[s] = {slot.pair_index, C.label, e_C(G, po.pair, C, F)};
    });

    // distinctness
    rep.distinct = true;
    {
        std::unordered_map<uint64_t, std::vector<size_t>> seen;
        for (size_t i = 0; i < rep.idempotents.size(); ++i) {
            auto& bucket = seen[rep.idempotents[i].value.hash()];
            for (size_t j : bucket)
                if (rep.idempotents[j].value == rep.idempotents[i].value) rep.distinct = false;
            bucket.push_back(i);
        }
    }

    // centrality as the class-function test
    rep.all_central = true;
    for (const auto& r : rep.idempotents)
        if (!is_class_function(r.value)) rep.all_central = false;

    AlgebraElement sum = algebra_zero(G, F);
    for (const auto& r : rep.idempotents) sum = algebra_add(sum, r.value);
    rep.sum_is_one = (sum == algebra_one(G, F));

    if (rep.thorough) {
        size_t m = rep.idempotents.size();
        std::vector<uint8_t> idem_ok(m, 0);
        parallel_for(static_cast<int64_t>(m), threads, [&](int64_t i) {
            const auto& e = rep.idempotents[i].value;
            idem_ok[i] = algebra_mult(e, e) == e;
        });
        rep.all_idempotent = std::all_of(idem_ok.begin(), idem_ok.end(), [](uint8_t b) { return b; });

        std::vector<uint8_t> orth_ok(m, 1);
        parallel_for(static_cast<int64_t>(m), threads, [&](int64_t i) {
            for (size_t j = i + 1; j < m; ++j) {
                if (!algebra_mult(rep.idempotents[i].value, rep.idempotents[j].value).is_zero()) {
                    orth_ok[i] = 0;
                    return;
                }
            }
        });
        rep.all_orthogonal = std::all_of(orth_ok.begin(), orth_ok.end(), [](uint8_t b) { return b; });
    }

    rep.normally_monomial = rep.sum_is_one;
    // with distinct idempotents, sum = 1 and full dimension are equivalent
    if (rep.distinct && rep.sum_is_one != (rep.dimension_covered == G->order()))
        throw Error("completeness flags disagree (internal)");
    return rep;
}

}  // namespace fqg
