#include "fqg/abelian.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "fqg/util.hpp"

namespace fqg {

namespace {

// recursive elementary-divisor basis; returns indices local to S, max order first
std::vector<Idx> basis_rec(GroupRef S) {
    if (S->order() == 1) return {};
    Idx g = 0;
    int64_t best = 1;
    for (Idx a = 0; a < S->order(); ++a) {
        int64_t o = S->element_order(a);
        if (o > best) {
            best = o;
            g = a;
        }
    }
    SubgroupHandle C = subgroup_closure(S, {g});
    QuotientData qd = quotient(S, C);
    std::vector<Idx> sub = basis_rec(qd.quotient);

    // discrete log table inside <g>
    std::unordered_map<Idx, int64_t> dlog;
    Idx x = 0;
    for (int64_t t = 0; t < best; ++t) {
        dlog[x] = t;
        x = S->mult(x, g);
    }

    std::vector<Idx> out{g};
    for (Idx hq : sub) {
        int64_t m = qd.quotient->element_order(hq);
        Idx h = qd.section[hq];
        int64_t t = dlog.at(S->pow(h, m));
        // adjust so the lift has order exactly m: h * g^(-t/m)
        Idx corr = S->pow(S->inv(g), t / m);
        out.push_back(S->mult(h, corr));
    }
    return out;
}

}  // namespace

AbelianBasis abelian_basis(const SubgroupHandle& A) {
    if (!predicates(A).is_abelian) throw NotAbelian("abelian_basis requires an abelian subgroup");
    AbelianBasis B;
    B.group = A;
    GroupRef S = subgroup_as_group(A);
    std::vector<Idx> local = basis_rec(S);  // descending orders
    std::reverse(local.begin(), local.end());
    for (Idx l : local) {
        B.basis.push_back(A.members[l]);
        B.divisors.push_back(S->element_order(l));
    }
    for (size_t i = 0; i + 1 < B.divisors.size(); ++i)
        if (B.divisors[i + 1] % B.divisors[i] != 0)
            throw Error("elementary divisor chain broken (internal)");

    // exponent tuples, with a bijectivity check
    size_t k = B.basis.size();
    const Group& G = *A.parent;
    std::unordered_map<Idx, size_t> member_pos;
    for (size_t i = 0; i < A.members.size(); ++i) member_pos[A.members[i]] = i;
    B.exps.assign(A.members.size(), {});
    std::vector<uint8_t> seen(A.members.size(), 0);
    std::vector<int64_t> tuple(k, 0);
    std::vector<Idx> suffix(k + 1, 0);  // suffix[i] = prod_{j>=i} basis_j^{e_j}
    int64_t count = 0;
    for (;;) {
        Idx cur = suffix[0];
        auto it = member_pos.find(cur);
        if (it == member_pos.end() || seen[it->second])
            throw Error("abelian basis is not a basis (internal)");
        seen[it->second] = 1;
        B.exps[it->second] = tuple;
        ++count;
        size_t i = 0;
        while (i < k && ++tuple[i] == B.divisors[i]) {
            tuple[i] = 0;
            ++i;
        }
        if (i == k) break;
        suffix[i] = G.mult(G.pow(B.basis[i], tuple[i]), suffix[i + 1]);
        for (size_t j = i; j-- > 0;) suffix[j] = suffix[i];
    }
    if (count != A.order()) throw Error("abelian basis does not span (internal)");
    return B;
}

int64_t character_exponent(const AbelianBasis& B, const LinearCharacter& chi, size_t member_pos) {
    int64_t L = B.exponent();
    const auto& e = B.exps[member_pos];
    int64_t acc = 0;
    for (size_t i = 0; i < e.size(); ++i)
        acc = (acc + chi.exponents[i] % B.divisors[i] * ((L / B.divisors[i]) * e[i] % L)) % L;
    return acc;
}

std::vector<LinearCharacter> linear_characters(const AbelianBasis& B) {
    std::vector<LinearCharacter> out;
    size_t k = B.basis.size();
    LinearCharacter chi;
    chi.exponents.assign(k, 0);
    for (;;) {
        chi.order = 1;
        for (size_t i = 0; i < k; ++i)
            chi.order = lcm64(chi.order, B.divisors[i] / std::gcd(chi.exponents[i], B.divisors[i]));
        out.push_back(chi);
        size_t i = 0;
        while (i < k) {
            if (++chi.exponents[i] < B.divisors[i]) break;
            chi.exponents[i] = 0;
            ++i;
        }
        if (i == k) break;
    }
    return out;
}

SubgroupHandle character_kernel(const AbelianBasis& B, const LinearCharacter& chi) {
    SubgroupHandle K;
    K.parent = B.group.parent;
    for (size_t j = 0; j < B.group.members.size(); ++j)
        if (character_exponent(B, chi, j) == 0) K.members.push_back(B.group.members[j]);
    std::sort(K.members.begin(), K.members.end());
    K.gens = reduce_generators(K.parent, K.members);
    return K;
}

std::vector<SubgroupHandle> cyclic_quotient_subgroups(const AbelianBasis& B) {
    std::vector<SubgroupHandle> out;
    std::unordered_set<uint64_t> seen;
    for (const auto& chi : linear_characters(B)) {
        // kernel member scan; dedup by member-list hash
        std::vector<Idx> mem;
        for (size_t j = 0; j < B.group.members.size(); ++j)
            if (character_exponent(B, chi, j) == 0) mem.push_back(B.group.members[j]);
        std::sort(mem.begin(), mem.end());
        uint64_t h = hash_range(mem);
        if (!seen.insert(h).second) continue;
        SubgroupHandle K;
        K.parent = B.group.parent;
        K.members = std::move(mem);
        K.gens = reduce_generators(K.parent, K.members);
        out.push_back(std::move(K));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fqg
