#pragma once

#include <map>
#include <optional>

#include "fqg/gf.hpp"
#include "fqg/lattice.hpp"

namespace fqg {

/// A pair (A, D) with D normal in A and A/D cyclic, plus the cached data every
/// downstream consumer needs: core, normalizer, and the discrete log of the
/// cyclic quotient A/D.
struct ShodaPair {
    SubgroupHandle A;
    SubgroupHandle D;
    SubgroupHandle N;             // core_G(D)
    SubgroupHandle normalizer_D;  // N_G(D)
    int64_t n = 1;                // |A/D|
    Idx gen_rep = 0;              // least element of A whose image generates A/D
    std::vector<int64_t> dlog;    // position in A.members -> exponent of image, mod n

    int64_t dlog_of(Idx parent_element) const;
    bool operator<(const ShodaPair& o) const {
        if (!(A.members == o.A.members)) return A.members < o.A.members;
        return D.members < o.D.members;
    }
};

ShodaPair make_shoda_pair(GroupRef G, SubgroupHandle A, SubgroupHandle D,
                          std::optional<SubgroupHandle> normalizer_hint = std::nullopt,
                          std::optional<SubgroupHandle> core_hint = std::nullopt);

// D <= A_N with core_G(D) = N, A_N/D cyclic and maximal abelian in N_G(D)/D
std::vector<SubgroupHandle> candidate_set_DN(GroupRef G, const SubgroupHandle& N,
                                             const SubgroupHandle& A_N);

// one representative per G-conjugacy class; representative = least member list
std::vector<SubgroupHandle> transversal_TN(GroupRef G, const std::vector<SubgroupHandle>& DN);

struct ShodaOptions {
    // override the A_N choice for specific N (key: N's member list)
    std::map<std::vector<Idx>, SubgroupHandle> A_overrides;
    const NormalLattice* lattice = nullptr;  // reuse if already computed
    int threads = 1;
};

// the complete irredundant set S(G), canonically ordered
std::vector<ShodaPair> strong_shoda_pairs(GroupRef G, const ShodaOptions& opts = {});

// definition check: (i) H normal in K normal in N_G(H); (ii) K/H cyclic and
// maximal abelian in N_G(H)/H; (iii) distinct G-conjugates of eps(K,H) over F_q
// mutually orthogonal
bool verify_ssp(GroupRef G, const SubgroupHandle& K, const SubgroupHandle& H, int64_t q);

}  // namespace fqg
