#pragma once

#include "fqg/shoda.hpp"

namespace fqg {

struct CyclotomicCoset {
    int64_t n = 1;                 // modulus (order of the cyclic quotient)
    std::vector<int64_t> members;  // units mod n closed under multiplication by q
    int64_t label = 0;             // least member
};

// partition of the units mod n into multiplication-by-q cosets; count phi(n)/o_n(q).
// For n = 1 a single coset {0} stands for the trivial character.
std::vector<CyclotomicCoset> cyclotomic_cosets(int64_t n, int64_t q);

// m with g x g^-1 = x^m in A/D (x the fixed generator); unit mod n
int64_t conj_exponent(GroupRef G, const ShodaPair& pair, Idx g);

struct OrbitData {
    int64_t n = 1, o = 1;                 // |A/D| and o_n(q)
    std::vector<CyclotomicCoset> cosets;
    std::vector<std::vector<int>> orbits;  // partition of coset indices
    std::vector<int> orbit_reps;           // coset index with least label per orbit
    SubgroupHandle stabilizer;             // E_G(A/D)
};

// orbits of the cosets under the N_G(D)-action and the common stabilizer;
// verifies stabilizer equality per orbit and the counting identity
// |R| = phi(n) |E| / (|N_G(D)| o_n(q)); throws StabilizerMismatch otherwise
OrbitData orbits_and_stabilizer(GroupRef G, const ShodaPair& pair, int64_t q);

}  // namespace fqg
