#include <numeric>

#include "doctest.h"
#include "fqg/cyclo.hpp"
#include "fqg/util.hpp"
#include "support.hpp"

using namespace fqg;
using namespace fqg::testsupport;

TEST_CASE("cyclotomic_cosets") {
    auto c5 = cyclotomic_cosets(5, 2);
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].members == std::vector<int64_t>{1, 2, 3, 4});

    auto c7 = cyclotomic_cosets(7, 2);
    REQUIRE(c7.size() == 2);
    CHECK(c7[0].members == std::vector<int64_t>{1, 2, 4});
    CHECK(c7[1].members == std::vector<int64_t>{3, 5, 6});
    CHECK(c7[1].label == 3);

    auto c1 = cyclotomic_cosets(1, 3);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].members == std::vector<int64_t>{0});

    CHECK_THROWS_AS(cyclotomic_cosets(6, 2), NotCoprime);

    // coset sizes all o_n(q), union = units
    for (auto [n, q] : std::vector<std::pair<int64_t, int64_t>>{{8, 3}, {12, 5}, {9, 2}, {16, 7}}) {
        auto cs = cyclotomic_cosets(n, q);
        int64_t o = mult_order(n, q);
        int64_t total = 0;
        for (auto& C : cs) {
            CHECK(static_cast<int64_t>(C.members.size()) == o);
            total += C.members.size();
            for (int64_t m : C.members) CHECK(std::gcd(m, n) == 1);
        }
        CHECK(total == euler_phi(n));
    }
}

TEST_CASE("conj_exponent") {
    // D_8 = <s, r>: pair (<r>, 1): reflection conjugates r to r^-1
    auto G = dihedral(4);
    Idx r = G->generators()[1], s = G->generators()[0];
    auto A = subgroup_closure(G, {r});
    auto pair = make_shoda_pair(G, A, trivial_subgroup(G));
    CHECK(pair.n == 4);
    CHECK(conj_exponent(G, pair, s) == 3);  // -1 mod 4
    CHECK(conj_exponent(G, pair, 0) == 1);
    CHECK(conj_exponent(G, pair, r) == 1);  // elements of A act trivially

    // elements outside N_G(D) are rejected: D = <(12)> in S_3 is self-normalizing
    auto S = s3();
    Idx t = element_of_order(S, 2), c3 = element_of_order(S, 3);
    auto K = subgroup_closure(S, {t});
    auto p2 = make_shoda_pair(S, K, K);
    CHECK_THROWS_AS(conj_exponent(S, p2, c3), NotInNormalizer);
}

TEST_CASE("orbits_and_stabilizer") {
    // S_3, pair (A_3, 1), q = 7: cosets {1}, {2}; one orbit; E = A_3
    auto S = s3();
    auto A3 = subgroup_closure(S, {element_of_order(S, 3)});
    auto pair = make_shoda_pair(S, A3, trivial_subgroup(S));
    auto od = orbits_and_stabilizer(S, pair, 7);
    CHECK(od.cosets.size() == 2);
    CHECK(od.orbits.size() == 1);
    CHECK(od.stabilizer.members == A3.members);

    // Q8, pair (<i>, 1), q = 3: coset {1,3} fixed; E = Q8; one orbit
    auto Q = q8();
    auto A = subgroup_closure(Q, {Q->generators()[0]});
    auto pq = make_shoda_pair(Q, A, trivial_subgroup(Q));
    auto oq = orbits_and_stabilizer(Q, pq, 3);
    CHECK(oq.cosets.size() == 1);
    CHECK(oq.orbits.size() == 1);
    CHECK(oq.stabilizer.order() == 8);

    // abelian G: trivial action, E = G, |R| = phi(n)/o
    auto Z = cyclic(12);
    auto pz = make_shoda_pair(Z, whole_group(Z), trivial_subgroup(Z));
    auto oz = orbits_and_stabilizer(Z, pz, 5);
    CHECK(oz.stabilizer.order() == 12);
    CHECK(oz.orbits.size() == oz.cosets.size());
    CHECK(static_cast<int64_t>(oz.orbits.size()) == euler_phi(12) / mult_order(12, 5));

    // K <= E <= N_G(H) so [E:K] divides [N:K]
    CHECK(oq.stabilizer.order() % A.order() == 0);
}
