#include "doctest.h"
#include "fqg/idempotents.hpp"
#include "support.hpp"

using namespace fqg;
using namespace fqg::testsupport;

namespace {

std::vector<PairOrbits> pair_orbits(GroupRef G, int64_t q) {
    std::vector<PairOrbits> out;
    for (auto& p : strong_shoda_pairs(G)) {
        auto od = orbits_and_stabilizer(G, p, q);
        out.push_back({std::move(p), std::move(od)});
    }
    return out;
}

}  // namespace

TEST_CASE("hat") {
    auto Z3 = cyclic(3);
    FieldRef F2 = get_field(2);
    auto h = hat(whole_group(Z3), F2);
    CHECK(h.coeffs == std::vector<FF>{1, 1, 1});  // 3^-1 = 1 in F_2

    auto T = hat(trivial_subgroup(Z3), F2);
    CHECK(T == algebra_one(Z3, F2));

    auto S = s3();
    FieldRef F7 = get_field(7);
    auto A3 = subgroup_closure(S, {element_of_order(S, 3)});
    auto hA = hat(A3, F7);
    CHECK(algebra_mult(hA, hA) == hA);

    CHECK_THROWS_AS(hat(whole_group(Z3), get_field(3)), NotCoprime);
}

TEST_CASE("epsilon") {
    auto Z3 = cyclic(3);
    FieldRef F2 = get_field(2);
    // eps(K, K) = K-hat
    auto full = whole_group(Z3);
    CHECK(epsilon(Z3, full, full, F2) == hat(full, F2));
    // eps(Z_3, 1) over F_2 = 1-hat - Z3-hat = a + a^2
    auto e = epsilon(Z3, full, trivial_subgroup(Z3), F2);
    CHECK(e.coeffs == std::vector<FF>{0, 1, 1});

    // idempotency across the S_3 pairs over F_7
    auto S = s3();
    FieldRef F7 = get_field(7);
    for (const auto& p : strong_shoda_pairs(S)) {
        auto ep = epsilon(S, p.A, p.D, F7);
        CHECK(algebra_mult(ep, ep) == ep);
    }
}

TEST_CASE("sum_distinct_conjugates") {
    auto S = s3();
    FieldRef F7 = get_field(7);
    // central element unchanged
    auto one = algebra_one(S, F7);
    CHECK(sum_distinct_conjugates(S, one) == one);
    // eps(A_3, 1) is already G-invariant
    auto A3 = subgroup_closure(S, {element_of_order(S, 3)});
    auto ep = epsilon(S, A3, trivial_subgroup(S), F7);
    CHECK(sum_distinct_conjugates(S, ep) == ep);

    // Q8 over F_3: e_C for (<i>, 1) is central with full support
    auto Q = q8();
    FieldRef F3 = get_field(3);
    auto A = subgroup_closure(Q, {Q->generators()[0]});
    auto pair = make_shoda_pair(Q, A, trivial_subgroup(Q));
    auto cs = cyclotomic_cosets(4, 3);
    auto eps_c = epsilon_C(Q, pair, cs[0], F3);
    auto ec = sum_distinct_conjugates(Q, eps_c);
    CHECK(is_class_function(ec));
    bool full_support = true;
    for (FF c : ec.coeffs)
        if (!c) full_support = false;
    CHECK(full_support);
}

TEST_CASE("epsilon_C examples") {
    auto Z3 = cyclic(3);
    FieldRef F2 = get_field(2);
    auto p3 = make_shoda_pair(Z3, whole_group(Z3), trivial_subgroup(Z3));
    auto C = cyclotomic_cosets(3, 2)[0];
    CHECK(epsilon_C(Z3, p3, C, F2).coeffs == std::vector<FF>{0, 1, 1});

    // K = H: trivial character gives K-hat
    auto pt = make_shoda_pair(Z3, whole_group(Z3), whole_group(Z3));
    auto C1 = cyclotomic_cosets(1, 2)[0];
    CHECK(epsilon_C(Z3, pt, C1, F2) == hat(whole_group(Z3), F2));

    auto Z5 = cyclic(5);
    auto p5 = make_shoda_pair(Z5, whole_group(Z5), trivial_subgroup(Z5));
    auto C5 = cyclotomic_cosets(5, 2)[0];
    CHECK(epsilon_C(Z5, p5, C5, F2).coeffs == std::vector<FF>{0, 1, 1, 1, 1});
}

TEST_CASE("completeness_check") {
    SUBCASE("Z_3 over F_2") {
        auto Z3 = cyclic(3);
        auto rep = completeness_check(Z3, get_field(2), pair_orbits(Z3, 2));
        REQUIRE(rep.idempotents.size() == 2);
        CHECK(rep.normally_monomial);
        CHECK(rep.sum_is_one);
        CHECK(rep.distinct);
        CHECK(rep.all_central);
        CHECK(rep.thorough);
        CHECK(rep.all_idempotent);
        CHECK(rep.all_orthogonal);
        CHECK(rep.dimension_covered == 3);
    }
    SUBCASE("Q8 over F_3") {
        auto Q = q8();
        auto rep = completeness_check(Q, get_field(3), pair_orbits(Q, 3));
        CHECK(rep.idempotents.size() == 5);
        CHECK(rep.sum_is_one);
        CHECK(rep.all_idempotent);
        CHECK(rep.all_orthogonal);
        CHECK(rep.dimension_covered == 8);
    }
    SUBCASE("S_3 over F_7") {
        auto S = s3();
        auto rep = completeness_check(S, get_field(7), pair_orbits(S, 7));
        CHECK(rep.idempotents.size() == 3);
        CHECK(rep.sum_is_one);
    }
    SUBCASE("SL(2,3) is not normally monomial") {
        auto G = sl23();
        REQUIRE(G->order() == 24);
        auto rep = completeness_check(G, get_field(7), pair_orbits(G, 7));
        CHECK(!rep.sum_is_one);
        CHECK(!rep.normally_monomial);
        CHECK(rep.dimension_covered < 24);
        // the produced idempotents are still honest primitive central idempotents
        CHECK(rep.all_idempotent);
        CHECK(rep.all_orthogonal);
        CHECK(rep.all_central);
        CHECK(rep.distinct);
    }
}

TEST_CASE("lemma-1 style first-principles idempotents match e_C (|G| <= 24)") {
    struct Case {
        GroupRef G;
        int64_t q;
    };
    for (auto& [G, q] : std::vector<Case>{{s3(), 7}, {q8(), 3}, {dihedral(4), 5}, {cyclic(6), 5},
                                          {dihedral(6), 5}}) {
        CAPTURE(G->order());
        CAPTURE(q);
        FieldRef F = get_field(q);
        auto pos = pair_orbits(G, q);
        // collect all e_C values
        std::vector<std::vector<FF>> ecs;
        for (auto& po : pos)
            for (int rc : po.orbits.orbit_reps)
                ecs.push_back(e_C(G, po.pair, po.orbits.cosets[rc], F).coeffs);

        for (auto& po : pos) {
            const auto& pr = po.pair;
            int64_t n = pr.n;
            CyclotomicData cd = cyclotomic_data(F, n);
            auto& E = *cd.ext;
            // psi: linear character of A with kernel D; induced character values
            // chi(g) = (1/|A|) sum_x psi0(x g x^-1), then e(chi) summed over the
            // Frobenius orbit
            int64_t o = cd.o;
            std::vector<ExtensionField::Elt> chi(G->order(), E.zero());
            auto invA = E.from_base(F->inv(F->from_int(pr.A.order())));
            for (Idx g = 0; g < G->order(); ++g) {
                auto acc = E.zero();
                for (Idx x = 0; x < G->order(); ++x) {
                    Idx y = G->conj(g, x);
                    if (pr.A.contains(y)) acc = E.add(acc, E.pow(cd.zeta, pr.dlog_of(y)));
                }
                chi[g] = E.mul(acc, invA);
            }
            // degree of the field generated by the values
            auto frob_vec = [&](std::vector<ExtensionField::Elt> v) {
                for (auto& x : v) x = E.frobenius(x);
                return v;
            };
            std::vector<std::vector<ExtensionField::Elt>> orbit{chi};
            for (;;) {
                auto next = frob_vec(orbit.back());
                if (next == chi) break;
                orbit.push_back(std::move(next));
            }
            // e_Fq(chi) = sum over the orbit of chi(1)/|G| sum chi(g) g^-1
            FF deg = F->from_int(G->order() / pr.A.order());
            FF scale = F->mul(deg, F->inv(F->from_int(G->order())));
            AlgebraElement efq = algebra_zero(G, F);
            for (auto& cv : orbit) {
                for (Idx g = 0; g < G->order(); ++g) {
                    auto val = E.mul(cv[g], E.from_base(scale));
                    REQUIRE(E.in_base(val));
                    Idx gi = G->inv(g);
                    efq.coeffs[gi] = F->add(efq.coeffs[gi], val[0]);
                }
            }
            CHECK(std::count(ecs.begin(), ecs.end(), efq.coeffs) == 1);
            (void)o;
        }
    }
}
