#include <set>

#include "doctest.h"
#include "fqg/abelian.hpp"
#include "fqg/gf.hpp"
#include "fqg/util.hpp"

using namespace fqg;

namespace {

GroupRef abelian_pc(const std::vector<int64_t>& orders) {
    PcPresentation P;
    P.rel_orders = orders;
    P.power.assign(orders.size(), {});
    P.conj.assign(orders.size(), std::vector<PcWord>(orders.size()));
    return Group::from_pc(P);
}

// every subgroup, by closure growth (small groups only)
std::vector<SubgroupHandle> all_subgroups(GroupRef G) {
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

}  // namespace

TEST_CASE("abelian_basis divisors") {
    CHECK(abelian_basis(whole_group(abelian_pc({6}))).divisors == std::vector<int64_t>{6});
    CHECK(abelian_basis(whole_group(abelian_pc({2, 2}))).divisors == std::vector<int64_t>{2, 2});
    CHECK(abelian_basis(whole_group(abelian_pc({2, 4}))).divisors == std::vector<int64_t>{2, 4});
    // same invariants regardless of presentation shape: Z_2 x Z_4 given as Z_4 x Z_2
    CHECK(abelian_basis(whole_group(abelian_pc({4, 2}))).divisors == std::vector<int64_t>{2, 4});
    // Z_12 given as Z_4 x Z_3 collapses to a single divisor
    CHECK(abelian_basis(whole_group(abelian_pc({4, 3}))).divisors == std::vector<int64_t>{12});
    CHECK(abelian_basis(whole_group(abelian_pc({2, 2, 4, 3}))).divisors ==
          std::vector<int64_t>{2, 2, 12});

    for (auto orders : std::vector<std::vector<int64_t>>{{2, 4}, {3, 9}, {2, 2, 2}, {6, 15}}) {
        auto B = abelian_basis(whole_group(abelian_pc(orders)));
        int64_t prod = 1;
        for (int64_t d : B.divisors) prod *= d;
        CHECK(prod == B.order());
    }
}

TEST_CASE("abelian_basis rejects nonabelian input") {
    PcPresentation P;  // S_3
    P.rel_orders = {2, 3};
    P.power = {{}, {}};
    P.conj = {{{}, {{1, 2}}}, {{}, {}}};
    auto G = Group::from_pc(P);
    CHECK_THROWS_AS(abelian_basis(whole_group(G)), NotAbelian);
}

TEST_CASE("linear characters") {
    auto B = abelian_basis(whole_group(abelian_pc({2, 4})));
    auto chars = linear_characters(B);
    CHECK(chars.size() == 8);
    // trivial character has kernel A and order 1
    CHECK(chars[0].order == 1);
    CHECK(character_kernel(B, chars[0]).order() == 8);
    for (const auto& chi : chars) CHECK(character_kernel(B, chi).order() * chi.order == 8);

    auto B3 = abelian_basis(whole_group(abelian_pc({3})));
    auto chars3 = linear_characters(B3);
    CHECK(chars3.size() == 3);
    for (const auto& chi : chars3)
        if (chi.order == 3) CHECK(character_kernel(B3, chi).order() == 1);
}

TEST_CASE("character orthogonality over finite fields") {
    for (auto orders : std::vector<std::vector<int64_t>>{{6}, {2, 4}, {3, 3}}) {
        auto B = abelian_basis(whole_group(abelian_pc(orders)));
        int64_t L = B.exponent();
        for (int64_t q : {7, 5}) {
            if (std::gcd(q, B.order()) != 1) continue;
            CyclotomicData cd = cyclotomic_data(get_field(q), L);
            auto& E = *cd.ext;
            for (const auto& chi : linear_characters(B)) {
                auto acc = E.zero();
                for (size_t j = 0; j < B.group.members.size(); ++j)
                    acc = E.add(acc, E.pow(cd.zeta, character_exponent(B, chi, j)));
                if (chi.order == 1) {
                    CHECK(acc == E.from_base(E.base().from_int(B.order())));
                } else {
                    CHECK(E.is_zero(acc));
                }
            }
        }
    }
}

TEST_CASE("cyclic_quotient_subgroups") {
    // Z_p: {A, 1}
    auto Bp = abelian_basis(whole_group(abelian_pc({5})));
    auto subs = cyclic_quotient_subgroups(Bp);
    CHECK(subs.size() == 2);

    // Klein four: A and the three order-2 subgroups; trivial excluded
    auto Bk = abelian_basis(whole_group(abelian_pc({2, 2})));
    subs = cyclic_quotient_subgroups(Bk);
    CHECK(subs.size() == 4);
    int order2 = 0;
    for (auto& D : subs) {
        CHECK(D.order() != 1);
        if (D.order() == 2) ++order2;
    }
    CHECK(order2 == 3);

    // every returned D gives a cyclic quotient
    for (auto orders : std::vector<std::vector<int64_t>>{{2, 4}, {12}, {3, 3}, {2, 2, 2}}) {
        auto G = abelian_pc(orders);
        auto B = abelian_basis(whole_group(G));
        auto ds = cyclic_quotient_subgroups(B);
        std::set<std::vector<Idx>> got;
        for (auto& D : ds) {
            auto qd = quotient(G, D);
            CHECK(predicates(qd.quotient).is_cyclic);
            got.insert(D.members);
        }
        // cross-check against brute-force subgroup enumeration
        int expected = 0;
        for (auto& H : all_subgroups(G)) {
            auto qd = quotient(G, H);
            if (predicates(qd.quotient).is_cyclic) {
                ++expected;
                CHECK(got.count(H.members) == 1);
            }
        }
        CHECK(static_cast<int>(ds.size()) == expected);
    }
}
