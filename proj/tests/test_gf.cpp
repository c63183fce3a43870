#include <random>

#include "doctest.h"
#include "fqg/gf.hpp"
#include "fqg/util.hpp"

using namespace fqg;

TEST_CASE("mult_order basics") {
    CHECK(mult_order(7, 2) == 3);
    CHECK(mult_order(1, 5) == 1);
    CHECK(mult_order(3, 7) == 1);
    CHECK(mult_order(5, 2) == 4);
    CHECK(mult_order(8, 3) == 2);
    CHECK(mult_order(49, 3) == 42);
    CHECK_THROWS_AS(mult_order(6, 2), NotCoprime);
}

TEST_CASE("prime field arithmetic") {
    FiniteField F(7);
    CHECK(F.p() == 7);
    CHECK(F.k() == 1);
    for (FF a = 0; a < 7; ++a) {
        for (FF b = 0; b < 7; ++b) {
            CHECK(F.add(a, b) == (a + b) % 7);
            CHECK(F.mul(a, b) == (a * b) % 7);
        }
        if (a) CHECK(F.mul(a, F.inv(a)) == 1);
    }
}

TEST_CASE("field axioms on small prime power fields") {
    for (int64_t q : {4, 8, 9, 16, 25, 27, 49, 121, 169, 256, 625}) {
        CAPTURE(q);
        FiniteField F(q);
        CHECK(F.q() == q);
        // exhaustive inverse law
        for (FF a = 1; a < static_cast<FF>(q); ++a) CHECK(F.mul(a, F.inv(a)) == 1);
        std::mt19937 rng(7);
        std::uniform_int_distribution<FF> dist(0, static_cast<FF>(q - 1));
        for (int t = 0; t < 200; ++t) {
            FF a = dist(rng), b = dist(rng), c = dist(rng);
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.add(a, F.neg(a)) == 0);
        }
        // Frobenius fixes the prime field
        for (int64_t v = 0; v < F.p(); ++v) CHECK(F.frob(F.from_int(v)) == F.from_int(v));
    }
    CHECK_THROWS_AS(FiniteField(6), InvalidParameters);
    CHECK_THROWS_AS(FiniteField(12), InvalidParameters);
    CHECK_THROWS_AS(FiniteField(1), InvalidParameters);
}

TEST_CASE("make_extension basics") {
    auto F2 = get_field(2);
    ExtensionField E1 = make_extension(F2, 1);
    CHECK(E1.degree() == 1);
    ExtensionField E2 = make_extension(F2, 2);
    // all 4 elements satisfy x^4 = x
    for (uint64_t i = 0; i < 4; ++i) {
        auto x = E2.element_by_index(i);
        CHECK(E2.pow(x, 4) == E2.mul(E2.pow(x, 3), x));
        auto x4 = E2.pow(x, 4);
        if (!E2.is_zero(x)) CHECK(E2.is_one(E2.pow(x, 3)));
    }
    auto F3 = get_field(3);
    ExtensionField E9 = make_extension(F3, 2);
    for (uint64_t i = 0; i < 9; ++i) {
        auto x = E9.element_by_index(i);
        CHECK(E9.pow(x, 9) == x);
    }
    // the fixed set of x^q = x is the embedded base
    int fixed = 0;
    for (uint64_t i = 0; i < 9; ++i) {
        auto x = E9.element_by_index(i);
        if (E9.frobenius(x) == x) {
            ++fixed;
            CHECK(E9.in_base(x));
        }
    }
    CHECK(fixed == 3);
}

TEST_CASE("root_of_unity") {
    auto F2 = get_field(2);
    ExtensionField E4 = make_extension(F2, 2);
    auto z3 = root_of_unity(E4, 3);
    CHECK(E4.is_one(E4.pow(z3, 3)));
    CHECK(!E4.is_one(z3));
    CHECK(E4.is_one(root_of_unity(E4, 1)[0] == 1 ? E4.one() : E4.zero()));

    auto F3 = get_field(3);
    ExtensionField E3 = make_extension(F3, 1);
    auto m1 = root_of_unity(E3, 2);
    CHECK(m1[0] == F3->from_int(-1));

    ExtensionField E32 = make_extension(F3, 2);
    CHECK_THROWS_AS(root_of_unity(E32, 5), NoSuchRoot);

    // order exactness across proper divisors
    auto F5 = get_field(5);
    ExtensionField E54 = make_extension(F5, 4);
    for (int64_t n : {2, 4, 8, 13, 16, 26, 39, 624}) {
        auto z = root_of_unity(E54, n);
        CHECK(E54.is_one(E54.pow(z, n)));
        for (int64_t m : divisors(n))
            if (m < n && m > 0) CHECK(!E54.is_one(E54.pow(z, m)));
    }
}

TEST_CASE("root_of_unity large field fallback") {
    // o_49(3) = 42, so F_3(zeta_49) = F_{3^42}: beyond 64-bit group order
    auto F3 = get_field(3);
    CyclotomicData cd = cyclotomic_data(F3, 49);
    CHECK(cd.o == 42);
    auto& E = *cd.ext;
    CHECK(E.is_one(E.pow(cd.zeta, 49)));
    CHECK(!E.is_one(E.pow(cd.zeta, 7)));
    // trace table sanity: entries live in F_3 by construction; tr(zeta^j) with j
    // ranging over a cyclotomic coset is constant
    CHECK(cd.trace_of_power[1] == cd.trace_of_power[3 % 49]);
    CHECK(cd.trace_of_power[2] == cd.trace_of_power[6 % 49]);
}

TEST_CASE("trace") {
    auto F2 = get_field(2);
    ExtensionField E4 = make_extension(F2, 2);
    CHECK(trace(E4, E4.one()) == 0);  // o * 1 = 2 * 1 = 0 in F_2
    auto z3 = root_of_unity(E4, 3);
    CHECK(trace(E4, z3) == 1);  // zeta + zeta^2 = 1 over F_2

    auto F3 = get_field(3);
    ExtensionField E9 = make_extension(F3, 2);
    CHECK(trace(E9, E9.one()) == 2);  // 2 * 1 in F_3

    // Frobenius invariance and additivity on random elements
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        auto x = E9.element_by_index(rng() % 9);
        auto y = E9.element_by_index(rng() % 9);
        CHECK(trace(E9, E9.frobenius(x)) == trace(E9, x));
        CHECK(trace(E9, E9.add(x, y)) == F3->add(trace(E9, x), trace(E9, y)));
    }
    // surjectivity onto the base field
    std::vector<bool> hit(3, false);
    for (uint64_t i = 0; i < 9; ++i) hit[trace(E9, E9.element_by_index(i))] = true;
    CHECK(hit[0]);
    CHECK(hit[1]);
    CHECK(hit[2]);
}

TEST_CASE("polynomial factorization") {
    auto F3 = get_field(3);
    SUBCASE("x^2 - 1 over F_3") {
        Poly f{{2, 0, 1}};  // x^2 + 2 = x^2 - 1
        auto fac = factor_polynomial(*F3, f);
        REQUIRE(fac.size() == 2);
        CHECK(fac[0].first == Poly{{1, 1}});  // x + 1
        CHECK(fac[1].first == Poly{{2, 1}});  // x + 2 = x - 1
    }
    SUBCASE("x^2 + 1 irreducible over F_3") {
        Poly f{{1, 0, 1}};
        auto fac = factor_polynomial(*F3, f);
        REQUIRE(fac.size() == 1);
        CHECK(fac[0].first == f);
        CHECK(fac[0].second == 1);
        CHECK(poly_irreducible(*F3, f));
    }
    SUBCASE("x^3 - 1 over F_2") {
        auto F2 = get_field(2);
        Poly f{{1, 0, 0, 1}};  // x^3 + 1
        auto fac = factor_polynomial(*F2, f);
        REQUIRE(fac.size() == 2);
        CHECK(fac[0].first == Poly{{1, 1}});
        CHECK(fac[1].first == Poly{{1, 1, 1}});
    }
}

TEST_CASE("factorization remultiplies to input") {
    std::mt19937 rng(23);
    for (int64_t q : {2, 3, 4, 5, 9}) {
        auto F = get_field(q);
        for (int t = 0; t < 30; ++t) {
            int64_t d = 1 + rng() % 8;
            Poly f;
            f.c.resize(d + 1);
            for (auto& c : f.c) c = static_cast<FF>(rng() % q);
            f.c[d] = 1;
            auto fac = factor_polynomial(*F, f);
            Poly prod{{1}};
            for (auto& [g, m] : fac) {
                CHECK(poly_irreducible(*F, g));
                for (int64_t i = 0; i < m; ++i) prod = poly_mul(*F, prod, g);
            }
            CHECK(prod == f);
        }
    }
}

TEST_CASE("least irreducible is deterministic and standard") {
    auto F2 = get_field(2);
    CHECK(least_irreducible(*F2, 2) == Poly{{1, 1, 1}});           // x^2+x+1
    CHECK(least_irreducible(*F2, 4) == Poly{{1, 1, 0, 0, 1}});     // x^4+x+1
    auto F3 = get_field(3);
    CHECK(least_irreducible(*F3, 1) == Poly{{0, 1}});              // x
}
