#include <doctest.h>

#include <random>

#include "hhq/cup.hpp"

using namespace hhq;

namespace {

MinimalResolution make(long qv) {
    auto Q = FieldContext::rationals();
    return MinimalResolution(LambdaAlgebra(Q, FieldScalar::from_int(Q, qv)));
}

Cochain random_cocycle(const MinimalResolution& res, int n, std::mt19937& rng) {
    auto ctx = res.context();
    auto ker = kernel_basis(res.delta_star_matrix(n + 1));
    std::vector<FieldScalar> v(4 * (n + 1), FieldScalar::zero(ctx));
    std::uniform_int_distribution<long> pick(-3, 3);
    for (const auto& k : ker) {
        auto c = FieldScalar::from_int(ctx, pick(rng));
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += k[t] * c;
    }
    return Cochain::from_coordinates(ctx, n, v);
}

}  // namespace

TEST_CASE("generic degree-one products") {
    auto res = make(2);
    const auto& h1 = res.hh_basis(1);
    REQUIRE(h1.dimension == 2);
    const Cochain& u0 = h1.representatives[0];  // (x, 0)
    const Cochain& u1 = h1.representatives[1];  // (0, y)

    auto p = cup(res, u0, u1);
    // u0 u1 = -q (0, yx, 0): coordinate -2 over the HH^2 representative
    auto coords = reduce_to_basis(res, p);
    REQUIRE(coords.size() == 1);
    CHECK(coords[0] == FieldScalar::from_int(res.context(), -2));

    auto coords10 = reduce_to_basis(res, cup(res, u1, u0));
    CHECK(coords10[0] == FieldScalar::from_int(res.context(), 2));

    CHECK(reduces_to_zero(res, cup(res, u0, u0)));
    CHECK(reduces_to_zero(res, cup(res, u1, u1)));

    const Cochain& z = res.hh_basis(0).representatives[1];  // (yx)
    CHECK(reduces_to_zero(res, cup(res, z, z)));
    CHECK(reduces_to_zero(res, cup(res, z, u0)));
}

TEST_CASE("cup rejects non-cocycles") {
    auto res = make(2);
    Cochain bad = Cochain::basis(res.context(), 1, 0, AlgebraElement::kOne);
    REQUIRE(!res.is_cocycle(bad));
    CHECK_THROWS_AS(cup(res, bad, bad), std::invalid_argument);
}

TEST_CASE("cup with a coboundary is a coboundary") {
    std::mt19937 rng(314);
    for (long qv : {2L, -1L, 1L}) {
        auto res = make(qv);
        std::uniform_int_distribution<long> pick(-3, 3);
        for (int trial = 0; trial < 10; ++trial) {
            int m = 1 + trial % 3;
            std::vector<FieldScalar> v;
            for (int t = 0; t < 4 * m; ++t)
                v.push_back(FieldScalar::from_int(res.context(), pick(rng)));
            Cochain eta = res.apply_delta(Cochain::from_coordinates(res.context(), m - 1, v));
            REQUIRE(res.is_cocycle(eta));
            Cochain theta = random_cocycle(res, 2, rng);
            CHECK(reduces_to_zero(res, cup(res, eta, theta)));
            CHECK(reduces_to_zero(res, cup(res, theta, eta)));
        }
    }
}

TEST_CASE("unit class is a two-sided identity") {
    std::mt19937 rng(2718);
    for (long qv : {2L, -1L, 0L, 1L}) {
        auto res = make(qv);
        Cochain unit = Cochain::basis(res.context(), 0, 0, AlgebraElement::kOne);
        REQUIRE(res.is_cocycle(unit));
        for (int n = 0; n <= 4; ++n) {
            Cochain eta = random_cocycle(res, n, rng);
            CHECK(cup(res, unit, eta) == eta);
            CHECK(cup(res, eta, unit) == eta);
        }
    }
}

TEST_CASE("graded commutativity") {
    std::mt19937 rng(137);
    int pairs = 0;
    for (long qv : {2L, -1L, 1L, 0L}) {
        auto res = make(qv);
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n)
                for (int trial = 0; trial < 4; ++trial) {
                    Cochain a = random_cocycle(res, m, rng);
                    Cochain b = random_cocycle(res, n, rng);
                    Cochain lhs = cup(res, a, b);
                    Cochain rhs = cup(res, b, a);
                    if ((m * n) % 2 == 1) rhs = rhs.scaled(FieldScalar::from_int(res.context(), -1));
                    CHECK(reduces_to_zero(res, lhs - rhs));
                    ++pairs;
                }
    }
    CHECK(pairs >= 50);
}

TEST_CASE("associativity at the cochain level") {
    std::mt19937 rng(555);
    int triples = 0;
    for (long qv : {2L, -1L, 1L}) {
        auto res = make(qv);
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n)
                for (int p = 0; p <= 2; ++p)
                    for (int trial = 0; trial < 2; ++trial) {
                        Cochain a = random_cocycle(res, m, rng);
                        Cochain b = random_cocycle(res, n, rng);
                        Cochain c = random_cocycle(res, p, rng);
                        CHECK(cup(res, cup(res, a, b), c) == cup(res, a, cup(res, b, c)));
                        ++triples;
                    }
    }
    CHECK(triples >= 50);
}

TEST_CASE("ring presentations verify per case") {
    SUBCASE("generic") { CHECK(verify_presentation(make(2), 6).all_passed()); }
    SUBCASE("q = 1") { CHECK(verify_presentation(make(1), 6).all_passed()); }
    SUBCASE("q = -1") { CHECK(verify_presentation(make(-1), 6).all_passed()); }
    SUBCASE("q = 0") { CHECK(verify_presentation(make(0), 6).all_passed()); }
    SUBCASE("odd root r = 3 over F_7") {
        auto F7 = FieldContext::prime_field(7);
        MinimalResolution res(LambdaAlgebra(F7, FieldScalar::from_int(F7, 2)));
        CHECK(verify_presentation(res, 12).all_passed());
    }
    SUBCASE("even order r = 4 over F_5") {
        auto F5 = FieldContext::prime_field(5);
        MinimalResolution res(LambdaAlgebra(F5, FieldScalar::from_int(F5, 2)));
        CHECK(verify_presentation(res, 8).all_passed());
    }
    SUBCASE("char 2, q = 1") {
        auto F2 = FieldContext::prime_field(2);
        MinimalResolution res(LambdaAlgebra(F2, FieldScalar::one(F2)));
        CHECK(verify_presentation(res, 6).all_passed());
    }
}

TEST_CASE("q = 0: all positive-degree products vanish") {
    auto res = make(0);
    CHECK(verify_presentation(res, 6).all_passed());
    const Cochain& z = res.hh_basis(0).representatives[1];
    CHECK(reduces_to_zero(res, cup(res, z, z)));
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (const auto& a : res.hh_basis(m).representatives)
                for (const auto& b : res.hh_basis(n).representatives)
                    CHECK(reduces_to_zero(res, cup(res, a, b)));
}
