#include <doctest.h>

#include <algorithm>

#include "hhq/koszul.hpp"

using namespace hhq;

TEST_CASE("quantum plane multiplication") {
    auto Q = FieldContext::rationals();
    auto q = FieldScalar::from_int(Q, 2);
    QuantumMonomial x{1, 0, FieldScalar::one(Q)};
    QuantumMonomial y{0, 1, FieldScalar::one(Q)};

    // y x = q x y
    auto yx = quantum_multiply(y, x, q);
    CHECK(yx.a == 1);
    CHECK(yx.b == 1);
    CHECK(yx.coeff == q);
    CHECK(quantum_multiply(x, y, q).coeff == FieldScalar::one(Q));

    // (xy)^2 = q x^2 y^2
    QuantumMonomial xy{1, 1, FieldScalar::one(Q)};
    auto sq = quantum_multiply(xy, xy, q);
    CHECK(sq.a == 2);
    CHECK(sq.b == 2);
    CHECK(sq.coeff == q);
}

TEST_CASE("graded dimensions") {
    for (unsigned n = 0; n <= 10; ++n) CHECK(e_dimension(n) == n + 1);
}

TEST_CASE("graded_central agrees with brute-force graded commutation") {
    // x^a y^b is graded-central iff it graded-commutes with x and with y:
    // q^b = (-1)^{a+b} and q^a = (-1)^{a+b}. Cross-check against multiplying
    // out against every monomial of low degree.
    auto F5 = FieldContext::prime_field(5);
    auto q = FieldScalar::from_int(F5, 2);
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; b <= 6; ++b) {
            QuantumMonomial m{a, b, FieldScalar::one(F5)};
            bool commutes = true;
            for (unsigned c = 0; c <= 3 && commutes; ++c)
                for (unsigned d = 0; d + c <= 3 && commutes; ++d) {
                    QuantumMonomial other{c, d, FieldScalar::one(F5)};
                    auto lhs = quantum_multiply(m, other, q);
                    auto rhs = quantum_multiply(other, m, q);
                    auto sign = FieldScalar::from_int(F5, (a + b) * (c + d) % 2 == 0 ? 1 : -1);
                    if (lhs.coeff != rhs.coeff * sign) commutes = false;
                }
            CHECK(graded_central(a, b, q) == commutes);
        }
}

TEST_CASE("centre enumerations") {
    auto Q = FieldContext::rationals();
    SUBCASE("generic: only scalars") {
        LambdaAlgebra alg(Q, FieldScalar::from_int(Q, 2));
        auto got = graded_centre_monomials(alg, 10);
        CHECK(got == std::vector<std::pair<unsigned, unsigned>>{{0, 0}});
        CHECK(verify_centre_proposition(alg, 10).all_passed());
    }
    SUBCASE("even order r = 4 over F_5: k[x^4, y^4]") {
        auto F5 = FieldContext::prime_field(5);
        LambdaAlgebra alg(F5, FieldScalar::from_int(F5, 2));
        auto got = graded_centre_monomials(alg, 8);
        std::sort(got.begin(), got.end());
        CHECK(got == std::vector<std::pair<unsigned, unsigned>>{
                         {0, 0}, {0, 4}, {0, 8}, {4, 0}, {4, 4}, {8, 0}});
        CHECK(verify_centre_proposition(alg, 16).all_passed());
    }
    SUBCASE("odd order r = 3 over F_7: k[x^6, x^3 y^3, y^6]") {
        auto F7 = FieldContext::prime_field(7);
        LambdaAlgebra alg(F7, FieldScalar::from_int(F7, 2));
        auto got = graded_centre_monomials(alg, 6);
        std::sort(got.begin(), got.end());
        CHECK(got == std::vector<std::pair<unsigned, unsigned>>{
                         {0, 0}, {0, 6}, {3, 3}, {6, 0}});
        CHECK(verify_centre_proposition(alg, 12).all_passed());
    }
    SUBCASE("char 2, q = 1: k[x, y]") {
        auto F2 = FieldContext::prime_field(2);
        LambdaAlgebra alg(F2, FieldScalar::one(F2));
        auto got = graded_centre_monomials(alg, 3);
        std::sort(got.begin(), got.end());
        CHECK(got.size() == 10);  // every monomial of degree <= 3
        CHECK(verify_centre_proposition(alg, 8).all_passed());
    }
    SUBCASE("q = -1 over Q: k[x^2, y^2]") {
        LambdaAlgebra alg(Q, FieldScalar::from_int(Q, -1));
        CHECK(verify_centre_proposition(alg, 10).all_passed());
    }
    SUBCASE("q = 1 over Q: k[x^2, xy, y^2]") {
        LambdaAlgebra alg(Q, FieldScalar::one(Q));
        auto got = graded_centre_monomials(alg, 4);
        std::sort(got.begin(), got.end());
        CHECK(got == std::vector<std::pair<unsigned, unsigned>>{
                         {0, 0}, {0, 2}, {0, 4}, {1, 1}, {1, 3}, {2, 0}, {2, 2}, {3, 1}, {4, 0}});
        CHECK(verify_centre_proposition(alg, 10).all_passed());
    }
}

TEST_CASE("expected centre is multiplicatively closed") {
    auto F7 = FieldContext::prime_field(7);
    LambdaAlgebra alg(F7, FieldScalar::from_int(F7, 2));
    auto gens = expected_centre_monomials(alg, 6);
    for (auto [a1, b1] : gens)
        for (auto [a2, b2] : gens)
            if (a1 + a2 + b1 + b2 <= 12) CHECK(graded_central(a1 + a2, b1 + b2, alg.q()));
}
