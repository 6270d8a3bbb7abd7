#include <doctest.h>

#include "hhq/barcomplex.hpp"

using namespace hhq;

TEST_CASE("bar differential sizes and d o d = 0") {
    auto Q = FieldContext::rationals();
    LambdaAlgebra alg(Q, FieldScalar::from_int(Q, 2));
    for (int n = 0; n <= 2; ++n) {
        auto d = bar_differential_matrix(n, alg);
        CHECK(d.rows() == (1u << (2 * (n + 2))));
        CHECK(d.cols() == (1u << (2 * (n + 1))));
    }
    CHECK(verify_bar_complex(2, alg).all_passed());

    auto F7 = FieldContext::prime_field(7);
    CHECK(verify_bar_complex(3, LambdaAlgebra(F7, FieldScalar::from_int(F7, 2))).all_passed());
}

TEST_CASE("degree zero kernel is the centre") {
    auto Q = FieldContext::rationals();
    LambdaAlgebra alg(Q, FieldScalar::from_int(Q, 2));
    auto d0 = bar_differential_matrix(0, alg);
    CHECK(kernel_basis(d0).size() == 2);  // span{1, yx}
    CHECK(oracle_hh_dimension(0, alg) == 2);
}

TEST_CASE("oracle dims, generic over Q") {
    auto Q = FieldContext::rationals();
    LambdaAlgebra alg(Q, FieldScalar::from_int(Q, 2));
    auto dims = oracle_hh_dimensions(3, alg);
    CHECK(dims == std::vector<unsigned>{2, 2, 1, 0});
}

TEST_CASE("oracle dims, char 2 commutative case") {
    auto F2 = FieldContext::prime_field(2);
    LambdaAlgebra alg(F2, FieldScalar::one(F2));
    auto dims = oracle_hh_dimensions(3, alg);
    CHECK(dims == std::vector<unsigned>{4, 8, 12, 16});
}

TEST_CASE("oracle dims, prime-field fast path at degree 4") {
    auto F7 = FieldContext::prime_field(7);
    LambdaAlgebra alg(F7, FieldScalar::from_int(F7, 2));
    auto dims = oracle_hh_dimensions(4, alg);
    CHECK(dims == std::vector<unsigned>{2, 2, 1, 0, 0});

    auto F3 = FieldContext::prime_field(3);
    auto q0 = oracle_hh_dimensions(4, LambdaAlgebra(F3, FieldScalar::zero(F3)));
    CHECK(q0 == std::vector<unsigned>{2, 2, 3, 5, 7});
}
