#pragma once

#include <utility>
#include <vector>

#include "hhq/lambda.hpp"
#include "hhq/report.hpp"

namespace hhq {

/// Monomial c * x^a y^b in the quantum plane E(Lambda_q) = k<x,y>/(yx - q xy).
struct QuantumMonomial {
    unsigned a = 0, b = 0;
    FieldScalar coeff;

    bool operator==(const QuantumMonomial& o) const {
        return a == o.a && b == o.b && coeff == o.coeff;
    }
};

/// x^a y^b * x^a' y^b' = q^{a' b} x^{a+a'} y^{b+b'}.
QuantumMonomial quantum_multiply(const QuantumMonomial& m1, const QuantumMonomial& m2,
                                 const FieldScalar& q);

/// Dimension of the degree-n graded piece of E(Lambda): the Betti number n+1.
unsigned e_dimension(unsigned n);

/// True when x^a y^b graded-commutes with every homogeneous element; checking
/// the generators suffices, giving q^b = (-1)^{a+b} and q^a = (-1)^{a+b}.
bool graded_central(unsigned a, unsigned b, const FieldScalar& q);

/// All (a, b) with a + b <= max_total_degree whose monomial lies in the
/// graded centre of E(Lambda_q).
std::vector<std::pair<unsigned, unsigned>> graded_centre_monomials(const LambdaAlgebra& alg,
                                                                   unsigned max_total_degree);

/// Compares the enumeration against the closed-form description of the graded
/// centre (k; k[x^r, y^r]; or k[x^{2r}, x^r y^r, y^{2r}]) up to the cutoff.
Report verify_centre_proposition(const LambdaAlgebra& alg, unsigned max_total_degree);

/// Exponent pairs of the expected subalgebra's monomials up to the cutoff.
std::vector<std::pair<unsigned, unsigned>> expected_centre_monomials(const LambdaAlgebra& alg,
                                                                     unsigned max_total_degree);

}  // namespace hhq
