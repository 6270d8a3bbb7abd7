#pragma once

#include <vector>

#include "hhq/lambda.hpp"
#include "hhq/matrix.hpp"
#include "hhq/report.hpp"

namespace hhq {

/// Matrix of the Hochschild cochain differential d^n from the bar resolution,
/// Hom_k(Lambda^{(x)n}, Lambda) -> Hom_k(Lambda^{(x)(n+1)}, Lambda), sized
/// 4^{n+2} x 4^{n+1}. Cochain index: word w (letters base 4, letter t at
/// digit t) times output basis element.
ExactMatrix bar_differential_matrix(int n, const LambdaAlgebra& alg);

/// dim ker d^n - rank d^{n-1}, entirely from bar matrices. Prime-field
/// contexts take a dense mod-p elimination path; other fields use the generic
/// exact routines.
unsigned oracle_hh_dimension(int n, const LambdaAlgebra& alg);

/// Dimensions for n = 0..max_n, computing each bar rank once.
std::vector<unsigned> oracle_hh_dimensions(int max_n, const LambdaAlgebra& alg);

/// d^{n+1} o d^n = 0 for all n < nmax.
Report verify_bar_complex(int nmax, const LambdaAlgebra& alg);

}  // namespace hhq
