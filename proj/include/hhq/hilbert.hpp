#pragma once

#include <gmpxx.h>

#include <vector>

#include "hhq/report.hpp"
#include "hhq/resolution.hpp"

namespace hhq {

/// Closed-form Hilbert series for a case: constant + numerator/denominator as
/// integer polynomials (ascending coefficients, nonzero constant term in the
/// denominator).
struct SeriesSpec {
    CaseTag tag;
    long constant = 0;
    std::vector<long> numerator;
    std::vector<long> denominator;
};

SeriesSpec series_for_case(const CaseDescriptor& cd);

/// Exact power-series coefficients 0..N. Throws std::domain_error if a
/// negative coefficient appears (a mis-specified series).
std::vector<mpz_class> series_coefficients(const SeriesSpec& spec, int N);

/// Per-degree comparison of computed dimensions against the case's series.
/// The QZero degree-0 discrepancy (series constant term 1 vs the computed
/// two-dimensional centre) is annotated, not treated as a failure.
Report compare_dims(const MinimalResolution& res, int N);

}  // namespace hhq
