#pragma once

#include <string>
#include <vector>

#include "hhq/resolution.hpp"

namespace hhq {

/// Cup product of two cocycles via the closed formula on the minimal
/// resolution: (eta * theta)(f^{m+n}_i) = sum_j q^{j(n-i+j)} l_j l'_{i-j}.
/// Throws if either input fails the cocycle check.
Cochain cup(const MinimalResolution& res, const Cochain& eta, const Cochain& theta);

/// Coordinates of a cocycle over the chosen HH^n basis, after quotienting by
/// the echelonized coboundary space. Zero iff the cocycle is a coboundary.
std::vector<FieldScalar> reduce_to_basis(const MinimalResolution& res, const Cochain& c);

bool reduces_to_zero(const MinimalResolution& res, const Cochain& c);

struct PresentationGenerator {
    std::string name;
    Cochain rep;
};

/// The named generators for the case of res (z, u_i, w_i, or the degree-0
/// algebra classes), with their standard representative cochains.
std::vector<PresentationGenerator> presentation_generators(const MinimalResolution& res);

/// Checks the case's ring presentation: relations reduce to zero and
/// generator monomials span HH^n for every n <= degree_cap. Relation
/// failures are reported with the offending reduced coordinates.
Report verify_presentation(const MinimalResolution& res, int degree_cap);

/// Reduced coordinates of all pairwise generator products with total degree
/// <= degree_cap, as (label, coordinate string) rows for reporting.
std::vector<std::pair<std::string, std::string>> product_table(const MinimalResolution& res,
                                                               int degree_cap);

}  // namespace hhq
