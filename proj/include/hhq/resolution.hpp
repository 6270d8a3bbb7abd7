#pragma once

#include <map>
#include <string>
#include <vector>

#include "hhq/lambda.hpp"
#include "hhq/matrix.hpp"
#include "hhq/report.hpp"

namespace hhq {

/// Linear combination of length-n words over the letters {x, y}; carries the
/// expansion of f^n_i inside Lambda^{(x) tensor n}. Words are strings over
/// {'x','y'}; zero coefficients are not stored.
struct WordCombination {
    int degree = 0;
    std::map<std::string, FieldScalar> coeffs;

    bool operator==(const WordCombination& o) const {
        return degree == o.degree && coeffs == o.coeffs;
    }
};

/// A map P^n -> Lambda under the identification Hom(P^n, Lambda) = Lambda^{n+1}.
struct Cochain {
    std::vector<AlgebraElement> entries;

    int degree() const { return static_cast<int>(entries.size()) - 1; }

    static Cochain zero(const FieldContextPtr& ctx, int degree);
    /// lambda_k = b, all other entries zero.
    static Cochain basis(const FieldContextPtr& ctx, int degree, unsigned k, unsigned basis_idx);

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(const FieldScalar& s) const;
    bool is_zero() const;
    bool operator==(const Cochain& o) const;
    std::string to_string() const;

    std::vector<FieldScalar> coordinates() const;
    static Cochain from_coordinates(const FieldContextPtr& ctx, int degree,
                                    const std::vector<FieldScalar>& v);
};

/// HH^n data: dimension, chosen representative cocycles and the echelonized
/// coboundary space, packaged so that cocycles reduce to basis coordinates.
struct CohomologySpace {
    int degree = 0;
    unsigned dimension = 0;
    std::vector<Cochain> representatives;
    ExactMatrix coboundary_basis;  // independent columns spanning im(delta^n)*
    ExactMatrix solve_matrix;      // [coboundary basis | representative coordinates]
};

/// The cochain complex Hom(P^*, Lambda) induced by the minimal bimodule
/// resolution (P, delta) of Lambda_q, with per-degree caches.
class MinimalResolution {
public:
    explicit MinimalResolution(LambdaAlgebra algebra);

    const LambdaAlgebra& algebra() const { return algebra_; }
    const FieldContextPtr& context() const { return algebra_.context(); }
    const FieldScalar& q() const { return algebra_.q(); }

    /// f^n_0 .. f^n_n via the recursion f^n_i = f^{n-1}_{i-1} (x) y + q^i f^{n-1}_i (x) x.
    std::vector<WordCombination> f_word_coefficients(int n) const;

    /// Matrix of eta -> eta delta^n, 4(n+1) x 4n, n >= 1.
    const ExactMatrix& delta_star_matrix(int n) const;

    /// Coordinate-free evaluation of the eta delta^n formula; an independent
    /// code path cross-checking delta_star_matrix.
    Cochain apply_delta(const Cochain& eta) const;

    bool is_cocycle(const Cochain& c) const;

    unsigned hh_dimension(int n) const;
    const CohomologySpace& hh_basis(int n) const;

    /// (delta^{n+1})* (delta^n)* = 0 for 1 <= n < nmax.
    Report verify_complex(int nmax) const;
    /// f^n_i = sum_j q^{j(n-i+j-t)} f^t_j (x) f^{n-t}_{i-j} for all t.
    Report verify_comultiplication(int nmax) const;
    /// Differential entries lie in the radical: no coefficient on the basis
    /// element 1 in any output coordinate.
    Report verify_minimality(int nmax) const;

private:
    LambdaAlgebra algebra_;
    mutable std::map<int, ExactMatrix> delta_cache_;
    mutable std::map<int, CohomologySpace> space_cache_;
};

}  // namespace hhq
