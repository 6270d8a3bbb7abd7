#pragma once

#include <array>
#include <string>
#include <vector>

#include "hhq/field.hpp"
#include "hhq/matrix.hpp"

namespace hhq {

/// Element of Lambda_q in coordinates over the normal-form basis {1, x, y, yx}.
class AlgebraElement {
public:
    static constexpr unsigned kOne = 0, kX = 1, kY = 2, kYX = 3;

    AlgebraElement() = default;
    explicit AlgebraElement(const FieldContextPtr& ctx)
        : ctx_(ctx), c_{FieldScalar::zero(ctx), FieldScalar::zero(ctx), FieldScalar::zero(ctx),
                        FieldScalar::zero(ctx)} {}

    static AlgebraElement zero(const FieldContextPtr& ctx) { return AlgebraElement(ctx); }
    static AlgebraElement basis(const FieldContextPtr& ctx, unsigned idx);
    static AlgebraElement one(const FieldContextPtr& ctx) { return basis(ctx, kOne); }
    static AlgebraElement x(const FieldContextPtr& ctx) { return basis(ctx, kX); }
    static AlgebraElement y(const FieldContextPtr& ctx) { return basis(ctx, kY); }
    static AlgebraElement yx(const FieldContextPtr& ctx) { return basis(ctx, kYX); }

    const FieldContextPtr& context() const { return ctx_; }
    const FieldScalar& coeff(unsigned idx) const { return c_[idx]; }
    FieldScalar& coeff(unsigned idx) { return c_[idx]; }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(const FieldScalar& s) const;
    AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }

    bool is_zero() const;
    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
    std::string to_string() const;

private:
    FieldContextPtr ctx_;
    std::array<FieldScalar, 4> c_;
};

enum class CaseTag { Generic, OddRoot, EvenRootOrChar2, Char2Q1, QMinusOne, QOne, QZero };

/// Which of the seven parameter regimes (field, q) falls into; r is the
/// multiplicative order of q for the root-of-unity tags.
struct CaseDescriptor {
    CaseTag tag;
    unsigned r = 0;

    std::string name() const;
    bool is_root_of_unity_case() const {
        return tag == CaseTag::OddRoot || tag == CaseTag::EvenRootOrChar2;
    }
};

/// Lambda_q = k<x,y>/(x^2, xy + q yx, y^2) with its structure constants.
class LambdaAlgebra {
public:
    LambdaAlgebra(FieldContextPtr ctx, FieldScalar q) : ctx_(std::move(ctx)), q_(std::move(q)) {}

    const FieldContextPtr& context() const { return ctx_; }
    const FieldScalar& q() const { return q_; }

    /// Basis products are monomial: basis i * basis j = coeff * basis k.
    /// Returns the product of two basis elements as an AlgebraElement.
    AlgebraElement multiply_basis(unsigned i, unsigned j) const;
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

    /// 4x4 matrices of left/right multiplication by a basis element.
    ExactMatrix left_multiplication(unsigned basis_idx) const;
    ExactMatrix right_multiplication(unsigned basis_idx) const;

    /// Basis of the centre Z(Lambda), computed as the commutant of x and y.
    std::vector<AlgebraElement> centre_basis() const;

    CaseDescriptor classify() const;

private:
    FieldContextPtr ctx_;
    FieldScalar q_;
};

}  // namespace hhq
