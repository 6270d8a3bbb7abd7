#include "hhq/lambda.hpp"

#include <sstream>
#include <stdexcept>

namespace hhq {

AlgebraElement AlgebraElement::basis(const FieldContextPtr& ctx, unsigned idx) {
    AlgebraElement e(ctx);
    e.c_[idx] = FieldScalar::one(ctx);
    return e;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement e(ctx_);
    for (unsigned i = 0; i < 4; ++i) e.c_[i] = c_[i] + o.c_[i];
    return e;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement e(ctx_);
    for (unsigned i = 0; i < 4; ++i) e.c_[i] = c_[i] - o.c_[i];
    return e;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement e(ctx_);
    for (unsigned i = 0; i < 4; ++i) e.c_[i] = -c_[i];
    return e;
}

AlgebraElement AlgebraElement::scaled(const FieldScalar& s) const {
    AlgebraElement e(ctx_);
    for (unsigned i = 0; i < 4; ++i) e.c_[i] = c_[i] * s;
    return e;
}

bool AlgebraElement::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    for (unsigned i = 0; i < 4; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string AlgebraElement::to_string() const {
    static const char* names[4] = {"1", "x", "y", "yx"};
    std::ostringstream out;
    bool first = true;
    for (unsigned i = 0; i < 4; ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        if (c_[i].is_one() && i != 0)
            out << names[i];
        else if (i == 0)
            out << c_[i].to_string();
        else
            out << "(" << c_[i].to_string() << ")*" << names[i];
    }
    if (first) out << "0";
    return out.str();
}

std::string CaseDescriptor::name() const {
    switch (tag) {
        case CaseTag::Generic: return "Generic";
        case CaseTag::OddRoot: return "OddRoot(r=" + std::to_string(r) + ")";
        case CaseTag::EvenRootOrChar2: return "EvenRootOrChar2(r=" + std::to_string(r) + ")";
        case CaseTag::Char2Q1: return "Char2Q1";
        case CaseTag::QMinusOne: return "QMinusOne";
        case CaseTag::QOne: return "QOne";
        case CaseTag::QZero: return "QZero";
    }
    return "?";
}

AlgebraElement LambdaAlgebra::multiply_basis(unsigned i, unsigned j) const {
    AlgebraElement out(ctx_);
    const unsigned kOne = AlgebraElement::kOne, kX = AlgebraElement::kX,
                   kY = AlgebraElement::kY, kYX = AlgebraElement::kYX;
    if (i == kOne) {
        out.coeff(j) = FieldScalar::one(ctx_);
    } else if (j == kOne) {
        out.coeff(i) = FieldScalar::one(ctx_);
    } else if (i == kX && j == kY) {
        out.coeff(kYX) = -q_;  // x*y = -q*yx from xy + q*yx = 0
    } else if (i == kY && j == kX) {
        out.coeff(kYX) = FieldScalar::one(ctx_);
    }
    // every other product of non-unit basis elements is zero
    return out;
}

AlgebraElement LambdaAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    if (a.context()->kind() != ctx_->kind() || b.context()->kind() != ctx_->kind())
        throw std::invalid_argument("algebra element context mismatch");
    AlgebraElement out(ctx_);
    for (unsigned i = 0; i < 4; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (unsigned j = 0; j < 4; ++j) {
            if (b.coeff(j).is_zero()) continue;
            out += multiply_basis(i, j).scaled(a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

ExactMatrix LambdaAlgebra::left_multiplication(unsigned basis_idx) const {
    ExactMatrix m(ctx_, 4, 4);
    for (unsigned j = 0; j < 4; ++j) {
        AlgebraElement prod = multiply_basis(basis_idx, j);
        for (unsigned i = 0; i < 4; ++i) m.at(i, j) = prod.coeff(i);
    }
    return m;
}

ExactMatrix LambdaAlgebra::right_multiplication(unsigned basis_idx) const {
    ExactMatrix m(ctx_, 4, 4);
    for (unsigned j = 0; j < 4; ++j) {
        AlgebraElement prod = multiply_basis(j, basis_idx);
        for (unsigned i = 0; i < 4; ++i) m.at(i, j) = prod.coeff(i);
    }
    return m;
}

std::vector<AlgebraElement> LambdaAlgebra::centre_basis() const {
    // commutant of the generators: stack [L_x - R_x; L_y - R_y]
    ExactMatrix comm(ctx_, 8, 4);
    for (unsigned g = 1; g <= 2; ++g) {  // basis indices of x and y
        ExactMatrix l = left_multiplication(g);
        ExactMatrix r = right_multiplication(g);
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = 0; j < 4; ++j) comm.at((g - 1) * 4 + i, j) = l.at(i, j) - r.at(i, j);
    }
    std::vector<AlgebraElement> basis;
    for (const auto& v : kernel_basis(comm)) {
        AlgebraElement e(ctx_);
        for (unsigned i = 0; i < 4; ++i) e.coeff(i) = v[i];
        basis.push_back(std::move(e));
    }
    return basis;
}

CaseDescriptor LambdaAlgebra::classify() const {
    MultOrder ord = mult_order(q_);
    switch (ord.kind) {
        case OrderKind::Zero: return {CaseTag::QZero};
        case OrderKind::Infinite: return {CaseTag::Generic};
        case OrderKind::Finite: break;
    }
    bool char2 = ctx_->characteristic() == 2;
    unsigned r = static_cast<unsigned>(ord.value);
    if (r == 1) return char2 ? CaseDescriptor{CaseTag::Char2Q1} : CaseDescriptor{CaseTag::QOne};
    if (r == 2) return {CaseTag::QMinusOne, 2};
    if (!char2 && r % 2 == 1) return {CaseTag::OddRoot, r};
    return {CaseTag::EvenRootOrChar2, r};
}

}  // namespace hhq
