#include "hhq/matrix.hpp"

#include <stdexcept>

namespace hhq {

ExactMatrix ExactMatrix::identity(const FieldContextPtr& ctx, unsigned n) {
    ExactMatrix m(ctx, n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = FieldScalar::one(ctx);
    return m;
}

std::vector<FieldScalar> ExactMatrix::column(unsigned j) const {
    std::vector<FieldScalar> v;
    v.reserve(rows_);
    for (unsigned i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

void ExactMatrix::set_column(unsigned j, const std::vector<FieldScalar>& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (unsigned i = 0; i < rows_; ++i) at(i, j) = v[i];
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(ctx_, cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::hcat(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
    ExactMatrix m(a.context(), a.rows(), a.cols() + b.cols());
    for (unsigned i = 0; i < a.rows(); ++i) {
        for (unsigned j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (unsigned j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

ExactMatrix ExactMatrix::from_columns(const FieldContextPtr& ctx, unsigned rows,
                                      const std::vector<std::vector<FieldScalar>>& cols) {
    ExactMatrix m(ctx, rows, static_cast<unsigned>(cols.size()));
    for (unsigned j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    ExactMatrix m(ctx_, rows_, o.cols());
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (unsigned j = 0; j < o.cols(); ++j)
                m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

std::vector<FieldScalar> ExactMatrix::apply(const std::vector<FieldScalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply dimension mismatch");
    std::vector<FieldScalar> out(rows_, FieldScalar::zero(ctx_));
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] += at(i, j) * v[j];
        }
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

namespace {

struct Echelon {
    ExactMatrix r;
    std::vector<unsigned> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan with first-nonzero pivoting.
Echelon echelon_form(ExactMatrix m) {
    Echelon e{m, {}};
    ExactMatrix& r = e.r;
    unsigned row = 0;
    for (unsigned col = 0; col < r.cols() && row < r.rows(); ++col) {
        unsigned piv = row;
        while (piv < r.rows() && r.at(piv, col).is_zero()) ++piv;
        if (piv == r.rows()) continue;
        if (piv != row)
            for (unsigned j = col; j < r.cols(); ++j) std::swap(r.at(row, j), r.at(piv, j));
        FieldScalar inv = r.at(row, col).inverse();
        for (unsigned j = col; j < r.cols(); ++j) r.at(row, j) *= inv;
        for (unsigned i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            FieldScalar f = r.at(i, col);
            for (unsigned j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

unsigned rank(const ExactMatrix& m) {
    return static_cast<unsigned>(echelon_form(m).pivots.size());
}

ExactMatrix rref(const ExactMatrix& m) { return echelon_form(m).r; }

std::vector<unsigned> pivot_columns(const ExactMatrix& m) { return echelon_form(m).pivots; }

std::vector<std::vector<FieldScalar>> kernel_basis(const ExactMatrix& m) {
    Echelon e = echelon_form(m);
    const FieldContextPtr& ctx = m.context();
    std::vector<bool> is_pivot(m.cols(), false);
    for (unsigned p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<FieldScalar>> basis;
    for (unsigned free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldScalar> v(m.cols(), FieldScalar::zero(ctx));
        v[free] = FieldScalar::one(ctx);
        for (unsigned row = 0; row < e.pivots.size(); ++row)
            v[e.pivots[row]] = -e.r.at(row, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FieldScalar>> solve_in_span(const ExactMatrix& m,
                                                      const std::vector<FieldScalar>& v) {
    if (v.size() != m.rows()) throw std::invalid_argument("solve dimension mismatch");
    ExactMatrix aug(m.context(), m.rows(), m.cols() + 1);
    for (unsigned i = 0; i < m.rows(); ++i) {
        for (unsigned j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = v[i];
    }
    Echelon e = echelon_form(std::move(aug));
    std::vector<FieldScalar> x(m.cols(), FieldScalar::zero(m.context()));
    for (unsigned row = 0; row < e.pivots.size(); ++row) {
        if (e.pivots[row] == m.cols()) return std::nullopt;  // pivot in the rhs column
        x[e.pivots[row]] = e.r.at(row, m.cols());
    }
    return x;
}

}  // namespace hhq
