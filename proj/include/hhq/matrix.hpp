#pragma once

#include <optional>
#include <vector>

#include "hhq/field.hpp"

namespace hhq {

/// Dense row-major matrix over an exact field.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(const FieldContextPtr& ctx, unsigned rows, unsigned cols)
        : ctx_(ctx), rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * cols, FieldScalar::zero(ctx)) {}

    static ExactMatrix identity(const FieldContextPtr& ctx, unsigned n);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    const FieldContextPtr& context() const { return ctx_; }

    FieldScalar& at(unsigned i, unsigned j) { return entries_[std::size_t(i) * cols_ + j]; }
    const FieldScalar& at(unsigned i, unsigned j) const {
        return entries_[std::size_t(i) * cols_ + j];
    }

    std::vector<FieldScalar> column(unsigned j) const;
    void set_column(unsigned j, const std::vector<FieldScalar>& v);
    ExactMatrix transpose() const;
    /// Columns of a followed by columns of b (same row count).
    static ExactMatrix hcat(const ExactMatrix& a, const ExactMatrix& b);
    static ExactMatrix from_columns(const FieldContextPtr& ctx, unsigned rows,
                                    const std::vector<std::vector<FieldScalar>>& cols);

    bool is_zero() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    std::vector<FieldScalar> apply(const std::vector<FieldScalar>& v) const;
    bool operator==(const ExactMatrix& o) const;

private:
    FieldContextPtr ctx_;
    unsigned rows_ = 0, cols_ = 0;
    std::vector<FieldScalar> entries_;
};

unsigned rank(const ExactMatrix& m);
/// Reduced row echelon form (pivot 1, pivot columns cleared).
ExactMatrix rref(const ExactMatrix& m);
/// Independent vectors spanning the null space, from the rref free columns.
std::vector<std::vector<FieldScalar>> kernel_basis(const ExactMatrix& m);
/// Coordinates of v over the columns of m, or nullopt when v is outside the
/// column span. Free columns get coordinate zero.
std::optional<std::vector<FieldScalar>> solve_in_span(const ExactMatrix& m,
                                                      const std::vector<FieldScalar>& v);
/// Indices of an independent spanning subset of the columns.
std::vector<unsigned> pivot_columns(const ExactMatrix& m);

}  // namespace hhq
