#include "hhq/resolution.hpp"

#include <sstream>
#include <stdexcept>

namespace hhq {

Cochain Cochain::zero(const FieldContextPtr& ctx, int degree) {
    Cochain c;
    c.entries.assign(degree + 1, AlgebraElement::zero(ctx));
    return c;
}

Cochain Cochain::basis(const FieldContextPtr& ctx, int degree, unsigned k, unsigned basis_idx) {
    Cochain c = zero(ctx, degree);
    c.entries[k] = AlgebraElement::basis(ctx, basis_idx);
    return c;
}

Cochain Cochain::operator+(const Cochain& o) const {
    Cochain c = *this;
    for (std::size_t i = 0; i < entries.size(); ++i) c.entries[i] += o.entries[i];
    return c;
}

Cochain Cochain::operator-(const Cochain& o) const {
    Cochain c = *this;
    for (std::size_t i = 0; i < entries.size(); ++i)
        c.entries[i] = c.entries[i] - o.entries[i];
    return c;
}

Cochain Cochain::scaled(const FieldScalar& s) const {
    Cochain c = *this;
    for (auto& e : c.entries) e = e.scaled(s);
    return c;
}

bool Cochain::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

bool Cochain::operator==(const Cochain& o) const { return entries == o.entries; }

std::string Cochain::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ", ";
        out << entries[i].to_string();
    }
    out << ")";
    return out.str();
}

std::vector<FieldScalar> Cochain::coordinates() const {
    std::vector<FieldScalar> v;
    v.reserve(entries.size() * 4);
    for (const auto& e : entries)
        for (unsigned i = 0; i < 4; ++i) v.push_back(e.coeff(i));
    return v;
}

Cochain Cochain::from_coordinates(const FieldContextPtr& ctx, int degree,
                                  const std::vector<FieldScalar>& v) {
    if (v.size() != static_cast<std::size_t>(4 * (degree + 1)))
        throw std::invalid_argument("cochain coordinate length mismatch");
    Cochain c = zero(ctx, degree);
    for (int k = 0; k <= degree; ++k)
        for (unsigned i = 0; i < 4; ++i) c.entries[k].coeff(i) = v[4 * k + i];
    return c;
}

MinimalResolution::MinimalResolution(LambdaAlgebra algebra) : algebra_(std::move(algebra)) {}

std::vector<WordCombination> MinimalResolution::f_word_coefficients(int n) const {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    const FieldContextPtr& ctx = context();
    std::vector<WordCombination> prev(1);
    prev[0].degree = 0;
    prev[0].coeffs[""] = FieldScalar::one(ctx);
    for (int m = 1; m <= n; ++m) {
        std::vector<WordCombination> cur(m + 1);
        for (int i = 0; i <= m; ++i) {
            cur[i].degree = m;
            if (i - 1 >= 0)
                for (const auto& [w, c] : prev[i - 1].coeffs) cur[i].coeffs[w + "y"] = c;
            if (i <= m - 1) {
                FieldScalar qi = q().pow(i);
                if (!qi.is_zero())
                    for (const auto& [w, c] : prev[i].coeffs) {
                        FieldScalar v = c * qi;
                        if (!v.is_zero()) cur[i].coeffs[w + "x"] = v;
                    }
            }
        }
        prev = std::move(cur);
    }
    return prev;
}

const ExactMatrix& MinimalResolution::delta_star_matrix(int n) const {
    if (n < 1) throw std::invalid_argument("delta* needs n >= 1");
    auto it = delta_cache_.find(n);
    if (it != delta_cache_.end()) return it->second;

    const FieldContextPtr& ctx = context();
    ExactMatrix m(ctx, 4 * (n + 1), 4 * n);
    FieldScalar sign = FieldScalar::from_int(ctx, n % 2 == 0 ? 1 : -1);
    ExactMatrix lx = algebra_.left_multiplication(AlgebraElement::kX);
    ExactMatrix rx = algebra_.right_multiplication(AlgebraElement::kX);
    ExactMatrix ly = algebra_.left_multiplication(AlgebraElement::kY);
    ExactMatrix ry = algebra_.right_multiplication(AlgebraElement::kY);

    // output coordinate j = x l_j + q^{n-j} y l_{j-1} + (-1)^n l_{j-1} y + (-1)^n q^j l_j x
    for (int j = 0; j <= n; ++j) {
        if (j <= n - 1) {  // input block k = j
            FieldScalar sq = sign * q().pow(j);
            for (unsigned a = 0; a < 4; ++a)
                for (unsigned b = 0; b < 4; ++b)
                    m.at(4 * j + a, 4 * j + b) = lx.at(a, b) + sq * rx.at(a, b);
        }
        if (j >= 1) {  // input block k = j - 1
            FieldScalar qp = q().pow(n - j);
            for (unsigned a = 0; a < 4; ++a)
                for (unsigned b = 0; b < 4; ++b)
                    m.at(4 * j + a, 4 * (j - 1) + b) = qp * ly.at(a, b) + sign * ry.at(a, b);
        }
    }
    return delta_cache_.emplace(n, std::move(m)).first->second;
}

Cochain MinimalResolution::apply_delta(const Cochain& eta) const {
    const FieldContextPtr& ctx = context();
    int n = eta.degree() + 1;
    FieldScalar sign = FieldScalar::from_int(ctx, n % 2 == 0 ? 1 : -1);
    AlgebraElement x = AlgebraElement::x(ctx), y = AlgebraElement::y(ctx);
    Cochain out = Cochain::zero(ctx, n);
    for (int j = 0; j <= n; ++j) {
        AlgebraElement v = AlgebraElement::zero(ctx);
        if (j <= n - 1) {
            const AlgebraElement& lj = eta.entries[j];
            v += algebra_.multiply(x, lj);
            v += algebra_.multiply(lj, x).scaled(sign * q().pow(j));
        }
        if (j >= 1) {
            const AlgebraElement& ljm1 = eta.entries[j - 1];
            v += algebra_.multiply(y, ljm1).scaled(q().pow(n - j));
            v += algebra_.multiply(ljm1, y).scaled(sign);
        }
        out.entries[j] = v;
    }
    return out;
}

bool MinimalResolution::is_cocycle(const Cochain& c) const { return apply_delta(c).is_zero(); }

unsigned MinimalResolution::hh_dimension(int n) const {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    unsigned ker = 4 * (n + 1) - rank(delta_star_matrix(n + 1));
    if (n == 0) return ker;
    return ker - rank(delta_star_matrix(n));
}

const CohomologySpace& MinimalResolution::hh_basis(int n) const {
    auto it = space_cache_.find(n);
    if (it != space_cache_.end()) return it->second;

    const FieldContextPtr& ctx = context();
    const unsigned dim_total = 4 * (n + 1);

    std::vector<std::vector<FieldScalar>> cobound_cols;
    if (n >= 1) {
        const ExactMatrix& d = delta_star_matrix(n);
        for (unsigned p : pivot_columns(d)) cobound_cols.push_back(d.column(p));
    }
    const unsigned hh_dim = hh_dimension(n);

    // Prefer the standard coordinate maps (e_k times a basis element)
    // as representatives; complete with echelon kernel vectors if needed.
    std::vector<std::vector<FieldScalar>> chosen = cobound_cols;
    std::vector<Cochain> reps;
    auto try_candidate = [&](const std::vector<FieldScalar>& v) {
        if (reps.size() == hh_dim) return;
        for (const auto& e : delta_star_matrix(n + 1).apply(v))
            if (!e.is_zero()) return;  // not a cocycle
        auto probe = chosen;
        probe.push_back(v);
        if (rank(ExactMatrix::from_columns(ctx, dim_total, probe)) != probe.size()) return;
        chosen.push_back(v);
        reps.push_back(Cochain::from_coordinates(ctx, n, v));
    };
    for (int k = 0; k <= n && reps.size() < hh_dim; ++k)
        for (unsigned bi = 0; bi < 4 && reps.size() < hh_dim; ++bi)
            try_candidate(Cochain::basis(ctx, n, k, bi).coordinates());
    if (reps.size() < hh_dim)
        for (const auto& v : kernel_basis(delta_star_matrix(n + 1))) {
            if (reps.size() == hh_dim) break;
            try_candidate(v);
        }
    if (reps.size() != hh_dim) throw std::logic_error("failed to complete cohomology basis");

    CohomologySpace space;
    space.degree = n;
    space.dimension = hh_dim;
    space.representatives = reps;
    space.coboundary_basis = ExactMatrix::from_columns(ctx, dim_total, cobound_cols);
    std::vector<std::vector<FieldScalar>> all = cobound_cols;
    for (const auto& r : reps) all.push_back(r.coordinates());
    space.solve_matrix = ExactMatrix::from_columns(ctx, dim_total, all);
    return space_cache_.emplace(n, std::move(space)).first->second;
}

Report MinimalResolution::verify_complex(int nmax) const {
    Report rep;
    for (int n = 1; n < nmax; ++n) {
        ExactMatrix comp = delta_star_matrix(n + 1) * delta_star_matrix(n);
        rep.record("delta*(" + std::to_string(n + 1) + ") o delta*(" + std::to_string(n) + ") = 0",
                   comp.is_zero(), comp.is_zero() ? "" : "nonzero composite");
    }
    return rep;
}

namespace {

WordCombination tensor(const WordCombination& a, const WordCombination& b) {
    WordCombination out;
    out.degree = a.degree + b.degree;
    for (const auto& [wa, ca] : a.coeffs)
        for (const auto& [wb, cb] : b.coeffs) {
            FieldScalar v = ca * cb;
            if (v.is_zero()) continue;
            auto [it, inserted] = out.coeffs.emplace(wa + wb, v);
            if (!inserted) {
                it->second += v;
                if (it->second.is_zero()) out.coeffs.erase(it);
            }
        }
    return out;
}

}  // namespace

Report MinimalResolution::verify_comultiplication(int nmax) const {
    Report rep;
    std::vector<std::vector<WordCombination>> f(nmax + 1);
    for (int n = 0; n <= nmax; ++n) f[n] = f_word_coefficients(n);
    for (int n = 1; n <= nmax; ++n) {
        bool ok = true;
        std::string detail;
        for (int t = 0; t <= n && ok; ++t)
            for (int i = 0; i <= n && ok; ++i) {
                WordCombination rhs;
                rhs.degree = n;
                for (int j = std::max(0, i + t - n); j <= std::min(t, i); ++j) {
                    FieldScalar c = q().pow(static_cast<long>(j) * (n - i + j - t));
                    WordCombination term = tensor(f[t][j], f[n - t][i - j]);
                    for (const auto& [w, tc] : term.coeffs) {
                        FieldScalar v = tc * c;
                        if (v.is_zero()) continue;
                        auto [it2, ins] = rhs.coeffs.emplace(w, v);
                        if (!ins) {
                            it2->second += v;
                            if (it2->second.is_zero()) rhs.coeffs.erase(it2);
                        }
                    }
                }
                if (!(rhs == f[n][i])) {
                    ok = false;
                    detail = "mismatch at n=" + std::to_string(n) + " t=" + std::to_string(t) +
                             " i=" + std::to_string(i);
                }
            }
        rep.record("comultiplication identity, degree " + std::to_string(n), ok, detail);
    }
    return rep;
}

Report MinimalResolution::verify_minimality(int nmax) const {
    Report rep;
    for (int n = 1; n <= nmax; ++n) {
        const ExactMatrix& d = delta_star_matrix(n);
        bool ok = true;
        for (int j = 0; j <= n && ok; ++j)
            for (unsigned col = 0; col < d.cols() && ok; ++col)
                if (!d.at(4 * j + AlgebraElement::kOne, col).is_zero()) ok = false;
        rep.record("delta*(" + std::to_string(n) + ") entries in the radical", ok,
                   ok ? "" : "unit component present");
    }
    return rep;
}

}  // namespace hhq
