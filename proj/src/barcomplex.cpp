#include "hhq/barcomplex.hpp"

#include <cstdint>
#include <stdexcept>

namespace hhq {

namespace {

struct BasisProd {
    int basis;  // -1 when the product is zero
    int sign;
    int qpow;
};

// basis order 1, x, y, yx; x*y = -q*yx, y*x = yx, other non-unit products zero
constexpr BasisProd kNoProd{-1, 0, 0};
constexpr BasisProd kProd[4][4] = {
    {{0, 1, 0}, {1, 1, 0}, {2, 1, 0}, {3, 1, 0}},
    {{1, 1, 0}, kNoProd, {3, -1, 1}, kNoProd},
    {{2, 1, 0}, {3, 1, 0}, kNoProd, kNoProd},
    {{3, 1, 0}, kNoProd, kNoProd, kNoProd},
};

std::size_t pow4(int e) { return std::size_t(1) << (2 * e); }

// Emits every nonzero contribution of the degree-n Hochschild cochain
// differential as (row, col, sign, qpow); entries may repeat and accumulate.
template <class Sink>
void for_each_bar_entry(int n, Sink&& sink) {
    const std::size_t words = pow4(n);
    const int right_sign = (n + 1) % 2 == 0 ? 1 : -1;
    std::vector<int> u(n);
    for (std::size_t uidx = 0; uidx < words; ++uidx) {
        for (int t = 0; t < n; ++t) u[t] = static_cast<int>((uidx >> (2 * t)) & 3);
        for (int b = 0; b < 4; ++b) {
            const std::size_t col = uidx * 4 + b;
            for (int a = 0; a < 4; ++a) {
                const BasisProd left = kProd[a][b];
                if (left.basis >= 0)
                    sink((4 * uidx + a) * 4 + left.basis, col, left.sign, left.qpow);
                const BasisProd right = kProd[b][a];
                if (right.basis >= 0)
                    sink((uidx + a * words) * 4 + right.basis, col, right_sign * right.sign,
                         right.qpow);
            }
            for (int i = 1; i <= n; ++i) {
                const int inner_sign = i % 2 == 0 ? 1 : -1;
                const std::size_t low = uidx & (pow4(i - 1) - 1);
                const std::size_t rest = uidx >> (2 * i);
                for (int s = 0; s < 4; ++s)
                    for (int t = 0; t < 4; ++t) {
                        const BasisProd p = kProd[s][t];
                        if (p.basis != u[i - 1]) continue;
                        const std::size_t widx = low + (std::size_t(s) << (2 * (i - 1))) +
                                                 (std::size_t(t) << (2 * i)) +
                                                 (rest << (2 * (i + 1)));
                        sink(widx * 4 + b, col, inner_sign * p.sign, p.qpow);
                    }
            }
        }
    }
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t quot = r / newr;
        std::swap(t -= quot * newt, newt);
        std::swap(r -= quot * newr, newr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

unsigned dense_rank_modp(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                         std::uint64_t p) {
    unsigned rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(a[piv * cols + j], a[rank * cols + j]);
        const std::uint64_t inv = invmod(a[rank * cols + col], p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::uint64_t v = a[i * cols + col];
            if (v == 0) continue;
            const std::uint64_t f = p - mulmod(v, inv, p);  // row_i += f * row_rank
            const std::uint64_t* src = &a[rank * cols];
            std::uint64_t* dst = &a[i * cols];
            for (std::size_t j = col; j < cols; ++j) {
                if (src[j] == 0) continue;
                dst[j] = (dst[j] + mulmod(f, src[j], p)) % p;
            }
        }
        ++rank;
    }
    return rank;
}

unsigned bar_rank_modp(int n, std::uint64_t p, std::uint64_t qres) {
    const std::size_t rows = pow4(n + 2), cols = pow4(n + 1);
    std::vector<std::uint64_t> a(rows * cols, 0);
    for_each_bar_entry(n, [&](std::size_t row, std::size_t col, int sign, int qpow) {
        std::uint64_t v = qpow ? qres : 1;
        if (sign < 0) v = v == 0 ? 0 : p - v;
        a[row * cols + col] = (a[row * cols + col] + v) % p;
    });
    return dense_rank_modp(a, rows, cols, p);
}

unsigned bar_rank(int n, const LambdaAlgebra& alg) {
    if (alg.context()->kind() == FieldKind::Prime)
        return bar_rank_modp(n, alg.context()->prime(), alg.q().residue());
    return rank(bar_differential_matrix(n, alg));
}

}  // namespace

ExactMatrix bar_differential_matrix(int n, const LambdaAlgebra& alg) {
    if (n < 0) throw std::invalid_argument("degree must be nonnegative");
    const FieldContextPtr& ctx = alg.context();
    ExactMatrix m(ctx, static_cast<unsigned>(pow4(n + 2)), static_cast<unsigned>(pow4(n + 1)));
    const FieldScalar one = FieldScalar::one(ctx);
    const FieldScalar vals[2][2] = {{one, alg.q()}, {-one, -alg.q()}};
    for_each_bar_entry(n, [&](std::size_t row, std::size_t col, int sign, int qpow) {
        m.at(static_cast<unsigned>(row), static_cast<unsigned>(col)) +=
            vals[sign < 0 ? 1 : 0][qpow];
    });
    return m;
}

unsigned oracle_hh_dimension(int n, const LambdaAlgebra& alg) {
    unsigned ker = static_cast<unsigned>(pow4(n + 1)) - bar_rank(n, alg);
    if (n == 0) return ker;
    return ker - bar_rank(n - 1, alg);
}

std::vector<unsigned> oracle_hh_dimensions(int max_n, const LambdaAlgebra& alg) {
    std::vector<unsigned> ranks(max_n + 1);
    for (int n = 0; n <= max_n; ++n) ranks[n] = bar_rank(n, alg);
    std::vector<unsigned> dims(max_n + 1);
    for (int n = 0; n <= max_n; ++n)
        dims[n] = static_cast<unsigned>(pow4(n + 1)) - ranks[n] - (n > 0 ? ranks[n - 1] : 0);
    return dims;
}

Report verify_bar_complex(int nmax, const LambdaAlgebra& alg) {
    Report rep;
    ExactMatrix prev = bar_differential_matrix(0, alg);
    for (int n = 0; n < nmax; ++n) {
        ExactMatrix next = bar_differential_matrix(n + 1, alg);
        bool ok = (next * prev).is_zero();
        rep.record("d^" + std::to_string(n + 1) + " o d^" + std::to_string(n) + " = 0", ok);
        prev = std::move(next);
    }
    return rep;
}

}  // namespace hhq
