#include "hhq/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hhq {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("division by zero in F_p");
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

// Exact division of integer polynomials, both ascending; divisor monic.
std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num,
                                         const std::vector<mpz_class>& den) {
    if (num.size() < den.size()) throw std::logic_error("polynomial division underflow");
    std::vector<mpz_class> quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpz_class c = num[i + den.size() - 1];
        quot[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("polynomial division not exact");
    return quot;
}

// Rational polynomial helpers for Q[t] (ascending coefficients).
using QPoly = std::vector<mpq_class>;

void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}

// a mod b, b nonzero.
QPoly qp_rem(QPoly a, const QPoly& b) {
    qp_trim(a);
    while (a.size() >= b.size()) {
        mpq_class c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        qp_trim(a);
    }
    return a;
}

// Extended Euclid in Q[t]: returns u with u*a = gcd (mod m); requires
// gcd(a, m) constant, which holds for a nonzero of degree < deg m, m = Phi_r.
QPoly qp_inverse_mod(const QPoly& a, const QPoly& m) {
    QPoly r0 = m, r1 = a, s0 = {}, s1 = {mpq_class(1)};
    qp_trim(r1);
    if (r1.empty()) throw std::domain_error("division by zero in cyclotomic field");
    while (!r1.empty() && r1.size() > 1) {
        // quotient of r0 by r1
        QPoly q;
        QPoly rem = r0;
        qp_trim(rem);
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, mpq_class(0));
            while (rem.size() >= r1.size()) {
                mpq_class c = rem.back() / r1.back();
                std::size_t shift = rem.size() - r1.size();
                q[shift] = c;
                for (std::size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
                qp_trim(rem);
            }
        }
        QPoly r2 = rem;
        QPoly s2 = qp_sub(s0, qp_mul(q, s1));
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(r2);
        s1 = std::move(s2);
    }
    if (r1.empty()) {
        // gcd = r0, must be constant for an invertible element
        if (r0.size() != 1) throw std::domain_error("non-invertible cyclotomic element");
        QPoly out = s0;
        for (auto& c : out) c /= r0[0];
        return qp_rem(out, m);
    }
    QPoly out = s1;
    for (auto& c : out) c /= r1[0];
    return qp_rem(out, m);
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(unsigned r) {
    if (r == 0) throw std::invalid_argument("cyclotomic order must be positive");
    std::vector<mpz_class> num(r + 1, 0);
    num[0] = -1;
    num[r] = 1;  // t^r - 1
    for (unsigned d = 1; d < r; ++d) {
        if (r % d != 0) continue;
        num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

FieldContextPtr FieldContext::rationals() {
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->kind_ = FieldKind::Rationals;
    return ctx;
}

FieldContextPtr FieldContext::prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("prime field order must be prime");
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->kind_ = FieldKind::Prime;
    ctx->p_ = p;
    return ctx;
}

FieldContextPtr FieldContext::cyclotomic(unsigned r) {
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->kind_ = FieldKind::Cyclotomic;
    ctx->r_ = r;
    ctx->modulus_ = cyclotomic_polynomial(r);
    ctx->degree_ = static_cast<unsigned>(ctx->modulus_.size() - 1);
    return ctx;
}

std::uint64_t FieldContext::prime() const {
    if (kind_ != FieldKind::Prime) throw std::logic_error("not a prime field");
    return p_;
}

unsigned FieldContext::root_order() const {
    if (kind_ != FieldKind::Cyclotomic) throw std::logic_error("not a cyclotomic field");
    return r_;
}

const std::vector<mpz_class>& FieldContext::modulus() const {
    if (kind_ != FieldKind::Cyclotomic) throw std::logic_error("not a cyclotomic field");
    return modulus_;
}

std::string FieldContext::describe() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::Prime: return "F" + std::to_string(p_);
        case FieldKind::Cyclotomic: return "Q(zeta" + std::to_string(r_) + ")";
    }
    return "?";
}

FieldScalar FieldScalar::zero(const FieldContextPtr& ctx) { return from_int(ctx, 0); }

FieldScalar FieldScalar::one(const FieldContextPtr& ctx) { return from_int(ctx, 1); }

FieldScalar FieldScalar::from_int(const FieldContextPtr& ctx, long n) {
    FieldScalar s;
    s.ctx_ = ctx;
    switch (ctx->kind()) {
        case FieldKind::Rationals:
            s.rep_ = mpq_class(n);
            break;
        case FieldKind::Prime: {
            std::int64_t m = n % static_cast<std::int64_t>(ctx->prime());
            if (m < 0) m += static_cast<std::int64_t>(ctx->prime());
            s.rep_ = static_cast<std::uint64_t>(m);
            break;
        }
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> c(ctx->degree(), mpq_class(0));
            c[0] = n;
            s.rep_ = std::move(c);
            break;
        }
    }
    return s;
}

FieldScalar FieldScalar::from_fraction(const FieldContextPtr& ctx, long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return from_int(ctx, num) / from_int(ctx, den);
}

FieldScalar FieldScalar::zeta(const FieldContextPtr& ctx) {
    if (ctx->kind() != FieldKind::Cyclotomic)
        throw std::logic_error("zeta requires a cyclotomic context");
    FieldScalar s;
    s.ctx_ = ctx;
    std::vector<mpq_class> c(ctx->degree(), mpq_class(0));
    if (ctx->degree() == 1) {
        // r = 1 or 2: Phi_r is linear, zeta = root of t -/+ 1.
        c[0] = -mpq_class(ctx->modulus()[0]);
    } else {
        c[1] = 1;
    }
    s.rep_ = std::move(c);
    return s;
}

void FieldScalar::check_same_context(const FieldScalar& o) const {
    if (!ctx_ || !o.ctx_ || ctx_->kind() != o.ctx_->kind())
        throw std::invalid_argument("field context mismatch");
    if (ctx_ == o.ctx_) return;
    if (ctx_->kind() == FieldKind::Prime && ctx_->prime() == o.ctx_->prime()) return;
    if (ctx_->kind() == FieldKind::Cyclotomic && ctx_->root_order() == o.ctx_->root_order()) return;
    if (ctx_->kind() == FieldKind::Rationals) return;
    throw std::invalid_argument("field context mismatch");
}

bool FieldScalar::is_zero() const {
    switch (ctx_->kind()) {
        case FieldKind::Rationals: return std::get<mpq_class>(rep_) == 0;
        case FieldKind::Prime: return std::get<std::uint64_t>(rep_) == 0;
        case FieldKind::Cyclotomic: {
            for (const auto& c : std::get<std::vector<mpq_class>>(rep_))
                if (c != 0) return false;
            return true;
        }
    }
    return false;
}

bool FieldScalar::is_one() const { return *this == one(ctx_); }

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    check_same_context(o);
    FieldScalar s;
    s.ctx_ = ctx_;
    switch (ctx_->kind()) {
        case FieldKind::Rationals:
            s.rep_ = mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(o.rep_));
            break;
        case FieldKind::Prime: {
            std::uint64_t v = std::get<std::uint64_t>(rep_) + std::get<std::uint64_t>(o.rep_);
            if (v >= ctx_->prime()) v -= ctx_->prime();
            s.rep_ = v;
            break;
        }
        case FieldKind::Cyclotomic: {
            auto c = std::get<std::vector<mpq_class>>(rep_);
            const auto& d = std::get<std::vector<mpq_class>>(o.rep_);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
            s.rep_ = std::move(c);
            break;
        }
    }
    return s;
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar s;
    s.ctx_ = ctx_;
    switch (ctx_->kind()) {
        case FieldKind::Rationals:
            s.rep_ = mpq_class(-std::get<mpq_class>(rep_));
            break;
        case FieldKind::Prime: {
            std::uint64_t v = std::get<std::uint64_t>(rep_);
            s.rep_ = v == 0 ? v : ctx_->prime() - v;
            break;
        }
        case FieldKind::Cyclotomic: {
            auto c = std::get<std::vector<mpq_class>>(rep_);
            for (auto& x : c) x = -x;
            s.rep_ = std::move(c);
            break;
        }
    }
    return s;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const { return *this + (-o); }

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    check_same_context(o);
    FieldScalar s;
    s.ctx_ = ctx_;
    switch (ctx_->kind()) {
        case FieldKind::Rationals:
            s.rep_ = mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_));
            break;
        case FieldKind::Prime:
            s.rep_ = mulmod(std::get<std::uint64_t>(rep_), std::get<std::uint64_t>(o.rep_),
                            ctx_->prime());
            break;
        case FieldKind::Cyclotomic: {
            const auto& a = std::get<std::vector<mpq_class>>(rep_);
            const auto& b = std::get<std::vector<mpq_class>>(o.rep_);
            std::vector<mpq_class> prod(2 * ctx_->degree(), mpq_class(0));
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 0) continue;
                for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
            }
            // reduce mod Phi_r (monic)
            const auto& m = ctx_->modulus();
            for (std::size_t i = prod.size(); i-- >= m.size();) {
                if (prod[i] == 0) continue;
                mpq_class c = prod[i];
                for (std::size_t j = 0; j < m.size(); ++j)
                    prod[i - m.size() + 1 + j] -= c * mpq_class(m[j]);
            }
            prod.resize(ctx_->degree());
            s.rep_ = std::move(prod);
            break;
        }
    }
    return s;
}

FieldScalar FieldScalar::inverse() const {
    FieldScalar s;
    s.ctx_ = ctx_;
    switch (ctx_->kind()) {
        case FieldKind::Rationals: {
            const auto& a = std::get<mpq_class>(rep_);
            if (a == 0) throw std::domain_error("division by zero");
            s.rep_ = mpq_class(1 / a);
            break;
        }
        case FieldKind::Prime:
            s.rep_ = invmod(std::get<std::uint64_t>(rep_), ctx_->prime());
            break;
        case FieldKind::Cyclotomic: {
            QPoly m(ctx_->modulus().size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ctx_->modulus()[i];
            QPoly inv = qp_inverse_mod(std::get<std::vector<mpq_class>>(rep_), m);
            inv.resize(ctx_->degree(), mpq_class(0));
            s.rep_ = std::move(inv);
            break;
        }
    }
    return s;
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const { return *this * o.inverse(); }

FieldScalar FieldScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldScalar base = *this;
    FieldScalar acc = one(ctx_);
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    check_same_context(o);
    return rep_ == o.rep_;
}

std::uint64_t FieldScalar::residue() const { return std::get<std::uint64_t>(rep_); }

const mpq_class& FieldScalar::rational() const { return std::get<mpq_class>(rep_); }

const std::vector<mpq_class>& FieldScalar::coefficients() const {
    return std::get<std::vector<mpq_class>>(rep_);
}

std::string FieldScalar::to_string() const {
    switch (ctx_->kind()) {
        case FieldKind::Rationals:
            return std::get<mpq_class>(rep_).get_str();
        case FieldKind::Prime:
            return std::to_string(std::get<std::uint64_t>(rep_));
        case FieldKind::Cyclotomic: {
            const auto& c = std::get<std::vector<mpq_class>>(rep_);
            std::ostringstream out;
            bool first = true;
            for (std::size_t i = c.size(); i-- > 0;) {
                if (c[i] == 0) continue;
                mpq_class v = c[i];
                if (!first) {
                    out << (v < 0 ? " - " : " + ");
                    if (v < 0) v = -v;
                } else if (v < 0 && i > 0) {
                    out << "-";
                    v = -v;
                }
                first = false;
                if (i == 0) {
                    out << v.get_str();
                } else {
                    if (v != 1) out << v.get_str() << "*";
                    out << "zeta";
                    if (i > 1) out << "^" << i;
                }
            }
            if (first) out << "0";
            return out.str();
        }
    }
    return "?";
}

MultOrder mult_order(const FieldScalar& q) {
    if (q.is_zero()) return {OrderKind::Zero, 0};
    const FieldContextPtr& ctx = q.context();
    unsigned long bound = 2;
    switch (ctx->kind()) {
        case FieldKind::Rationals: bound = 2; break;
        case FieldKind::Prime: bound = ctx->prime() - 1; break;
        case FieldKind::Cyclotomic: bound = std::lcm<unsigned long>(2, ctx->root_order()); break;
    }
    FieldScalar acc = q;
    for (unsigned long m = 1; m <= bound; ++m) {
        if (acc.is_one()) return {OrderKind::Finite, m};
        acc *= q;
    }
    return {OrderKind::Infinite, 0};
}

}  // namespace hhq
