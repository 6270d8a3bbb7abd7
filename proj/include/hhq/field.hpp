#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace hhq {

enum class FieldKind { Rationals, Prime, Cyclotomic };

class FieldContext;
using FieldContextPtr = std::shared_ptr<const FieldContext>;

/// An exact coefficient field: Q, F_p (p prime) or the cyclotomic field
/// Q(zeta_r), the latter represented as Q[t]/(Phi_r).
class FieldContext {
public:
    static FieldContextPtr rationals();
    static FieldContextPtr prime_field(std::uint64_t p);
    static FieldContextPtr cyclotomic(unsigned r);

    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return kind_ == FieldKind::Prime ? p_ : 0; }
    std::uint64_t prime() const;
    unsigned root_order() const;
    /// Phi_r, monic with integer coefficients, ascending degree.
    const std::vector<mpz_class>& modulus() const;
    unsigned degree() const { return degree_; }
    std::string describe() const;

private:
    FieldContext() = default;
    FieldKind kind_ = FieldKind::Rationals;
    std::uint64_t p_ = 0;
    unsigned r_ = 0;
    unsigned degree_ = 1;
    std::vector<mpz_class> modulus_;
};

/// Phi_r computed by dividing t^r - 1 by the cyclotomic polynomials of the
/// proper divisors of r.
std::vector<mpz_class> cyclotomic_polynomial(unsigned r);

class FieldScalar {
public:
    FieldScalar() = default;

    static FieldScalar zero(const FieldContextPtr& ctx);
    static FieldScalar one(const FieldContextPtr& ctx);
    static FieldScalar from_int(const FieldContextPtr& ctx, long n);
    static FieldScalar from_fraction(const FieldContextPtr& ctx, long num, long den);
    /// The class of t in Q(zeta_r); the canonical primitive root.
    static FieldScalar zeta(const FieldContextPtr& ctx);

    const FieldContextPtr& context() const { return ctx_; }
    bool is_zero() const;
    bool is_one() const;

    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator/(const FieldScalar& o) const;
    FieldScalar operator-() const;
    FieldScalar inverse() const;
    FieldScalar pow(long e) const;

    FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
    FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
    FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    std::string to_string() const;

    /// Prime-field residue in [0, p).
    std::uint64_t residue() const;
    const mpq_class& rational() const;
    /// Cyclotomic coefficient vector, length = context degree.
    const std::vector<mpq_class>& coefficients() const;

private:
    void check_same_context(const FieldScalar& o) const;

    FieldContextPtr ctx_;
    std::variant<mpq_class, std::uint64_t, std::vector<mpq_class>> rep_ = mpq_class(0);
};

enum class OrderKind { Zero, Finite, Infinite };

struct MultOrder {
    OrderKind kind = OrderKind::Infinite;
    unsigned long value = 0;  // set when kind == Finite

    bool is_finite(unsigned long m) const { return kind == OrderKind::Finite && value == m; }
};

/// Least m >= 1 with q^m = 1, when q is a root of unity. Torsion bounds:
/// exponent 2 over Q, lcm(2, r) over Q(zeta_r), p - 1 over F_p.
MultOrder mult_order(const FieldScalar& q);

}  // namespace hhq
