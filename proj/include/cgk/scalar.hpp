#ifndef CGK_SCALAR_HPP
#define CGK_SCALAR_HPP

#include <string>

#include "cgk/param_poly.hpp"

namespace cgk {

/// Exact element of Q(delta, mu, r, theta, kappa).
///
/// Always stored in lowest terms with a monic denominator, so two Scalars
/// are equal iff their numerators and denominators are identical.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    Scalar(long c) : Scalar(Rational(c)) {}          // NOLINT(google-explicit-constructor)
    Scalar(int c) : Scalar(Rational(c)) {}           // NOLINT(google-explicit-constructor)
    Scalar(const ParamPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)

    static Scalar symbol(Symbol s) { return Scalar(ParamPoly::symbol(s)); }
    /// Canonical form of num/den; throws DivisionByZero when den is zero.
    static Scalar fraction(const ParamPoly& num, const ParamPoly& den);

    const ParamPoly& numerator() const { return num_; }
    const ParamPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value of a constant Scalar.
    Rational constant_value() const;

    Scalar substitute(Symbol s, const Rational& value) const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    Scalar operator-() const;

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }

    /// ASCII rendering accepted back by parse_scalar, e.g. `(2*delta+1)/mu`.
    std::string to_string() const;
    std::string to_latex() const;

private:
    Scalar(ParamPoly num, ParamPoly den, bool /*canonical*/) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    ParamPoly num_;
    ParamPoly den_;
};

/// Integer exponent power.
Scalar pow(const Scalar& base, int exponent);

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace cgk

#endif  // CGK_SCALAR_HPP
