#include "cgk/scalar.hpp"

#include <cassert>
#include <sstream>

#include "cgk/errors.hpp"

namespace cgk {

Scalar Scalar::fraction(const ParamPoly& num, const ParamPoly& den) {
    if (den.is_zero()) throw DivisionByZero("division by zero scalar");
    Scalar s(num, den, false);
    s.canonicalize();
    return s;
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    if (den_.is_constant()) {
        num_ *= Rational(1) / den_.constant_term();
        den_ = ParamPoly(1);
        return;
    }
    ParamPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
    }
    Rational lead = den_.leading_coefficient();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
    if (den_.is_constant()) den_ = ParamPoly(1);
}

Rational Scalar::constant_value() const {
    assert(is_constant());
    return num_.constant_term();
}

Scalar Scalar::substitute(Symbol s, const Rational& value) const {
    return fraction(num_.substitute(s, value), den_.substitute(s, value));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (rhs.is_zero()) return *this;
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
        if (!den_.is_constant()) canonicalize();
        else if (num_.is_zero()) den_ = ParamPoly(1);
        return *this;
    }
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    num_ *= rhs.num_;
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return *this;
    }
    if (den_.is_constant() && rhs.den_.is_constant()) return *this;
    den_ *= rhs.den_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("division by zero scalar");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    canonicalize();
    return *this;
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, true); }

namespace {

bool single_monomial(const ParamPoly& p) { return p.terms().size() == 1; }

Rational denominator_lcm(const ParamPoly& p) {
    Integer l = 1;
    for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return Rational(l);
}

}  // namespace

std::string Scalar::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    // Clear rational coefficients of the numerator for display.
    Rational scale = denominator_lcm(num_);
    ParamPoly n = num_ * scale;
    ParamPoly d = den_ * scale;
    std::ostringstream os;
    if (single_monomial(n)) os << n.to_string();
    else os << '(' << n.to_string() << ')';
    os << '/';
    bool bare = single_monomial(d) && d.leading_coefficient() == 1;
    if (bare) os << d.to_string();
    else os << '(' << d.to_string() << ')';
    return os.str();
}

namespace {

std::string latex_poly(const ParamPoly& p) {
    static constexpr std::array<std::string_view, kSymbolCount> names = {"\\delta", "\\mu", "r", "\\theta",
                                                                         "\\kappa"};
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (c < 0) os << '-';
        else if (!first) os << '+';
        first = false;
        bool constant = true;
        for (auto x : e) constant = constant && x == 0;
        if (constant || mag != 1) {
            if (mag.get_den() == 1) os << mag.get_num().get_str();
            else os << "\\frac{" << mag.get_num().get_str() << "}{" << mag.get_den().get_str() << "}";
        }
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            if (e[i] == 0) continue;
            os << names[i];
            if (e[i] > 1) os << "^{" << e[i] << "}";
            os << ' ';
        }
    }
    std::string s = os.str();
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

std::string Scalar::to_latex() const {
    if (den_.is_constant()) return latex_poly(num_);
    return "\\frac{" + latex_poly(num_) + "}{" + latex_poly(den_) + "}";
}

Scalar pow(const Scalar& base, int exponent) {
    if (exponent < 0) return pow(Scalar(1) / base, -exponent);
    Scalar out(1);
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

Integer factorial(int n) {
    assert(n >= 0);
    Integer out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace cgk
