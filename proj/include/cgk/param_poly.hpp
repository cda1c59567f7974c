#ifndef CGK_PARAM_POLY_HPP
#define CGK_PARAM_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cgk {

using Rational = mpq_class;
using Integer = mpz_class;

/// Weight parameters. Declaration order is the variable order of the
/// monomial ordering: delta < mu < r < theta < kappa.
enum class Symbol : std::uint8_t { Delta, Mu, R, Theta, Kappa };
inline constexpr std::size_t kSymbolCount = 5;

std::string_view symbol_name(Symbol s);
std::optional<Symbol> symbol_from_name(std::string_view name);

/// Sparse polynomial in the weight parameters with rational coefficients.
///
/// Terms are kept in graded lexicographic order and never hold a zero
/// coefficient, so structural equality is mathematical equality.
class ParamPoly {
public:
    using Exponents = std::array<std::uint16_t, kSymbolCount>;

    struct GrlexLess {
        bool operator()(const Exponents& lhs, const Exponents& rhs) const;
    };
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    ParamPoly() = default;
    ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    ParamPoly(int c) : ParamPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

    static ParamPoly symbol(Symbol s);
    static ParamPoly monomial(const Exponents& e, const Rational& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Rational constant_term() const;
    int total_degree() const;
    int degree_in(Symbol s) const;
    bool contains(Symbol s) const { return degree_in(s) > 0; }

    /// Largest term under grlex. Requires a nonzero polynomial.
    const Exponents& leading_exponents() const;
    const Rational& leading_coefficient() const;

    /// Substitute a rational value for one symbol.
    ParamPoly substitute(Symbol s, const Rational& value) const;

    ParamPoly& operator+=(const ParamPoly& rhs);
    ParamPoly& operator-=(const ParamPoly& rhs);
    ParamPoly& operator*=(const ParamPoly& rhs);
    ParamPoly& operator*=(const Rational& rhs);
    ParamPoly operator-() const;

    friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { return lhs += rhs; }
    friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { return lhs -= rhs; }
    friend ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs);
    friend ParamPoly operator*(ParamPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend bool operator==(const ParamPoly& lhs, const ParamPoly& rhs) { return lhs.terms_ == rhs.terms_; }

    /// ASCII rendering, e.g. `2*delta+1` or `-1/2*mu^2`.
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rational& c);

    TermMap terms_;
};

/// Exact quotient `num / den` when `den` divides `num` in Q[params].
std::optional<ParamPoly> divide_exact(const ParamPoly& num, const ParamPoly& den);

/// Monic (grlex leading coefficient 1) greatest common divisor.
/// gcd(0, 0) is 0.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

/// Scale to leading coefficient 1; zero stays zero.
ParamPoly monic(const ParamPoly& p);

}  // namespace cgk

#endif  // CGK_PARAM_POLY_HPP
