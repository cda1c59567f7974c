#ifndef CGK_DIFFOP_HPP
#define CGK_DIFFOP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgk/scalar.hpp"

namespace cgk {

/// Variable set {t, x0..x(nx-1), y0..y(ny-1)}; index 0 is t.
struct VarLayout {
    int nx = 0;
    int ny = 0;

    int size() const { return 1 + nx + ny; }
    std::string name(int index) const;
    /// Index of `t`, `x3`, `y0`, ...; nullopt if not in this layout.
    std::optional<int> index_of(std::string_view name) const;
    int t() const { return 0; }
    int x(int n) const { return 1 + n; }
    int y(int n) const { return 1 + nx + n; }
    friend bool operator==(const VarLayout&, const VarLayout&) = default;
};

/// Exponent (or derivative order) per layout variable.
using MultiIndex = std::vector<int>;

/// Polynomial in the layout variables with Scalar coefficients.
class CoefPoly {
public:
    explicit CoefPoly(VarLayout layout = {}) : layout_(layout) {}
    CoefPoly(VarLayout layout, const Scalar& c);
    static CoefPoly variable(VarLayout layout, int index, int power = 1);

    const VarLayout& layout() const { return layout_; }
    const std::map<MultiIndex, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Constant in the variables (its Scalar may still carry parameters).
    bool is_scalar() const;
    Scalar scalar_part() const;
    int degree() const;
    void add(const MultiIndex& e, const Scalar& c);

    CoefPoly& operator+=(const CoefPoly& rhs);
    CoefPoly& operator-=(const CoefPoly& rhs);
    CoefPoly operator-() const;
    friend CoefPoly operator+(CoefPoly lhs, const CoefPoly& rhs) { return lhs += rhs; }
    friend CoefPoly operator-(CoefPoly lhs, const CoefPoly& rhs) { return lhs -= rhs; }
    friend CoefPoly operator*(const CoefPoly& lhs, const CoefPoly& rhs);
    friend CoefPoly operator*(CoefPoly lhs, const Scalar& c);
    friend bool operator==(const CoefPoly&, const CoefPoly&) = default;

    /// d^orders applied termwise.
    CoefPoly differentiate(const MultiIndex& orders) const;
    CoefPoly substitute(Symbol s, const Rational& value) const;

    std::string to_string() const;
    std::string to_latex() const;

private:
    VarLayout layout_;
    std::map<MultiIndex, Scalar> terms_;
};

/// Linear differential operator sum_beta c_beta(vars) d^beta, coefficients
/// always to the left.
class DiffOp {
public:
    explicit DiffOp(VarLayout layout = {}) : layout_(layout) {}
    DiffOp(VarLayout layout, const Scalar& c);
    explicit DiffOp(const CoefPoly& c);
    static DiffOp partial(VarLayout layout, int index, int order = 1);

    const VarLayout& layout() const { return layout_; }
    const std::map<MultiIndex, CoefPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const;
    /// Coefficient of d^beta (zero polynomial if absent).
    CoefPoly coefficient(const MultiIndex& beta) const;
    void add(const MultiIndex& beta, const CoefPoly& c);

    DiffOp& operator+=(const DiffOp& rhs);
    DiffOp& operator-=(const DiffOp& rhs);
    DiffOp operator-() const;
    friend DiffOp operator+(DiffOp lhs, const DiffOp& rhs) { return lhs += rhs; }
    friend DiffOp operator-(DiffOp lhs, const DiffOp& rhs) { return lhs -= rhs; }
    /// Composition; throws VariableMismatch.
    friend DiffOp operator*(const DiffOp& lhs, const DiffOp& rhs);
    friend DiffOp operator*(DiffOp lhs, const Scalar& c);
    friend bool operator==(const DiffOp&, const DiffOp&) = default;

    DiffOp substitute(Symbol s, const Rational& value) const;

    /// Text in the operator grammar, e.g. `2*mu*d/dt + (d/dx0)^2`.
    std::string to_string() const;
    std::string to_latex() const;

private:
    VarLayout layout_;
    std::map<MultiIndex, CoefPoly> terms_;
};

DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);
DiffOp power(const DiffOp& a, int exponent);
/// Action on a polynomial; throws VariableMismatch.
CoefPoly apply(const DiffOp& a, const CoefPoly& p);

/// Parses the operator grammar over `layout`. Throws ParseError.
DiffOp parse_diffop(std::string_view text, const VarLayout& layout);
/// Order-zero operator text, e.g. a coefficient polynomial.
CoefPoly parse_coefpoly(std::string_view text, const VarLayout& layout);
/// Parameter expression such as `(2*delta+1)/mu`. Throws ParseError.
Scalar parse_scalar(std::string_view text);

}  // namespace cgk

#endif  // CGK_DIFFOP_HPP
