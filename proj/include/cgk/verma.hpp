#ifndef CGK_VERMA_HPP
#define CGK_VERMA_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgk/algebra.hpp"

namespace cgk {

/// Values for the weight symbols. A symbol mapped to itself stays symbolic.
class Params {
public:
    /// Every symbol present and symbolic.
    static Params symbolic();

    Params& set(Symbol s, const Scalar& value);
    Params& erase(Symbol s);
    bool has(Symbol s) const { return values_.count(s) != 0; }
    /// Throws MissingParameter.
    const Scalar& get(Symbol s) const;
    const std::map<Symbol, Scalar>& values() const { return values_; }

private:
    std::map<Symbol, Scalar> values_;
};

/// Symbols the lowest weight of a family depends on.
std::vector<Symbol> required_symbols(const AlgebraSpec& spec);

/// Ordered creation monomial applied to the vacuum.
///
/// Slot layout per family:
///   d=1 mass:   h = exponent of H, a[n] = exponent of P^(n), n <= ell-1/2
///   d=2 mass:   h, a[n] / b[n] = exponents of P^(n)+ / P^(n)-, n <= ell-1/2
///   d=2 exotic: h, a[n] for P^(n)+ with n <= ell, b[n] for P^(n)- with n <= ell-1
///   centerless: h = exponent of C, a[0] = exponent of P^(2)
struct PbwMonomial {
    int h = 0;
    std::vector<int> a;
    std::vector<int> b;

    int degree() const;
    bool is_vacuum() const { return degree() == 0; }
    std::string to_string() const;

    friend auto operator<=>(const PbwMonomial&, const PbwMonomial&) = default;
};

/// Finite Scalar-linear combination of basis monomials.
class ModuleVector {
public:
    ModuleVector() = default;
    ModuleVector(const PbwMonomial& m, const Scalar& c) { add(m, c); }

    void add(const PbwMonomial& m, const Scalar& c);
    const std::map<PbwMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const PbwMonomial& m) const;

    ModuleVector& operator+=(const ModuleVector& rhs);
    ModuleVector& operator-=(const ModuleVector& rhs);
    ModuleVector operator*(const Scalar& c) const;
    friend ModuleVector operator+(ModuleVector lhs, const ModuleVector& rhs) { return lhs += rhs; }
    friend ModuleVector operator-(ModuleVector lhs, const ModuleVector& rhs) { return lhs -= rhs; }
    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

    std::string to_string() const;

private:
    std::map<PbwMonomial, Scalar> terms_;
};

/// Eigenvalues of the g0 generators.
using Weight = std::map<Gen, Scalar>;

/// Selects finitely many basis monomials: by PBW degree (level), or by the
/// shift of the D eigenvalue relative to the vacuum (optionally with the
/// shift of the J eigenvalue).
struct BasisSelector {
    std::optional<int> level;
    std::optional<int> d_shift;
    std::optional<int> j_shift;
};

/// Lowest weight Verma module over one family.
///
/// `act` is the reference engine: it only uses the bracket table and the
/// lowest weight conditions, rewriting X * (Y * w) = Y * (X * w) + [X, Y] * w
/// until X reaches the vacuum. Results are memoized, so a VermaModule must
/// not be shared between threads.
class VermaModule {
public:
    /// Throws MissingParameter when `params` lacks one of the family's symbols.
    VermaModule(Algebra algebra, Params params);
    VermaModule(const AlgebraSpec& spec, Params params) : VermaModule(Algebra(spec), std::move(params)) {}

    const Algebra& algebra() const { return algebra_; }
    const AlgebraSpec& spec() const { return algebra_.spec(); }
    const Params& params() const { return params_; }
    /// Creation generators in basis order (leftmost factor first).
    const std::vector<Gen>& creation_order() const { return creation_; }

    PbwMonomial vacuum_monomial() const;
    ModuleVector vacuum() const { return ModuleVector(vacuum_monomial(), 1); }
    /// Eigenvalues of g0 on the vacuum.
    const Weight& lowest_weight() const { return lowest_weight_; }

    /// Monomial with the given exponents in creation order.
    PbwMonomial monomial(const std::vector<int>& exponents) const;
    std::vector<int> exponents(const PbwMonomial& m) const;

    ModuleVector act(const Gen& x, const PbwMonomial& m) const;
    ModuleVector act(const Gen& x, const ModuleVector& v) const;
    ModuleVector act(const GenCombo& x, const ModuleVector& v) const;

    /// Closed-form action for the d=2 families; throws UnsupportedFamily for d=1.
    ModuleVector act_closed_form(const Gen& x, const PbwMonomial& m) const;

    /// Eigenvalue shift of D (resp. J) produced by one factor of a generator.
    int d_grade(const Gen& g) const;
    int j_charge(const Gen& g) const;

    Weight weight_of(const PbwMonomial& m) const;

    /// Deterministically ordered basis monomials; throws InfiniteSelection
    /// when the selector does not bound the exponents.
    std::vector<PbwMonomial> level_basis(const BasisSelector& selector) const;

private:
    using Flat = std::vector<int>;

    ModuleVector act_flat(std::size_t gen_pos, const Flat& m) const;
    std::size_t gen_index(const Gen& g) const;

    Algebra algebra_;
    Params params_;
    std::vector<Gen> creation_;
    Weight lowest_weight_;
    std::vector<int> creation_pos_;  // per algebra generator, -1 if not creation
    std::vector<int> role_;          // -1 g-, 0 g0, +1 g+
    mutable std::map<std::pair<std::size_t, Flat>, ModuleVector> cache_;
};

}  // namespace cgk

#endif  // CGK_VERMA_HPP
