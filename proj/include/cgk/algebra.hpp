#ifndef CGK_ALGEBRA_HPP
#define CGK_ALGEBRA_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgk/scalar.hpp"

namespace cgk {

enum class Extension { None, Mass, Exotic };

std::string_view extension_name(Extension e);
std::optional<Extension> extension_from_name(std::string_view name);

/// Family selector. ell is stored as the integer twoEll = 2*ell.
struct AlgebraSpec {
    int d = 1;
    int twoEll = 1;
    Extension ext = Extension::Mass;

    /// Throws InvalidSpec for an inconsistent (d, twoEll, ext) triple.
    void validate() const;
    bool has_center() const { return ext != Extension::None; }
    /// Largest index of a creation-side P generator: ell - 1/2 (mass) or
    /// ell - 1 for the P^- tower of the exotic family.
    int half_floor() const { return (twoEll - 1) / 2; }
    std::string to_string() const;

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Every spec the audits sweep over, for twoEll <= max_two_ell.
std::vector<AlgebraSpec> supported_specs(int max_two_ell);

enum class GenTag { H, D, C, J, M, Theta, P };
enum class PSign { None, Plus, Minus };

struct Gen {
    GenTag tag = GenTag::H;
    int n = 0;
    PSign sign = PSign::None;

    static Gen H() { return {GenTag::H, 0, PSign::None}; }
    static Gen D() { return {GenTag::D, 0, PSign::None}; }
    static Gen C() { return {GenTag::C, 0, PSign::None}; }
    static Gen J() { return {GenTag::J, 0, PSign::None}; }
    static Gen M() { return {GenTag::M, 0, PSign::None}; }
    static Gen Theta() { return {GenTag::Theta, 0, PSign::None}; }
    static Gen P(int n, PSign s = PSign::None) { return {GenTag::P, n, s}; }

    bool is_central() const { return tag == GenTag::M || tag == GenTag::Theta; }
    /// Names like `H`, `Theta`, `P3`, `P1+`.
    std::string name() const;

    friend auto operator<=>(const Gen&, const Gen&) = default;
};

/// Parses a generator name as produced by Gen::name.
Gen parse_gen(std::string_view text);

/// Finite linear combination of generators.
class GenCombo {
public:
    GenCombo() = default;
    GenCombo(const Gen& g, const Scalar& c) { add(g, c); }

    void add(const Gen& g, const Scalar& c);
    const std::map<Gen, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GenCombo& operator+=(const GenCombo& rhs);
    GenCombo operator*(const Scalar& c) const;
    GenCombo operator-() const { return *this * Scalar(-1); }
    friend bool operator==(const GenCombo&, const GenCombo&) = default;

    std::string to_string() const;

private:
    std::map<Gen, Scalar> terms_;
};

/// Triangular-like splitting g = g+ + g0 + g-.
struct Decomposition {
    std::vector<Gen> plus;
    std::vector<Gen> zero;
    std::vector<Gen> minus;
};

struct JacobiFailure {
    Gen x, y, z;
    GenCombo value;
};

/// Structure constants of one family, generated from the closed-form
/// coefficient rules and stored as a table.
class Algebra {
public:
    /// `mass_bracket_scale` multiplies the d=2 mass central term
    /// [P^m_+-, P^n_-+] = scale * I_m * M; the adopted convention is 1.
    explicit Algebra(const AlgebraSpec& spec, const Scalar& mass_bracket_scale = Scalar(1));

    const AlgebraSpec& spec() const { return spec_; }
    /// Order: g- (C side first), then g0, then g+.
    const std::vector<Gen>& generators() const { return generators_; }
    const Decomposition& decomposition() const { return decomposition_; }
    bool contains(const Gen& g) const;
    std::optional<Gen> central() const;

    /// [x, y]; throws UnknownGenerator.
    const GenCombo& bracket(const Gen& x, const Gen& y) const;
    GenCombo bracket(const GenCombo& x, const GenCombo& y) const;

    /// Replace [x, y] (and [y, x] by antisymmetry). Test fixture hook.
    void override_bracket(const Gen& x, const Gen& y, const GenCombo& value);

    /// Every triple with a nonvanishing Jacobiator.
    std::vector<JacobiFailure> jacobi_check() const;

private:
    std::size_t index_of(const Gen& g) const;

    AlgebraSpec spec_;
    std::vector<Gen> generators_;
    Decomposition decomposition_;
    std::map<Gen, std::size_t> index_;
    std::vector<std::vector<GenCombo>> table_;
};

/// Generator list in Algebra order.
std::vector<Gen> enumerate_generators(const AlgebraSpec& spec);

/// I_m for the mass or exotic central term; throws UnsupportedFamily for
/// centerless specs.
Integer central_constant(const AlgebraSpec& spec, int m);

}  // namespace cgk

#endif  // CGK_ALGEBRA_HPP
