#include "cgk/algebra.hpp"

#include <sstream>

#include "cgk/errors.hpp"

namespace cgk {

std::string_view extension_name(Extension e) {
    switch (e) {
        case Extension::None: return "none";
        case Extension::Mass: return "mass";
        case Extension::Exotic: return "exotic";
    }
    return "?";
}

std::optional<Extension> extension_from_name(std::string_view name) {
    if (name == "none") return Extension::None;
    if (name == "mass") return Extension::Mass;
    if (name == "exotic") return Extension::Exotic;
    return std::nullopt;
}

void AlgebraSpec::validate() const {
    std::ostringstream why;
    if (d != 1 && d != 2) why << "d must be 1 or 2";
    else if (twoEll < 1) why << "two-ell must be positive";
    else if (ext == Extension::Mass && twoEll % 2 == 0) why << "mass extension needs half-integer ell (odd two-ell)";
    else if (ext == Extension::Exotic && (d != 2 || twoEll % 2 != 0))
        why << "exotic extension needs d = 2 and integer ell (even two-ell)";
    else if (ext == Extension::None && (d != 1 || twoEll != 2))
        why << "the centerless family is only supported for (d, two-ell) = (1, 2)";
    if (!why.str().empty()) throw InvalidSpec(why.str() + " (got " + to_string() + ")");
}

std::string AlgebraSpec::to_string() const {
    std::ostringstream os;
    os << "d=" << d << " two-ell=" << twoEll << " ext=" << extension_name(ext);
    return os.str();
}

std::vector<AlgebraSpec> supported_specs(int max_two_ell) {
    std::vector<AlgebraSpec> out;
    for (int n = 1; n <= max_two_ell; n += 2) {
        out.push_back({1, n, Extension::Mass});
        out.push_back({2, n, Extension::Mass});
    }
    for (int n = 2; n <= max_two_ell; n += 2) out.push_back({2, n, Extension::Exotic});
    if (max_two_ell >= 2) out.push_back({1, 2, Extension::None});
    return out;
}

std::string Gen::name() const {
    switch (tag) {
        case GenTag::H: return "H";
        case GenTag::D: return "D";
        case GenTag::C: return "C";
        case GenTag::J: return "J";
        case GenTag::M: return "M";
        case GenTag::Theta: return "Theta";
        case GenTag::P: break;
    }
    std::string s = "P" + std::to_string(n);
    if (sign == PSign::Plus) s += '+';
    if (sign == PSign::Minus) s += '-';
    return s;
}

Gen parse_gen(std::string_view text) {
    if (text == "H") return Gen::H();
    if (text == "D") return Gen::D();
    if (text == "C") return Gen::C();
    if (text == "J") return Gen::J();
    if (text == "M") return Gen::M();
    if (text == "Theta") return Gen::Theta();
    if (text.size() >= 2 && text[0] == 'P') {
        PSign sign = PSign::None;
        std::string_view digits = text.substr(1);
        if (digits.back() == '+' || digits.back() == '-') {
            sign = digits.back() == '+' ? PSign::Plus : PSign::Minus;
            digits.remove_suffix(1);
        }
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string_view::npos) {
            return Gen::P(std::stoi(std::string(digits)), sign);
        }
    }
    throw UnknownGenerator("cannot parse generator '" + std::string(text) + "'");
}

void GenCombo::add(const Gen& g, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GenCombo& GenCombo::operator+=(const GenCombo& rhs) {
    for (const auto& [g, c] : rhs.terms_) add(g, c);
    return *this;
}

GenCombo GenCombo::operator*(const Scalar& c) const {
    GenCombo out;
    for (const auto& [g, x] : terms_) out.add(g, x * c);
    return out;
}

std::string GenCombo::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c == Scalar(1)) os << g.name();
        else os << '(' << c.to_string() << ")*" << g.name();
    }
    return os.str();
}

Integer central_constant(const AlgebraSpec& spec, int m) {
    if (!spec.has_center()) throw UnsupportedFamily("central constant requested for a centerless family");
    if (m < 0 || m > spec.twoEll) throw InvalidSpec("central constant index out of range");
    Integer magnitude = factorial(spec.twoEll - m) * factorial(m);
    int sign_exponent = spec.ext == Extension::Mass ? m + (spec.twoEll + 1) / 2 : m;
    return sign_exponent % 2 == 0 ? magnitude : Integer(-magnitude);
}

namespace {

Decomposition make_decomposition(const AlgebraSpec& spec) {
    Decomposition dec;
    const int top = spec.twoEll;
    switch (spec.ext) {
        case Extension::Mass: {
            const int half = spec.half_floor();
            dec.minus.push_back(Gen::C());
            dec.zero.push_back(Gen::D());
            if (spec.d == 2) dec.zero.push_back(Gen::J());
            dec.zero.push_back(Gen::M());
            dec.plus.push_back(Gen::H());
            for (int n = 0; n <= top; ++n) {
                auto& side = n <= half ? dec.plus : dec.minus;
                if (spec.d == 1) {
                    side.push_back(Gen::P(n));
                } else {
                    side.push_back(Gen::P(n, PSign::Plus));
                    side.push_back(Gen::P(n, PSign::Minus));
                }
            }
            break;
        }
        case Extension::Exotic: {
            const int ell = top / 2;
            dec.minus = {Gen::C(), Gen::P(ell, PSign::Minus)};
            dec.zero = {Gen::D(), Gen::J(), Gen::Theta()};
            dec.plus = {Gen::H(), Gen::P(ell, PSign::Plus)};
            for (int n = 0; n < ell; ++n) {
                dec.plus.push_back(Gen::P(n, PSign::Plus));
                dec.plus.push_back(Gen::P(n, PSign::Minus));
            }
            for (int n = ell + 1; n <= top; ++n) {
                dec.minus.push_back(Gen::P(n, PSign::Plus));
                dec.minus.push_back(Gen::P(n, PSign::Minus));
            }
            break;
        }
        case Extension::None:
            // H and P0 annihilate the lowest weight vector; C and P2 create.
            dec.minus = {Gen::H(), Gen::P(0)};
            dec.zero = {Gen::D(), Gen::P(1)};
            dec.plus = {Gen::C(), Gen::P(2)};
            break;
    }
    return dec;
}

// Bracket rule for an ordered pair, when one is defined in that orientation.
std::optional<GenCombo> bracket_rule(const AlgebraSpec& spec, const Scalar& mass_scale, const Gen& x,
                                     const Gen& y) {
    if (x == y || x.is_central() || y.is_central()) return GenCombo{};
    const int top = spec.twoEll;
    if (x.tag == GenTag::D && y.tag == GenTag::H) return GenCombo(Gen::H(), 2);
    if (x.tag == GenTag::D && y.tag == GenTag::C) return GenCombo(Gen::C(), -2);
    if (x.tag == GenTag::C && y.tag == GenTag::H) return GenCombo(Gen::D(), 1);
    if (x.tag == GenTag::J && y.tag != GenTag::P) return GenCombo{};
    if (y.tag != GenTag::P) return std::nullopt;

    const int n = y.n;
    switch (x.tag) {
        case GenTag::H:
            if (n == 0) return GenCombo{};
            return GenCombo(Gen::P(n - 1, y.sign), -n);
        case GenTag::D: return GenCombo(y, top - 2 * n);
        case GenTag::C:
            if (n == top) return GenCombo{};
            return GenCombo(Gen::P(n + 1, y.sign), top - n);
        case GenTag::J: return GenCombo(y, y.sign == PSign::Plus ? 1 : -1);
        case GenTag::P: break;
        default: return std::nullopt;
    }

    const int m = x.n;
    if (m + n != top || !spec.has_center()) return GenCombo{};
    Scalar im(Rational(central_constant(spec, m)));
    if (spec.ext == Extension::Mass) {
        if (spec.d == 1) return GenCombo(Gen::M(), im);
        if (x.sign == y.sign) return GenCombo{};
        return GenCombo(Gen::M(), im * mass_scale);
    }
    if (x.sign == y.sign) return GenCombo{};
    return GenCombo(Gen::Theta(), x.sign == PSign::Plus ? im : -im);
}

}  // namespace

std::vector<Gen> enumerate_generators(const AlgebraSpec& spec) {
    spec.validate();
    auto dec = make_decomposition(spec);
    std::vector<Gen> out = dec.minus;
    out.insert(out.end(), dec.zero.begin(), dec.zero.end());
    out.insert(out.end(), dec.plus.begin(), dec.plus.end());
    return out;
}

Algebra::Algebra(const AlgebraSpec& spec, const Scalar& mass_bracket_scale)
    : spec_(spec), generators_(enumerate_generators(spec)), decomposition_(make_decomposition(spec)) {
    for (std::size_t i = 0; i < generators_.size(); ++i) index_[generators_[i]] = i;
    const std::size_t n = generators_.size();
    table_.assign(n, std::vector<GenCombo>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Gen& x = generators_[i];
            const Gen& y = generators_[j];
            if (auto r = bracket_rule(spec_, mass_bracket_scale, x, y)) {
                table_[i][j] = *r;
            } else if (auto s = bracket_rule(spec_, mass_bracket_scale, y, x)) {
                table_[i][j] = -*s;
            }
        }
    }
}

bool Algebra::contains(const Gen& g) const { return index_.count(g) != 0; }

std::optional<Gen> Algebra::central() const {
    if (spec_.ext == Extension::Mass) return Gen::M();
    if (spec_.ext == Extension::Exotic) return Gen::Theta();
    return std::nullopt;
}

std::size_t Algebra::index_of(const Gen& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) throw UnknownGenerator(g.name() + " is not a generator of " + spec_.to_string());
    return it->second;
}

const GenCombo& Algebra::bracket(const Gen& x, const Gen& y) const { return table_[index_of(x)][index_of(y)]; }

GenCombo Algebra::bracket(const GenCombo& x, const GenCombo& y) const {
    GenCombo out;
    for (const auto& [gx, cx] : x.terms()) {
        for (const auto& [gy, cy] : y.terms()) out += bracket(gx, gy) * (cx * cy);
    }
    return out;
}

void Algebra::override_bracket(const Gen& x, const Gen& y, const GenCombo& value) {
    table_[index_of(x)][index_of(y)] = value;
    table_[index_of(y)][index_of(x)] = -value;
}

std::vector<JacobiFailure> Algebra::jacobi_check() const {
    std::vector<JacobiFailure> failures;
    const std::size_t n = generators_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                GenCombo gx(generators_[i], 1), gy(generators_[j], 1), gz(generators_[k], 1);
                GenCombo sum = bracket(bracket(gx, gy), gz);
                sum += bracket(bracket(gy, gz), gx);
                sum += bracket(bracket(gz, gx), gy);
                if (!sum.is_zero()) failures.push_back({generators_[i], generators_[j], generators_[k], sum});
            }
        }
    }
    return failures;
}

}  // namespace cgk
