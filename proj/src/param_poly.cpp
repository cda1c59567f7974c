#include "cgk/param_poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>
#include <vector>

#include "cgk/errors.hpp"

namespace cgk {

namespace {

constexpr std::array<std::string_view, kSymbolCount> kSymbolNames = {"delta", "mu", "r", "theta", "kappa"};

int degree(const ParamPoly::Exponents& e) {
    int total = 0;
    for (auto x : e) total += x;
    return total;
}

}  // namespace

std::string_view symbol_name(Symbol s) { return kSymbolNames[static_cast<std::size_t>(s)]; }

std::optional<Symbol> symbol_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
        if (kSymbolNames[i] == name) return static_cast<Symbol>(i);
    }
    return std::nullopt;
}

bool ParamPoly::GrlexLess::operator()(const Exponents& lhs, const Exponents& rhs) const {
    int dl = degree(lhs);
    int dr = degree(rhs);
    if (dl != dr) return dl < dr;
    // kappa is the most significant variable.
    for (std::size_t i = kSymbolCount; i-- > 0;) {
        if (lhs[i] != rhs[i]) return lhs[i] < rhs[i];
    }
    return false;
}

ParamPoly::ParamPoly(const Rational& c) {
    if (c != 0) add_term(Exponents{}, c);
}

ParamPoly ParamPoly::symbol(Symbol s) {
    Exponents e{};
    e[static_cast<std::size_t>(s)] = 1;
    return monomial(e, 1);
}

ParamPoly ParamPoly::monomial(const Exponents& e, const Rational& c) {
    ParamPoly p;
    p.add_term(e, c);
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree(terms_.begin()->first) == 0);
}

Rational ParamPoly::constant_term() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return degree(terms_.rbegin()->first);
}

int ParamPoly::degree_in(Symbol s) const {
    int best = 0;
    for (const auto& [e, c] : terms_) best = std::max<int>(best, e[static_cast<std::size_t>(s)]);
    return best;
}

const ParamPoly::Exponents& ParamPoly::leading_exponents() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

const Rational& ParamPoly::leading_coefficient() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

ParamPoly ParamPoly::substitute(Symbol s, const Rational& value) const {
    auto idx = static_cast<std::size_t>(s);
    ParamPoly out;
    for (const auto& [e, c] : terms_) {
        Exponents reduced = e;
        reduced[idx] = 0;
        Rational factor = 1;
        for (int k = 0; k < e[idx]; ++k) factor *= value;
        out.add_term(reduced, c * factor);
    }
    return out;
}

void ParamPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    // mpq_class(n, d) is not reduced on construction.
    if (inserted) it->second.canonicalize();
    else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& lhs, const ParamPoly& rhs) {
    ParamPoly out;
    for (const auto& [el, cl] : lhs.terms_) {
        for (const auto& [er, cr] : rhs.terms_) {
            ParamPoly::Exponents e;
            for (std::size_t i = 0; i < kSymbolCount; ++i) e[i] = static_cast<std::uint16_t>(el[i] + er[i]);
            out.add_term(e, cl * cr);
        }
    }
    return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& rhs) {
    if (rhs == 0) {
        terms_.clear();
        return *this;
    }
    Rational f = rhs;
    f.canonicalize();
    for (auto& [e, c] : terms_) c *= f;
    return *this;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (c < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        first = false;
        bool constant = degree(e) == 0;
        bool wrote = false;
        if (constant || mag != 1) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << '*';
            os << kSymbolNames[i];
            if (e[i] > 1) os << '^' << e[i];
            wrote = true;
        }
    }
    return os.str();
}

std::optional<ParamPoly> divide_exact(const ParamPoly& num, const ParamPoly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    ParamPoly quotient;
    ParamPoly rem = num;
    const auto& lead_e = den.leading_exponents();
    const auto& lead_c = den.leading_coefficient();
    while (!rem.is_zero()) {
        const auto& re = rem.leading_exponents();
        ParamPoly::Exponents qe;
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            if (re[i] < lead_e[i]) return std::nullopt;
            qe[i] = static_cast<std::uint16_t>(re[i] - lead_e[i]);
        }
        ParamPoly term = ParamPoly::monomial(qe, rem.leading_coefficient() / lead_c);
        quotient += term;
        rem -= term * den;
    }
    return quotient;
}

ParamPoly monic(const ParamPoly& p) {
    if (p.is_zero()) return p;
    Rational inv = 1 / p.leading_coefficient();
    return p * inv;
}

namespace {

// Univariate view: coefficient of var^k at index k.
using UPoly = std::vector<ParamPoly>;

UPoly to_univariate(const ParamPoly& p, Symbol var) {
    auto idx = static_cast<std::size_t>(var);
    UPoly out(static_cast<std::size_t>(p.degree_in(var)) + 1);
    for (const auto& [e, c] : p.terms()) {
        auto reduced = e;
        reduced[idx] = 0;
        out[e[idx]] += ParamPoly::monomial(reduced, c);
    }
    return out;
}

ParamPoly from_univariate(const UPoly& u, Symbol var) {
    auto idx = static_cast<std::size_t>(var);
    ParamPoly out;
    for (std::size_t k = 0; k < u.size(); ++k) {
        ParamPoly::Exponents e{};
        e[idx] = static_cast<std::uint16_t>(k);
        out += u[k] * ParamPoly::monomial(e, 1);
    }
    return out;
}

void trim(UPoly& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

ParamPoly content(const UPoly& u) {
    ParamPoly g;
    for (const auto& c : u) {
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) return ParamPoly(1);
    }
    return g;
}

UPoly divide_coefficients(const UPoly& u, const ParamPoly& c) {
    UPoly out;
    out.reserve(u.size());
    for (const auto& x : u) {
        auto q = divide_exact(x, c);
        assert(q);
        out.push_back(std::move(*q));
    }
    return out;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0), up to a nonzero factor.
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
    const ParamPoly& lb = b.back();
    const bool field = lb.is_constant();
    trim(a);
    while (!a.empty() && a.size() >= b.size()) {
        ParamPoly la = a.back();
        std::size_t shift = a.size() - b.size();
        if (field) la *= Rational(1) / lb.constant_term();
        else for (auto& x : a) x *= lb;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= la * b[k];
        trim(a);
    }
    return a;
}

// Scale so the coefficients are coprime integers; keeps the sequence small.
void numeric_primitive(UPoly& u) {
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& c : u) {
        for (const auto& [e, q] : c.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
        }
    }
    if (num_gcd == 0) return;
    Rational f(den_lcm, num_gcd);
    f.canonicalize();
    for (auto& c : u) c *= f;
}

std::optional<Symbol> main_variable(const ParamPoly& a, const ParamPoly& b) {
    for (std::size_t i = kSymbolCount; i-- > 0;) {
        auto s = static_cast<Symbol>(i);
        if (a.contains(s) || b.contains(s)) return s;
    }
    return std::nullopt;
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return ParamPoly(1);

    auto var = main_variable(a, b);
    assert(var);
    if (!a.contains(*var)) return gcd(a, content(to_univariate(b, *var)));
    if (!b.contains(*var)) return gcd(content(to_univariate(a, *var)), b);

    UPoly ua = to_univariate(a, *var);
    UPoly ub = to_univariate(b, *var);
    ParamPoly ca = content(ua);
    ParamPoly cb = content(ub);
    ua = divide_coefficients(ua, ca);
    ub = divide_coefficients(ub, cb);
    numeric_primitive(ua);
    numeric_primitive(ub);
    ParamPoly common = gcd(ca, cb);

    if (ua.size() < ub.size()) std::swap(ua, ub);
    // Primitive pseudo-remainder sequence.
    while (!ub.empty()) {
        UPoly rem = pseudo_remainder(ua, ub);
        ua = std::move(ub);
        if (rem.empty()) {
            ub.clear();
        } else {
            ub = divide_coefficients(rem, content(rem));
            numeric_primitive(ub);
        }
    }
    return monic(common * from_univariate(ua, *var));
}

}  // namespace cgk
