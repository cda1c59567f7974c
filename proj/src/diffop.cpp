#include "cgk/diffop.hpp"

#include <functional>
#include <sstream>

#include "cgk/errors.hpp"

namespace cgk {

std::string VarLayout::name(int index) const {
    if (index == 0) return "t";
    if (index <= nx) return "x" + std::to_string(index - 1);
    return "y" + std::to_string(index - 1 - nx);
}

std::optional<int> VarLayout::index_of(std::string_view name) const {
    if (name == "t") return 0;
    if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) return std::nullopt;
    int n = 0;
    for (char ch : name.substr(1)) {
        if (ch < '0' || ch > '9') return std::nullopt;
        n = n * 10 + (ch - '0');
        if (n > 10000) return std::nullopt;
    }
    if (name.size() > 2 && name[1] == '0') return std::nullopt;
    if (name[0] == 'x') return n < nx ? std::optional<int>(x(n)) : std::nullopt;
    return n < ny ? std::optional<int>(y(n)) : std::nullopt;
}

namespace {

void require_same(const VarLayout& a, const VarLayout& b) {
    if (!(a == b))
        throw VariableMismatch("operands use different variable sets (x" + std::to_string(a.nx) + ",y" +
                               std::to_string(a.ny) + " vs x" + std::to_string(b.nx) + ",y" + std::to_string(b.ny) +
                               ")");
}

MultiIndex zero_index(const VarLayout& layout) { return MultiIndex(static_cast<std::size_t>(layout.size()), 0); }

// Scalars that need brackets when followed by `*factor`.
bool compound(const Scalar& c) { return c.is_polynomial() && c.numerator().terms().size() > 1; }

struct RenderTerm {
    Scalar coef;
    std::vector<std::string> factors;
};

std::string render_text(const std::vector<RenderTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, factors] : terms) {
        std::string body;
        std::string joined;
        for (const auto& f : factors) joined += (joined.empty() ? "" : "*") + f;
        if (factors.empty()) {
            body = compound(c) && !first ? "(" + c.to_string() + ")" : c.to_string();
        } else if (c == Scalar(1)) {
            body = joined;
        } else if (c == Scalar(-1)) {
            body = "-" + joined;
        } else if (compound(c)) {
            body = "(" + c.to_string() + ")*" + joined;
        } else {
            body = c.to_string() + "*" + joined;
        }
        if (first) out = body;
        else if (body[0] == '-') out += " - " + body.substr(1);
        else out += " + " + body;
        first = false;
    }
    return out;
}

std::string render_latex(const std::vector<RenderTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, factors] : terms) {
        std::string joined;
        for (const auto& f : factors) joined += (joined.empty() ? "" : " ") + f;
        std::string body;
        std::string s = c.to_latex();
        bool multi = c.is_polynomial() && c.numerator().terms().size() > 1;
        if (factors.empty()) body = multi && !first ? "\\left(" + s + "\\right)" : s;
        else if (c == Scalar(1)) body = joined;
        else if (c == Scalar(-1)) body = "-" + joined;
        else if (multi) body = "\\left(" + s + "\\right) " + joined;
        else body = s + " " + joined;
        if (first) out = body;
        else if (body[0] == '-') out += " - " + body.substr(1);
        else out += " + " + body;
        first = false;
    }
    return out;
}

std::vector<std::string> var_factors(const VarLayout& layout, const MultiIndex& e, bool latex) {
    std::vector<std::string> out;
    for (int i = 0; i < layout.size(); ++i) {
        int p = e[static_cast<std::size_t>(i)];
        if (p == 0) continue;
        std::string name = layout.name(i);
        if (latex && name != "t") name = name.substr(0, 1) + "_{" + name.substr(1) + "}";
        if (p == 1) out.push_back(name);
        else if (latex) out.push_back(name + "^{" + std::to_string(p) + "}");
        else out.push_back(name + "^" + std::to_string(p));
    }
    return out;
}

std::vector<std::string> partial_factors(const VarLayout& layout, const MultiIndex& beta, bool latex) {
    std::vector<std::string> out;
    for (int i = 0; i < layout.size(); ++i) {
        int p = beta[static_cast<std::size_t>(i)];
        if (p == 0) continue;
        std::string name = layout.name(i);
        if (latex) {
            if (name != "t") name = name.substr(0, 1) + "_{" + name.substr(1) + "}";
            std::string f = "\\partial_{" + name + "}";
            if (p > 1) f += "^{" + std::to_string(p) + "}";
            out.push_back(f);
        } else {
            std::string f = "d/d" + name;
            if (p > 1) f = "(" + f + ")^" + std::to_string(p);
            out.push_back(f);
        }
    }
    return out;
}

// e!/(e-k)!
Integer falling(int e, int k) {
    Integer out = 1;
    for (int i = 0; i < k; ++i) out *= e - i;
    return out;
}

}  // namespace

// ---- CoefPoly ----------------------------------------------------------

CoefPoly::CoefPoly(VarLayout layout, const Scalar& c) : layout_(layout) { add(zero_index(layout), c); }

CoefPoly CoefPoly::variable(VarLayout layout, int index, int power) {
    CoefPoly p(layout);
    MultiIndex e = zero_index(layout);
    e[static_cast<std::size_t>(index)] = power;
    p.add(e, Scalar(1));
    return p;
}

bool CoefPoly::is_scalar() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (int x : terms_.begin()->first)
        if (x != 0) return false;
    return true;
}

Scalar CoefPoly::scalar_part() const {
    auto it = terms_.find(zero_index(layout_));
    return it == terms_.end() ? Scalar(0) : it->second;
}

int CoefPoly::degree() const {
    int best = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        best = std::max(best, s);
    }
    return best;
}

void CoefPoly::add(const MultiIndex& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CoefPoly& CoefPoly::operator+=(const CoefPoly& rhs) {
    require_same(layout_, rhs.layout_);
    for (const auto& [e, c] : rhs.terms_) add(e, c);
    return *this;
}

CoefPoly& CoefPoly::operator-=(const CoefPoly& rhs) {
    require_same(layout_, rhs.layout_);
    for (const auto& [e, c] : rhs.terms_) add(e, -c);
    return *this;
}

CoefPoly CoefPoly::operator-() const {
    CoefPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

CoefPoly operator*(const CoefPoly& lhs, const CoefPoly& rhs) {
    require_same(lhs.layout_, rhs.layout_);
    CoefPoly out(lhs.layout_);
    for (const auto& [el, cl] : lhs.terms_) {
        for (const auto& [er, cr] : rhs.terms_) {
            MultiIndex e = el;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += er[i];
            out.add(e, cl * cr);
        }
    }
    return out;
}

CoefPoly operator*(CoefPoly lhs, const Scalar& c) {
    if (c.is_zero()) return CoefPoly(lhs.layout_);
    for (auto& [e, x] : lhs.terms_) x *= c;
    return lhs;
}

CoefPoly CoefPoly::differentiate(const MultiIndex& orders) const {
    CoefPoly out(layout_);
    for (const auto& [e, c] : terms_) {
        MultiIndex r = e;
        Integer factor = 1;
        bool vanishes = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (orders[i] > e[i]) {
                vanishes = true;
                break;
            }
            factor *= falling(e[i], orders[i]);
            r[i] -= orders[i];
        }
        if (!vanishes) out.add(r, c * Scalar(Rational(factor)));
    }
    return out;
}

CoefPoly CoefPoly::substitute(Symbol s, const Rational& value) const {
    CoefPoly out(layout_);
    for (const auto& [e, c] : terms_) out.add(e, c.substitute(s, value));
    return out;
}

std::string CoefPoly::to_string() const {
    std::vector<RenderTerm> terms;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        terms.push_back({it->second, var_factors(layout_, it->first, false)});
    return render_text(terms);
}

std::string CoefPoly::to_latex() const {
    std::vector<RenderTerm> terms;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        terms.push_back({it->second, var_factors(layout_, it->first, true)});
    return render_latex(terms);
}

// ---- DiffOp ------------------------------------------------------------

DiffOp::DiffOp(VarLayout layout, const Scalar& c) : layout_(layout) { add(zero_index(layout), CoefPoly(layout, c)); }

DiffOp::DiffOp(const CoefPoly& c) : layout_(c.layout()) { add(zero_index(layout_), c); }

DiffOp DiffOp::partial(VarLayout layout, int index, int order) {
    DiffOp d(layout);
    MultiIndex beta = zero_index(layout);
    beta[static_cast<std::size_t>(index)] = order;
    d.add(beta, CoefPoly(layout, Scalar(1)));
    return d;
}

int DiffOp::order() const {
    int best = terms_.empty() ? -1 : 0;
    for (const auto& [beta, c] : terms_) {
        int s = 0;
        for (int x : beta) s += x;
        best = std::max(best, s);
    }
    return best;
}

CoefPoly DiffOp::coefficient(const MultiIndex& beta) const {
    auto it = terms_.find(beta);
    return it == terms_.end() ? CoefPoly(layout_) : it->second;
}

void DiffOp::add(const MultiIndex& beta, const CoefPoly& c) {
    require_same(layout_, c.layout());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(beta, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp& DiffOp::operator+=(const DiffOp& rhs) {
    require_same(layout_, rhs.layout_);
    for (const auto& [beta, c] : rhs.terms_) add(beta, c);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& rhs) {
    require_same(layout_, rhs.layout_);
    for (const auto& [beta, c] : rhs.terms_) add(beta, -c);
    return *this;
}

DiffOp DiffOp::operator-() const {
    DiffOp out = *this;
    for (auto& [beta, c] : out.terms_) c = -c;
    return out;
}

DiffOp operator*(const DiffOp& lhs, const DiffOp& rhs) {
    require_same(lhs.layout_, rhs.layout_);
    DiffOp out(lhs.layout_);
    const std::size_t n = static_cast<std::size_t>(lhs.layout_.size());
    for (const auto& [beta, a] : lhs.terms_) {
        for (const auto& [gamma, b] : rhs.terms_) {
            // d^beta b = sum_k prod C(beta_i, k_i) (d^k b) d^(beta-k)
            MultiIndex k(n, 0);
            std::function<void(std::size_t, Integer)> rec = [&](std::size_t i, Integer weight) {
                if (i == n) {
                    CoefPoly db = b.differentiate(k);
                    if (db.is_zero()) return;
                    MultiIndex target = gamma;
                    for (std::size_t j = 0; j < n; ++j) target[j] += beta[j] - k[j];
                    out.add(target, (a * db) * Scalar(Rational(weight)));
                    return;
                }
                for (int ki = 0; ki <= beta[i]; ++ki) {
                    k[i] = ki;
                    rec(i + 1, weight * binomial(beta[i], ki));
                }
                k[i] = 0;
            };
            rec(0, Integer(1));
        }
    }
    return out;
}

DiffOp operator*(DiffOp lhs, const Scalar& c) {
    if (c.is_zero()) return DiffOp(lhs.layout_);
    for (auto& [beta, p] : lhs.terms_) p = p * c;
    return lhs;
}

DiffOp DiffOp::substitute(Symbol s, const Rational& value) const {
    DiffOp out(layout_);
    for (const auto& [beta, c] : terms_) out.add(beta, c.substitute(s, value));
    return out;
}

std::string DiffOp::to_string() const {
    std::vector<RenderTerm> terms;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto d = partial_factors(layout_, it->first, false);
        const auto& poly = it->second.terms();
        for (auto jt = poly.rbegin(); jt != poly.rend(); ++jt) {
            auto f = var_factors(layout_, jt->first, false);
            f.insert(f.end(), d.begin(), d.end());
            terms.push_back({jt->second, f});
        }
    }
    return render_text(terms);
}

std::string DiffOp::to_latex() const {
    std::vector<RenderTerm> terms;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto d = partial_factors(layout_, it->first, true);
        const auto& poly = it->second.terms();
        for (auto jt = poly.rbegin(); jt != poly.rend(); ++jt) {
            auto f = var_factors(layout_, jt->first, true);
            f.insert(f.end(), d.begin(), d.end());
            terms.push_back({jt->second, f});
        }
    }
    return render_latex(terms);
}

DiffOp compose(const DiffOp& a, const DiffOp& b) { return a * b; }

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

DiffOp power(const DiffOp& a, int exponent) {
    if (exponent < 0) throw InvalidSpec("negative operator power");
    DiffOp out(a.layout(), Scalar(1));
    for (int i = 0; i < exponent; ++i) out = out * a;
    return out;
}

CoefPoly apply(const DiffOp& a, const CoefPoly& p) {
    require_same(a.layout(), p.layout());
    CoefPoly out(a.layout());
    for (const auto& [beta, c] : a.terms()) out += c * p.differentiate(beta);
    return out;
}

}  // namespace cgk
