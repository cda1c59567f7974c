#include "cgk/verma.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cgk/errors.hpp"

namespace cgk {

Params Params::symbolic() {
    Params p;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
        auto s = static_cast<Symbol>(i);
        p.set(s, Scalar::symbol(s));
    }
    return p;
}

Params& Params::set(Symbol s, const Scalar& value) {
    values_[s] = value;
    return *this;
}

Params& Params::erase(Symbol s) {
    values_.erase(s);
    return *this;
}

const Scalar& Params::get(Symbol s) const {
    auto it = values_.find(s);
    if (it == values_.end()) throw MissingParameter("missing value for parameter " + std::string(symbol_name(s)));
    return it->second;
}

std::vector<Symbol> required_symbols(const AlgebraSpec& spec) {
    switch (spec.ext) {
        case Extension::Mass:
            if (spec.d == 1) return {Symbol::Delta, Symbol::Mu};
            return {Symbol::Delta, Symbol::R, Symbol::Mu};
        case Extension::Exotic: return {Symbol::Delta, Symbol::R, Symbol::Theta};
        case Extension::None: return {Symbol::Delta, Symbol::Kappa};
    }
    return {};
}

int PbwMonomial::degree() const {
    return h + std::accumulate(a.begin(), a.end(), 0) + std::accumulate(b.begin(), b.end(), 0);
}

std::string PbwMonomial::to_string() const {
    std::ostringstream os;
    auto list = [&os](const std::vector<int>& v) {
        os << '[';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ']';
    };
    os << "|h=" << h << ",a=";
    list(a);
    os << ",b=";
    list(b);
    os << '>';
    return os.str();
}

void ModuleVector::add(const PbwMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar ModuleVector::coefficient(const PbwMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, c);
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, -c);
    return *this;
}

ModuleVector ModuleVector::operator*(const Scalar& c) const {
    ModuleVector out;
    if (c.is_zero()) return out;
    for (const auto& [m, x] : terms_) out.add(m, x * c);
    return out;
}

std::string ModuleVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.to_string() << ')' << m.to_string();
    }
    return os.str();
}

VermaModule::VermaModule(Algebra algebra, Params params) : algebra_(std::move(algebra)), params_(std::move(params)) {
    const auto& spec = algebra_.spec();
    for (Symbol s : required_symbols(spec)) params_.get(s);

    const auto& dec = algebra_.decomposition();
    // Basis order: H (or C) first, then the commuting P block.
    creation_ = dec.plus;

    const Scalar delta = params_.get(Symbol::Delta);
    lowest_weight_[Gen::D()] = -delta;
    switch (spec.ext) {
        case Extension::Mass:
            lowest_weight_[Gen::M()] = -params_.get(Symbol::Mu);
            if (spec.d == 2) lowest_weight_[Gen::J()] = -params_.get(Symbol::R);
            break;
        case Extension::Exotic:
            lowest_weight_[Gen::J()] = -params_.get(Symbol::R);
            lowest_weight_[Gen::Theta()] = params_.get(Symbol::Theta);
            break;
        case Extension::None: lowest_weight_[Gen::P(1)] = -params_.get(Symbol::Kappa); break;
    }

    const auto& gens = algebra_.generators();
    creation_pos_.assign(gens.size(), -1);
    role_.assign(gens.size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto it = std::find(creation_.begin(), creation_.end(), gens[i]);
        if (it != creation_.end()) {
            creation_pos_[i] = static_cast<int>(it - creation_.begin());
            role_[i] = 1;
        } else if (std::find(dec.minus.begin(), dec.minus.end(), gens[i]) != dec.minus.end()) {
            role_[i] = -1;
        }
    }
}

PbwMonomial VermaModule::vacuum_monomial() const { return monomial(std::vector<int>(creation_.size(), 0)); }

PbwMonomial VermaModule::monomial(const std::vector<int>& exps) const {
    const auto& spec = this->spec();
    PbwMonomial m;
    if (spec.ext == Extension::None) {
        m.h = exps[0];
        m.a = {exps[1]};
        return m;
    }
    const int top = spec.twoEll;
    const int a_size = spec.ext == Extension::Exotic ? top / 2 + 1 : spec.half_floor() + 1;
    const int b_size = spec.d == 1 ? 0 : (spec.ext == Extension::Exotic ? top / 2 : spec.half_floor() + 1);
    m.a.assign(static_cast<std::size_t>(a_size), 0);
    m.b.assign(static_cast<std::size_t>(b_size), 0);
    for (std::size_t i = 0; i < creation_.size(); ++i) {
        const Gen& g = creation_[i];
        if (g.tag == GenTag::H) m.h = exps[i];
        else if (g.sign == PSign::Minus) m.b[static_cast<std::size_t>(g.n)] = exps[i];
        else m.a[static_cast<std::size_t>(g.n)] = exps[i];
    }
    return m;
}

std::vector<int> VermaModule::exponents(const PbwMonomial& m) const {
    std::vector<int> exps(creation_.size(), 0);
    if (spec().ext == Extension::None) {
        exps[0] = m.h;
        exps[1] = m.a.empty() ? 0 : m.a[0];
        return exps;
    }
    for (std::size_t i = 0; i < creation_.size(); ++i) {
        const Gen& g = creation_[i];
        const auto n = static_cast<std::size_t>(g.n);
        if (g.tag == GenTag::H) exps[i] = m.h;
        else if (g.sign == PSign::Minus) exps[i] = n < m.b.size() ? m.b[n] : 0;
        else exps[i] = n < m.a.size() ? m.a[n] : 0;
    }
    return exps;
}

std::size_t VermaModule::gen_index(const Gen& g) const {
    const auto& gens = algebra_.generators();
    auto it = std::find(gens.begin(), gens.end(), g);
    if (it == gens.end()) throw UnknownGenerator(g.name() + " is not a generator of " + spec().to_string());
    return static_cast<std::size_t>(it - gens.begin());
}

ModuleVector VermaModule::act(const Gen& x, const PbwMonomial& m) const {
    return act_flat(gen_index(x), exponents(m));
}

ModuleVector VermaModule::act(const Gen& x, const ModuleVector& v) const {
    const std::size_t xi = gen_index(x);
    ModuleVector out;
    for (const auto& [m, c] : v.terms()) out += act_flat(xi, exponents(m)) * c;
    return out;
}

ModuleVector VermaModule::act(const GenCombo& x, const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [g, c] : x.terms()) out += act(g, v) * c;
    return out;
}

ModuleVector VermaModule::act_flat(std::size_t xi, const Flat& m) const {
    auto key = std::make_pair(xi, m);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    const Gen& x = algebra_.generators()[xi];
    ModuleVector result;
    auto first = std::find_if(m.begin(), m.end(), [](int e) { return e != 0; });
    const int x_pos = creation_pos_[xi];

    if (x.is_central()) {
        result = ModuleVector(monomial(m), lowest_weight_.at(x));
    } else if (x_pos >= 0 && (first == m.end() || x_pos <= first - m.begin())) {
        // X already sits in normal order.
        Flat grown = m;
        ++grown[static_cast<std::size_t>(x_pos)];
        result = ModuleVector(monomial(grown), 1);
    } else if (first == m.end()) {
        if (role_[xi] == 0) result = ModuleVector(monomial(m), lowest_weight_.at(x));
        // g- annihilates the vacuum.
    } else {
        const auto p = static_cast<std::size_t>(first - m.begin());
        const Gen& y = creation_[p];
        const std::size_t yi = gen_index(y);
        Flat rest = m;
        --rest[p];
        ModuleVector moved = act_flat(xi, rest);
        for (const auto& [mono, c] : moved.terms()) result += act_flat(yi, exponents(mono)) * c;
        for (const auto& [z, c] : algebra_.bracket(x, y).terms()) result += act_flat(gen_index(z), rest) * c;
    }
    cache_.emplace(std::move(key), result);
    return result;
}

int VermaModule::d_grade(const Gen& g) const {
    const auto& br = algebra_.bracket(Gen::D(), g);
    if (br.is_zero()) return 0;
    return static_cast<int>(br.terms().at(g).constant_value().get_num().get_si());
}

int VermaModule::j_charge(const Gen& g) const {
    if (spec().d != 2) return 0;
    const auto& br = algebra_.bracket(Gen::J(), g);
    if (br.is_zero()) return 0;
    return static_cast<int>(br.terms().at(g).constant_value().get_num().get_si());
}

Weight VermaModule::weight_of(const PbwMonomial& m) const {
    Weight w = lowest_weight_;
    auto exps = exponents(m);
    int d_shift = 0;
    int j_shift = 0;
    for (std::size_t i = 0; i < creation_.size(); ++i) {
        d_shift += exps[i] * d_grade(creation_[i]);
        j_shift += exps[i] * j_charge(creation_[i]);
    }
    w[Gen::D()] += Scalar(d_shift);
    if (spec().d == 2) w[Gen::J()] += Scalar(j_shift);
    return w;
}

std::vector<PbwMonomial> VermaModule::level_basis(const BasisSelector& selector) const {
    const std::size_t n = creation_.size();
    std::vector<int> grades(n), charges(n);
    for (std::size_t i = 0; i < n; ++i) {
        grades[i] = d_grade(creation_[i]);
        charges[i] = j_charge(creation_[i]);
    }
    std::vector<PbwMonomial> out;
    Flat exps(n, 0);

    if (selector.level) {
        const int level = *selector.level;
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (i + 1 == n) {
                exps[i] = left;
                if (selector.d_shift || selector.j_shift) {
                    int ds = 0, js = 0;
                    for (std::size_t k = 0; k < n; ++k) {
                        ds += exps[k] * grades[k];
                        js += exps[k] * charges[k];
                    }
                    if ((selector.d_shift && ds != *selector.d_shift) || (selector.j_shift && js != *selector.j_shift))
                        return;
                }
                out.push_back(monomial(exps));
                return;
            }
            for (int e = 0; e <= left; ++e) {
                exps[i] = e;
                rec(i + 1, left - e);
            }
            exps[i] = 0;
        };
        if (level >= 0) rec(0, level);
    } else if (selector.d_shift) {
        // Generators of zero D-grade are fixed by the J constraint.
        std::vector<std::size_t> graded, flat;
        for (std::size_t i = 0; i < n; ++i) (grades[i] != 0 ? graded : flat).push_back(i);
        if (!flat.empty() && (!selector.j_shift || flat.size() > 1 || charges[flat[0]] == 0))
            throw InfiniteSelection("D-eigenvalue alone does not bound the basis; give a J shift");
        const int target = *selector.d_shift;
        std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
            if (k == graded.size()) {
                if (left != 0) return;
                if (!flat.empty()) {
                    int js = 0;
                    for (std::size_t i : graded) js += exps[i] * charges[i];
                    int need = *selector.j_shift - js;
                    if (need % charges[flat[0]] != 0 || need / charges[flat[0]] < 0) return;
                    exps[flat[0]] = need / charges[flat[0]];
                } else if (selector.j_shift) {
                    int js = 0;
                    for (std::size_t i : graded) js += exps[i] * charges[i];
                    if (js != *selector.j_shift) return;
                }
                out.push_back(monomial(exps));
                if (!flat.empty()) exps[flat[0]] = 0;
                return;
            }
            const std::size_t i = graded[k];
            const int g = grades[i];
            for (int e = 0;; ++e) {
                const int used = e * g;
                if ((g > 0 && used > target) || (g < 0 && used < target)) break;
                exps[i] = e;
                rec(k + 1, left - used);
            }
            exps[i] = 0;
        };
        rec(0, target);
    } else {
        throw InfiniteSelection("basis selector needs a level or a D-eigenvalue shift");
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cgk
