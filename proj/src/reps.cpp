#include "cgk/reps.hpp"

#include <algorithm>

#include "cgk/errors.hpp"

namespace cgk {

namespace {

bool is_exotic(const AlgebraSpec& s) { return s.ext == Extension::Exotic; }

// Builder for one family's operators.
struct Coords {
    VarLayout layout;

    DiffOp scalar(const Scalar& c) const { return DiffOp(layout, c); }
    DiffOp var(int index, int power = 1) const { return DiffOp(CoefPoly::variable(layout, index, power)); }
    DiffOp d(int index) const { return DiffOp::partial(layout, index); }
    DiffOp t_pow(int k) const { return k == 0 ? scalar(1) : var(layout.t(), k); }
    // Variable index for tower `plus` (x) or minus (y).
    int tower(bool plus, int n) const { return plus ? layout.x(n) : layout.y(n); }
};

Scalar integer(const Integer& v) { return Scalar(Rational(v)); }

bool in_plus(const Algebra& alg, const Gen& x) {
    const auto& plus = alg.decomposition().plus;
    return std::find(plus.begin(), plus.end(), x) != plus.end();
}

}  // namespace

VarLayout coset_layout(const AlgebraSpec& spec) {
    spec.validate();
    switch (spec.ext) {
        case Extension::None: return {1, 0};
        case Extension::Exotic: return {spec.twoEll / 2 + 1, spec.twoEll / 2};
        case Extension::Mass: break;
    }
    const int n = spec.half_floor() + 1;
    return spec.d == 1 ? VarLayout{n, 0} : VarLayout{n, n};
}

DiffOp right_action(const AlgebraSpec& spec, const Gen& x) {
    Algebra alg(spec);
    if (!alg.contains(x) || !in_plus(alg, x))
        throw UnsupportedGenerator("right action is only available on g+, not for " + x.name());
    Coords c{coset_layout(spec)};
    const VarLayout& v = c.layout;
    if (spec.ext == Extension::None) return x.tag == GenTag::C ? c.d(v.t()) : c.d(v.x(0));
    if (x.tag == GenTag::P) return c.d(x.sign == PSign::Minus ? v.y(x.n) : v.x(x.n));
    // H
    DiffOp out = c.d(v.t());
    for (int n = 1; n < v.nx; ++n) out += c.var(v.x(n)) * c.d(v.x(n - 1)) * Scalar(n);
    for (int n = 1; n < v.ny; ++n) out += c.var(v.y(n)) * c.d(v.y(n - 1)) * Scalar(n);
    return out;
}

DiffOp left_action(const AlgebraSpec& spec, const Params& params, const Gen& x) {
    if (!spec.has_center()) throw UnsupportedFamily("no vector-field representation for the centerless family");
    Algebra alg(spec);
    if (!alg.contains(x)) throw UnknownGenerator(x.name() + " is not a generator of " + spec.to_string());
    Coords c{coset_layout(spec)};
    const VarLayout& v = c.layout;
    const int top = spec.twoEll;
    const bool exotic = is_exotic(spec);
    const int ell = top / 2;  // exotic only
    const int L = spec.half_floor();
    auto I = [&](int k) { return integer(central_constant(spec, k)); };
    auto C = [](int n, int k) { return Scalar(Rational(binomial(n, k))); };

    auto pi_d = [&]() {
        DiffOp out = c.scalar(params.get(Symbol::Delta)) - c.var(v.t()) * c.d(v.t()) * Scalar(2);
        for (int n = 0; n < v.nx; ++n) out -= c.var(v.x(n)) * c.d(v.x(n)) * Scalar(top - 2 * n);
        for (int n = 0; n < v.ny; ++n) out -= c.var(v.y(n)) * c.d(v.y(n)) * Scalar(top - 2 * n);
        return out;
    };

    switch (x.tag) {
        case GenTag::D: return pi_d();
        case GenTag::M: return c.scalar(params.get(Symbol::Mu));
        case GenTag::Theta: return c.scalar(-params.get(Symbol::Theta));
        case GenTag::H: return -c.d(v.t());
        case GenTag::J: {
            DiffOp out = c.scalar(params.get(Symbol::R));
            for (int n = 0; n < v.nx; ++n) out -= c.var(v.x(n)) * c.d(v.x(n));
            for (int n = 0; n < v.ny; ++n) out += c.var(v.y(n)) * c.d(v.y(n));
            return out;
        }
        case GenTag::C: {
            DiffOp out = c.var(v.t()) * pi_d() + c.var(v.t(), 2) * c.d(v.t());
            if (exotic) {
                out -= c.var(v.x(ell)) * c.var(v.y(ell - 1)) * (Scalar(ell) * I(ell + 1) * params.get(Symbol::Theta));
            } else if (spec.d == 1) {
                Scalar f = Scalar(Rational(factorial(L + 1) * factorial(L + 1), 2)) * params.get(Symbol::Mu);
                out += c.var(v.x(L), 2) * f;
            } else {
                out += c.var(v.x(L)) * c.var(v.y(L)) * (Scalar(L + 1) * I(L + 1) * params.get(Symbol::Mu));
            }
            for (int n = 0; n + 1 < v.nx; ++n) out -= c.var(v.x(n)) * c.d(v.x(n + 1)) * Scalar(top - n);
            for (int n = 0; n + 1 < v.ny; ++n) out -= c.var(v.y(n)) * c.d(v.y(n + 1)) * Scalar(top - n);
            return out;
        }
        case GenTag::P: break;
    }

    const int n = x.n;
    const bool plus = x.sign != PSign::Minus;
    if (in_plus(alg, x)) {
        DiffOp out(v);
        for (int k = 0; k <= n; ++k) out -= c.t_pow(k) * c.d(c.tower(plus, n - k)) * C(n, k);
        return out;
    }
    DiffOp out(v);
    if (exotic) {
        const Scalar theta = params.get(Symbol::Theta);
        if (plus) {
            for (int k = 0; k <= n - ell - 1; ++k)
                out -= c.t_pow(k) * c.var(v.y(top - n + k)) * (theta * C(n, k) * I(n - k));
            for (int k = n - ell; k <= n; ++k) out -= c.t_pow(k) * c.d(v.x(n - k)) * C(n, k);
        } else {
            for (int k = 0; k <= n - ell; ++k)
                out += c.t_pow(k) * c.var(v.x(top - n + k)) * (theta * C(n, k) * I(n - k));
            for (int k = n - ell + 1; k <= n; ++k) out -= c.t_pow(k) * c.d(v.y(n - k)) * C(n, k);
        }
        return out;
    }
    // Mass families: the central term pairs with the opposite tower.
    const Scalar mu = params.get(Symbol::Mu);
    const bool d1 = spec.d == 1;
    for (int k = top - n; k <= L; ++k) {
        int partner = d1 ? v.x(k) : c.tower(!plus, k);
        out += c.t_pow(n - top + k) * c.var(partner) * (mu * C(n, top - k) * I(top - k));
    }
    for (int k = 0; k <= L; ++k) out -= c.t_pow(n - k) * c.d(c.tower(plus, k)) * C(n, k);
    return out;
}

OperatorImages left_images(const AlgebraSpec& spec, const Params& params) {
    OperatorImages out;
    for (const auto& g : enumerate_generators(spec)) out.emplace(g, left_action(spec, params, g));
    return out;
}

OperatorImages right_images(const AlgebraSpec& spec) {
    OperatorImages out;
    Algebra alg(spec);
    for (const auto& g : alg.decomposition().plus) out.emplace(g, right_action(spec, g));
    return out;
}

std::vector<RepFailure> rep_check(const Algebra& algebra, const OperatorImages& images) {
    std::vector<RepFailure> failures;
    std::vector<Gen> gens;
    for (const auto& g : algebra.generators())
        if (images.count(g)) gens.push_back(g);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const DiffOp& px = images.at(gens[i]);
            const DiffOp& py = images.at(gens[j]);
            DiffOp residual = commutator(px, py);
            for (const auto& [g, coef] : algebra.bracket(gens[i], gens[j]).terms()) {
                auto it = images.find(g);
                if (it == images.end())
                    throw UnsupportedGenerator("bracket leaves the audited set: " + g.name());
                residual -= it->second * coef;
            }
            if (!residual.is_zero()) failures.push_back({gens[i], gens[j], residual});
        }
    }
    return failures;
}

}  // namespace cgk
