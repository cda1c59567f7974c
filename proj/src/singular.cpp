#include "cgk/singular.hpp"

#include <algorithm>

#include "cgk/errors.hpp"

namespace cgk {

namespace {

Scalar integer(const Integer& v) { return Scalar(Rational(v)); }

}  // namespace

UElement singular_element(const AlgebraSpec& spec, const Params& params) {
    spec.validate();
    const int L = spec.half_floor();
    switch (spec.ext) {
        case Extension::None: return {{Scalar(1), {Gen::P(2)}}};
        case Extension::Exotic: {
            const int ell = spec.twoEll / 2;
            Scalar alpha = integer(factorial(ell) * factorial(ell - 1));
            Scalar sign = ell % 2 == 0 ? Scalar(1) : Scalar(-1);
            return {{alpha * params.get(Symbol::Theta), {Gen::H()}},
                    {sign, {Gen::P(ell - 1, PSign::Minus), Gen::P(ell, PSign::Plus)}}};
        }
        case Extension::Mass: break;
    }
    Scalar fl = integer(factorial(L) * factorial(L));
    const Scalar mu = params.get(Symbol::Mu);
    if (spec.d == 1) return {{Scalar(2) * fl * mu, {Gen::H()}}, {Scalar(1), {Gen::P(L), Gen::P(L)}}};
    return {{fl * mu, {Gen::H()}}, {Scalar(1), {Gen::P(L, PSign::Plus), Gen::P(L, PSign::Minus)}}};
}

ModuleVector apply_element(const VermaModule& mod, const UElement& s, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& w : s) {
        ModuleVector part = v;
        for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) part = mod.act(*it, part);
        out += part * w.coef;
    }
    return out;
}

ModuleVector singular_closed(const VermaModule& mod, int q) {
    if (q < 0) throw InvalidSpec("q must be non-negative");
    const auto& spec = mod.spec();
    if (spec.ext == Extension::None && !mod.params().get(Symbol::Kappa).is_zero())
        throw ConditionNotSatisfied("the centerless singular vectors need kappa = 0");
    UElement s = singular_element(spec, mod.params());
    ModuleVector v = mod.vacuum();
    for (int i = 0; i < q; ++i) v = apply_element(mod, s, v);
    return v;
}

ParamPoly singular_condition(const AlgebraSpec& spec, int q) {
    spec.validate();
    const ParamPoly delta = ParamPoly::symbol(Symbol::Delta);
    const int half_plus = (spec.twoEll + 1) / 2;  // ell + 1/2 for half-integer ell
    switch (spec.ext) {
        case Extension::None:
            throw UnsupportedFamily("the centerless family has no delta condition (its condition is kappa = 0)");
        case Extension::Exotic: {
            const int ell = spec.twoEll / 2;
            return delta + ParamPoly(1 - q + ell * (ell + 1));
        }
        case Extension::Mass: break;
    }
    if (spec.d == 1) return delta * Rational(2) + ParamPoly(-2 * (q - 1) + half_plus * half_plus);
    return delta + ParamPoly(-q + half_plus * half_plus + 1);
}

Rational condition_root(const AlgebraSpec& spec, int q) {
    ParamPoly c = singular_condition(spec, q);
    Rational slope = c.leading_coefficient();
    return -c.constant_term() / slope;
}

SingularReport verify_singular(const VermaModule& mod, const ModuleVector& v) {
    SingularReport report;
    report.candidate = v;
    const auto& dec = mod.algebra().decomposition();
    bool ok = !v.is_zero();
    for (const auto& x : dec.minus) {
        ModuleVector r = mod.act(x, v);
        ok = ok && r.is_zero();
        report.annihilators.push_back({x, std::move(r)});
    }
    for (const auto& z : dec.zero) {
        ModuleVector zv = mod.act(z, v);
        Scalar lambda(0);
        if (!v.is_zero()) {
            const auto& [m0, c0] = *v.terms().begin();
            lambda = zv.coefficient(m0) / c0;
        }
        ModuleVector r = zv - v * lambda;
        ok = ok && r.is_zero();
        report.weight[z] = lambda;
        report.eigen_residuals.push_back({z, std::move(r)});
    }
    report.is_singular = ok;
    return report;
}

SearchResult search_singular(const VermaModule& mod, const BasisSelector& selector) {
    const auto basis = mod.level_basis(selector);
    const auto& dec = mod.algebra().decomposition();

    // Weight blocks in order of first appearance.
    std::vector<std::pair<Weight, std::vector<PbwMonomial>>> blocks;
    for (const auto& m : basis) {
        Weight w = mod.weight_of(m);
        auto it = std::find_if(blocks.begin(), blocks.end(), [&](const auto& b) { return b.first == w; });
        if (it == blocks.end()) blocks.push_back({w, {m}});
        else it->second.push_back(m);
    }

    SearchResult result;
    for (const auto& [weight, monos] : blocks) {
        std::map<std::pair<std::size_t, PbwMonomial>, std::size_t> row_of;
        ScalarMatrix rows;
        std::vector<std::pair<Gen, bool>> ops;  // (generator, is g0)
        for (const auto& x : dec.minus) ops.push_back({x, false});
        for (const auto& z : dec.zero)
            if (!z.is_central()) ops.push_back({z, true});
        for (std::size_t k = 0; k < ops.size(); ++k) {
            const auto& [g, eigen] = ops[k];
            for (std::size_t j = 0; j < monos.size(); ++j) {
                ModuleVector image = mod.act(g, monos[j]);
                if (eigen) image -= ModuleVector(monos[j], weight.at(g));
                for (const auto& [n, c] : image.terms()) {
                    auto key = std::make_pair(k, n);
                    auto it = row_of.find(key);
                    if (it == row_of.end()) {
                        it = row_of.emplace(key, rows.size()).first;
                        rows.emplace_back(monos.size(), Scalar(0));
                    }
                    rows[it->second][j] += c;
                }
            }
        }
        KernelResult k = nullspace(rows, monos.size());
        for (const auto& c : k.caveats)
            if (std::find(result.caveats.begin(), result.caveats.end(), c) == result.caveats.end())
                result.caveats.push_back(c);
        for (const auto& vec : k.basis) {
            ModuleVector v;
            for (std::size_t j = 0; j < monos.size(); ++j) v.add(monos[j], vec[j]);
            // The lexicographically smallest monomial gets coefficient 1.
            const Scalar lead = v.terms().begin()->second;
            result.kernel.push_back(v * (Scalar(1) / lead));
        }
    }
    return result;
}

bool proportional(const ModuleVector& a, const ModuleVector& b) {
    if (a.is_zero() || b.is_zero()) return false;
    const auto& [m, c] = *b.terms().begin();
    Scalar ratio = a.coefficient(m) / c;
    return !ratio.is_zero() && a == b * ratio;
}

}  // namespace cgk
