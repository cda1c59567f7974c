#include "cgk/invariants.hpp"

#include "cgk/errors.hpp"

namespace cgk {

DiffOp right_image(const AlgebraSpec& spec, const UElement& element) {
    DiffOp out(coset_layout(spec));
    for (const auto& w : element) {
        DiffOp word(out.layout(), w.coef);
        for (const auto& g : w.gens) word = word * right_action(spec, g);
        out += word;
    }
    return out;
}

DiffOp invariant_operator(const AlgebraSpec& spec, const Params& params, int q) {
    if (q < 1) throw InvalidSpec("q must be positive");
    return power(right_image(spec, singular_element(spec, params)), q);
}

// Fixed by the l = 1/2, q = 1 heat equation, where [S, pi_L(D)] = -2 S.
Scalar shifted_delta(const Scalar& delta, int q) { return delta - Scalar(2 * q); }

std::vector<IntertwiningEntry> intertwining_residuals(const AlgebraSpec& spec, const Params& params, int q) {
    DiffOp s = invariant_operator(spec, params, q);
    Params target = params;
    target.set(Symbol::Delta, shifted_delta(params.get(Symbol::Delta), q));
    std::vector<IntertwiningEntry> out;
    for (const auto& g : enumerate_generators(spec)) {
        DiffOp r = s * left_action(spec, params, g) - left_action(spec, target, g) * s;
        out.push_back({g, std::move(r)});
    }
    return out;
}

std::vector<IntertwiningEntry> intertwining_check(const AlgebraSpec& spec, const Params& params, int q) {
    Rational root = condition_root(spec, q);
    if (!(params.get(Symbol::Delta) == Scalar(root)))
        throw ConditionNotSatisfied("delta must equal " + root.get_str() + " for q = " + std::to_string(q) +
                                    " in " + spec.to_string());
    std::vector<IntertwiningEntry> failures;
    for (auto& e : intertwining_residuals(spec, params, q))
        if (!e.residual.is_zero()) failures.push_back(std::move(e));
    return failures;
}

CoefPoly onshell_multiplier(const AlgebraSpec& spec, const Params& params, const Gen& x) {
    DiffOp s = invariant_operator(spec, params, 1);
    DiffOp k = commutator(s, left_action(spec, params, x));
    // Match on the highest-order term of S whose coefficient is free of variables.
    const MultiIndex* anchor = nullptr;
    int best = -1;
    for (const auto& [beta, c] : s.terms()) {
        int order = 0;
        for (int b : beta) order += b;
        if (c.is_scalar() && order > best) {
            best = order;
            anchor = &beta;
        }
    }
    if (!anchor) throw NoMultiplier("invariant operator has no constant-coefficient term");
    CoefPoly lambda = k.coefficient(*anchor) * (Scalar(1) / s.coefficient(*anchor).scalar_part());
    DiffOp remainder = k - DiffOp(lambda) * s;
    if (!remainder.is_zero())
        throw NoMultiplier("[S, pi_L(" + x.name() + ")] is not a multiple of S; remainder " + remainder.to_string());
    return lambda;
}

}  // namespace cgk
