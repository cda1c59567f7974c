#ifndef CGK_INVARIANTS_HPP
#define CGK_INVARIANTS_HPP

#include <vector>

#include "cgk/reps.hpp"
#include "cgk/singular.hpp"

namespace cgk {

/// pi_R of a g+ element: words become compositions of right actions.
DiffOp right_image(const AlgebraSpec& spec, const UElement& element);

/// pi_R(S)^q, the operator of the q-th invariant equation.
DiffOp invariant_operator(const AlgebraSpec& spec, const Params& params, int q);

/// Weight of the target representation: S^q intertwines pi^(delta) with
/// pi^(shifted_delta(delta, q)).
Scalar shifted_delta(const Scalar& delta, int q);

struct IntertwiningEntry {
    Gen gen;
    /// S^q pi^(delta)(X) - pi^(delta')(X) S^q
    DiffOp residual;
};

/// Residual for every generator, whatever delta is.
std::vector<IntertwiningEntry> intertwining_residuals(const AlgebraSpec& spec, const Params& params, int q);

/// Same, after checking that delta sits at the root of the singular-vector
/// condition (ConditionNotSatisfied otherwise). Only nonzero residuals are
/// returned.
std::vector<IntertwiningEntry> intertwining_check(const AlgebraSpec& spec, const Params& params, int q);

/// lambda_X with [S, pi_L(X)] = lambda_X S for q = 1. Throws NoMultiplier
/// when no polynomial lambda_X exists.
CoefPoly onshell_multiplier(const AlgebraSpec& spec, const Params& params, const Gen& x);

}  // namespace cgk

#endif  // CGK_INVARIANTS_HPP
