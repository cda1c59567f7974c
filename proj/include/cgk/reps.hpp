#ifndef CGK_REPS_HPP
#define CGK_REPS_HPP

#include <map>
#include <vector>

#include "cgk/algebra.hpp"
#include "cgk/diffop.hpp"
#include "cgk/verma.hpp"

namespace cgk {

/// Coset coordinates of a family:
///   d=1 mass:   t, x0..x(ell-1/2)
///   d=2 mass:   t, x0..x(ell-1/2), y0..y(ell-1/2)
///   d=2 exotic: t, x0..x(ell), y0..y(ell-1)
///   centerless: t (paired with C), x0 (paired with P2)
VarLayout coset_layout(const AlgebraSpec& spec);

/// Right action of a g+ generator; throws UnsupportedGenerator otherwise.
DiffOp right_action(const AlgebraSpec& spec, const Gen& x);

/// Vector-field (left action) image of any generator, weight constants
/// taken from `params`. Throws UnsupportedFamily for the centerless family.
DiffOp left_action(const AlgebraSpec& spec, const Params& params, const Gen& x);

using OperatorImages = std::map<Gen, DiffOp>;

OperatorImages left_images(const AlgebraSpec& spec, const Params& params);
/// Images of g+ only.
OperatorImages right_images(const AlgebraSpec& spec);

struct RepFailure {
    Gen x, y;
    /// [pi(x), pi(y)] - pi([x, y]).
    DiffOp residual;
};

/// Homomorphism audit over every pair of generators present in `images`:
/// [pi(x), pi(y)] must equal pi([x, y]). Central generators enter through
/// their own (constant) images.
std::vector<RepFailure> rep_check(const Algebra& algebra, const OperatorImages& images);

}  // namespace cgk

#endif  // CGK_REPS_HPP
