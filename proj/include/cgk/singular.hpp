#ifndef CGK_SINGULAR_HPP
#define CGK_SINGULAR_HPP

#include <vector>

#include "cgk/kernel.hpp"
#include "cgk/verma.hpp"

namespace cgk {

/// coef * g1 g2 ... gk, leftmost factor first.
struct Word {
    Scalar coef;
    std::vector<Gen> gens;
};

/// Element of U(g+) as a sum of words.
using UElement = std::vector<Word>;

/// The degree-one building block S of the singular vectors S^q |0>:
///   d=1 mass:   2((ell-1/2)!)^2 mu H + (P^(ell-1/2))^2
///   d=2 mass:   ((ell-1/2)!)^2 mu H + P^(ell-1/2)+ P^(ell-1/2)-
///   d=2 exotic: ell!(ell-1)! theta H + (-1)^ell P^(ell-1)- P^(ell)+
///   centerless: P^(2)
UElement singular_element(const AlgebraSpec& spec, const Params& params);

ModuleVector apply_element(const VermaModule& mod, const UElement& s, const ModuleVector& v);

/// S^q |0>. q = 0 gives the vacuum. For the centerless family kappa must be 0
/// (ConditionNotSatisfied otherwise).
ModuleVector singular_closed(const VermaModule& mod, int q);

/// Linear polynomial in delta that must vanish for S^q|0> to be singular.
/// Throws UnsupportedFamily for the centerless family.
ParamPoly singular_condition(const AlgebraSpec& spec, int q);
Rational condition_root(const AlgebraSpec& spec, int q);

struct Residual {
    Gen gen;
    ModuleVector value;
};

struct SingularReport {
    ModuleVector candidate;
    /// X v for every X in g-.
    std::vector<Residual> annihilators;
    /// (Z - lambda_Z) v for every Z in g0, lambda_Z read off the leading term.
    std::vector<Residual> eigen_residuals;
    Weight weight;
    bool is_singular = false;
};

SingularReport verify_singular(const VermaModule& mod, const ModuleVector& v);

struct SearchResult {
    /// Normalized so the lexicographically smallest monomial has coefficient 1.
    std::vector<ModuleVector> kernel;
    /// Parameter polynomials whose vanishing may enlarge the kernel.
    std::vector<ParamPoly> caveats;
};

/// Every vector in the selected subspace that is annihilated by g- and is
/// a g0 eigenvector. The selection is split into g0 weight blocks first.
SearchResult search_singular(const VermaModule& mod, const BasisSelector& selector);

/// True when a = c b for some nonzero Scalar c.
bool proportional(const ModuleVector& a, const ModuleVector& b);

}  // namespace cgk

#endif  // CGK_SINGULAR_HPP
