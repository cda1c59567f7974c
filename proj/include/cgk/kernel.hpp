#ifndef CGK_KERNEL_HPP
#define CGK_KERNEL_HPP

#include <vector>

#include "cgk/scalar.hpp"

namespace cgk {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

struct KernelResult {
    /// One vector per free column; entry of its own free column is 1.
    std::vector<std::vector<Scalar>> basis;
    /// Monic nonconstant pivots. The rank can drop (and the kernel grow)
    /// only where one of them vanishes.
    std::vector<ParamPoly> caveats;
};

/// Right kernel over the parameter fraction field. Rows are cleared to
/// polynomials and reduced fraction-free (Bareiss), choosing in each column
/// the pivot of lowest total degree.
KernelResult nullspace(const ScalarMatrix& rows, std::size_t cols);

}  // namespace cgk

#endif  // CGK_KERNEL_HPP
