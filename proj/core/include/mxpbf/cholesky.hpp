#pragma once

#include "mxpbf/matrix.hpp"

namespace mxpbf {

/// Lower-triangular Cholesky factor L with L L^T = m.
/// Requires m symmetric within 1e-10 (scaled) and positive definite; a
/// non-positive pivot throws NotPositiveDefiniteError carrying its index.
SquareMatrix cholesky(const SquareMatrix& m);

/// Solves L L^T X = I, i.e. the inverse of the factored matrix, by forward
/// and back substitution against each unit vector.
SquareMatrix cholesky_inverse(const SquareMatrix& chol_lower);

}  // namespace mxpbf
