#pragma once

#include <span>

#include "mxpbf/matrix.hpp"
#include "mxpbf/rng.hpp"

namespace mxpbf {

/// Draws `count` iid rows from N(mu, L L^T) given the lower Cholesky factor L.
/// Fully determined by the rng stream: rows are generated in order, each as
/// mu + L z with z standard normal.
SampleMatrix sample_mvn(Rng& rng, std::span<const double> mu, const SquareMatrix& chol_lower,
                        std::size_t count);

}  // namespace mxpbf
