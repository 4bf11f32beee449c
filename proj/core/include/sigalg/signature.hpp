#pragma once

#include <cstddef>

#include "sigalg/path.hpp"
#include "sigalg/tensor.hpp"

namespace sigalg {

/// Truncated signature of a piecewise-linear path: the Chen product of the
/// segment exponentials. Exact when the path is rational.
template <RealScalar S>
Tensor<S> signature(const Path<S>& path, std::size_t depth);

/// Left-point iterated Riemann sums on a uniform time grid.
///
/// Each segment occupies one unit of time and is cut into ceil(1 / mesh)
/// equal steps, so mesh must lie in (0, 1]. Intended as an independent check
/// on signature(); converges at first order in mesh.
Tensor<double> riemann_signature(const Path<double>& path, std::size_t depth, double mesh);

}  // namespace sigalg
