#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sigalg/norm.hpp"
#include "sigalg/scalar.hpp"

namespace sigalg {

/// Piecewise-linear path in R^d given by its vertex sequence.
///
/// Only the vertex sequence matters; the parametrization is implicit.
/// Zero-length segments are accepted and contribute nothing to the signature.
template <RealScalar S>
class Path {
public:
    /// Throws InvalidArgument when there are no vertices, d == 0, or rows differ in length.
    explicit Path(std::vector<std::vector<S>> points);

    /// Flat row-major coordinates; the size must be a positive multiple of d.
    Path(std::size_t dimension, std::vector<S> coordinates);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t vertex_count() const noexcept { return coords_.size() / dimension_; }
    std::size_t segment_count() const noexcept { return vertex_count() - 1; }

    std::span<const S> vertex(std::size_t i) const;
    std::vector<S> increment(std::size_t segment) const;
    std::span<const S> coordinates() const noexcept { return coords_; }

    friend bool operator==(const Path&, const Path&) = default;

private:
    std::size_t dimension_;
    std::vector<S> coords_;
};

/// p followed by q translated so that it starts at the end of p.
template <RealScalar S>
Path<S> concatenate(const Path<S>& p, const Path<S>& q);

/// p with an extra vertex at the midpoint of the given segment.
template <RealScalar S>
Path<S> insert_midpoint(const Path<S>& p, std::size_t segment);

Path<double> to_f64(const Path<Rational>& p);

/// Sum of increment norms: l1 for L1Projective, l2 for L2HilbertSchmidt.
template <RealScalar S>
double path_length(const Path<S>& path, NormKind kind);

Rational path_length_l1_exact(const Path<Rational>& path);

/// Removes zero segments, merges collinear same-direction neighbours and
/// cancels immediate backtracks (splitting the longer segment on partial overlap)
/// until none of these patterns remain. The result has the same signature and
/// the same starting point.
///
/// This is adjacent cancellation only: excursions that return to an interior
/// point of an earlier edge are not detected, so the output is not guaranteed
/// to be the tree-reduced representative.
///
/// Exact for rational paths; doubles compare with a relative tolerance of 1e-12.
template <RealScalar S>
Path<S> tree_reduce(const Path<S>& path);

}  // namespace sigalg
