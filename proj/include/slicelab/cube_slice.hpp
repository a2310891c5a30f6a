#pragma once

/// The central slice H = { normal . x = 0 } of the unit cube Q^n (centered at
/// the origin, side 1) and its sections by coordinate planes. Everything here
/// is exact; the slice of an n-cube by a central hyperplane is an
/// (n-1)-polytope given by its vertex set.

#include "slicelab/hyperplane.hpp"
#include "slicelab/rational.hpp"
#include "slicelab/vec.hpp"

#include <cstddef>
#include <vector>

namespace slicelab {

struct CubeSlice {
    std::size_t dimension = 0;  // ambient n
    Hyperplane hyperplane;
    std::vector<RatVec> vertices;  // deduplicated, sorted lexicographically

    /// Dimension of the affine hull of the vertex set (the hull contains the
    /// origin, so this is the rank of the vertex matrix).
    std::size_t affine_dimension() const;
};

/// Vertex set of H intersected with Q^n: the cube vertices lying on H plus,
/// for every cube edge whose endpoints are strictly on opposite sides, the
/// unique rational crossing point. Requires 2 <= n <= 8 and h of length n.
CubeSlice slice_vertices(const Hyperplane& h, std::size_t n);

inline CubeSlice slice_vertices(const Hyperplane& h) {
    return slice_vertices(h, h.dimension());
}

/// Vertex set of the slice cut by { x_axis = level }, |level| <= 1/2.
/// Empty when the plane misses the slice; equal to the slice's own vertex set
/// in the degenerate case where the plane contains the whole slice.
std::vector<RatVec> section_vertices(const CubeSlice& s, std::size_t axis,
                                     const Rational& level);

}  // namespace slicelab
