#pragma once

/// Constructive zonotope machinery: Minkowski sums of centered segments,
/// the converse decomposition of centrally symmetric polygons, and shadows
/// of cubes under orthogonal projection.

#include "slicelab/polygon.hpp"
#include "slicelab/rational.hpp"
#include "slicelab/vec.hpp"

#include <cstddef>
#include <vector>

namespace slicelab {

/// Generators g_1..g_m; each spans the centered segment [-g/2, +g/2] and the
/// zonotope is their Minkowski sum.
struct SegmentGenerators {
    std::vector<RatVec> generators;
};

/// The convex polygon sum of centered 2-D segments, built by sorting the
/// generators by angle and walking the boundary. Parallel generators merge
/// (summed with aligned signs) before the walk, so m pairwise non-parallel
/// generators yield exactly 2m vertices. A single merged direction yields the
/// degenerate two-vertex segment. Throws ZeroGenerator.
Polygon zonotope_from_segments_2d(const SegmentGenerators& gens);

/// Constructive converse for centrally symmetric polygons: the edge vectors
/// of one half of the boundary generate the polygon. For a polygon centered
/// at the origin, zonotope_from_segments_2d on the result reproduces the
/// vertex set exactly; for a translate it rebuilds the origin-centered copy.
/// Throws NotCentrallySymmetric.
SegmentGenerators decompose_symmetric_polygon(const Polygon& p);

/// Vertex set of the Minkowski sum of centered segments in any dimension:
/// a sign vector e is a vertex selector iff the origin is outside
/// conv{e_i g_i}, and the vertex is sum(e_i g_i)/2. Parallel generators are
/// merged first. Result sorted lexicographically.
std::vector<RatVec> zonotope_vertices(std::vector<RatVec> generators);

/// Orthogonal shadow of Q^n along `direction`, described in an exact chart of
/// the orthogonal complement: a rational orthogonal (not normalized) basis
/// built by Gram-Schmidt. Coordinates stay rational; metric quantities use
/// the stored squared basis lengths.
struct ProjectedZonotope {
    std::size_t chart_dimension = 0;
    std::vector<RatVec> basis;            // orthogonal, rational, spans direction^perp
    std::vector<Rational> basis_sq_len;   // |b_i|^2
    std::vector<RatVec> generators;       // chart images of the axis segments, merged
    std::vector<RatVec> vertices;         // chart coordinates, sorted

    /// Squared Euclidean length of a chart vector under the basis metric.
    Rational metric_sq(const RatVec& chart_vec) const;

    /// Chart coordinates of an ambient point (its projection).
    RatVec chart_coordinates(const RatVec& ambient) const;

    /// The shadow as a polygon when the chart is 2-dimensional.
    Polygon polygon() const;
};

/// Shadow of the unit cube Q^n along a nonzero direction, n <= 8.
/// Throws ZeroDirection / DimensionOutOfRange.
ProjectedZonotope project_cube(std::size_t n, const RatVec& direction);

}  // namespace slicelab
