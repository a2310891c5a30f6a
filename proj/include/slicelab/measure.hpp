#pragma once

/// Exact areas and volumes: polygon areas as q*sqrt(r), the slice volume by
/// projection and simplicial decomposition, and section area profiles.

#include "slicelab/cube_slice.hpp"
#include "slicelab/polygon.hpp"
#include "slicelab/surd.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace slicelab {

/// A section area split into the exact area of its coordinate-plane chart
/// and the metric correction of that chart, value = chart_area * scale_factor.
struct AreaValue {
    SurdValue value;        // Euclidean area of the section polygon
    Rational chart_area;    // shoelace area of the coordinate projection
    SurdValue scale_factor; // sqrt(sum of squared normal entries off the axis) / |a_k|
    std::size_t dropped_coordinate = 0;  // the chart's solved-out coordinate k
};

/// Euclidean area of a convex polygon embedded in R^n, exact.
SurdValue polygon_area(const Polygon& p);

/// Exact (n-1)-volume of a 3-dimensional slice, measured in its hyperplane
/// with respect to the unit normal: the polytope is projected out along the
/// largest normal coordinate, the image volume is summed over origin-apex
/// simplices, and the result is rescaled by sqrt(|a|^2)/|a_k|.
SurdValue slice_volume_exact(const CubeSlice& s);

/// Exact section areas at the given levels (each |level| <= 1/2); at
/// |level| = 1/2 this is the face's area. Degenerate contacts get area zero.
std::vector<std::pair<Rational, AreaValue>> section_area_profile(
    const CubeSlice& s, std::size_t axis, const std::vector<Rational>& levels);

/// Single-level version of the profile.
AreaValue section_area(const CubeSlice& s, std::size_t axis, const Rational& level);

}  // namespace slicelab
