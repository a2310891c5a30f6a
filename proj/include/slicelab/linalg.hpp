#pragma once

/// Exact convex-membership certificates via a small phase-1 simplex.

#include "slicelab/rational.hpp"
#include "slicelab/vec.hpp"

#include <cstddef>
#include <vector>

namespace slicelab {

/// Exact feasibility of { lambda >= 0, sum lambda = 1, sum lambda_i q_i = p }:
/// is p in the convex hull of the points? Phase-1 simplex with Bland's rule.
bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& points);

/// Extreme points of a finite point set (brute force: q is extreme iff q is
/// not in the hull of the others). Returns them sorted lexicographically.
std::vector<RatVec> extreme_points(std::vector<RatVec> points);

}  // namespace slicelab
