#pragma once

#include "slicelab/rational.hpp"

#include <cstddef>
#include <vector>

namespace slicelab {

using RatVec = std::vector<Rational>;
using IntVec = std::vector<Int>;

Rational dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rational& s, const RatVec& v);
RatVec negate(const RatVec& v);
bool is_zero(const RatVec& v);

/// 3-D cross product.
RatVec cross3(const RatVec& a, const RatVec& b);

/// true iff a and b span at most one dimension.
bool parallel(const RatVec& a, const RatVec& b);

/// Rank of the span of the given vectors (exact Gaussian elimination).
std::size_t rank(std::vector<RatVec> rows);

/// Midpoint of two points.
RatVec midpoint(const RatVec& a, const RatVec& b);

Rational squared_norm(const RatVec& v);

RatVec to_ratvec(const IntVec& v);

std::string to_string(const RatVec& v);

}  // namespace slicelab
