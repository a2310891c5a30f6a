#pragma once

/// Convex polygons embedded in R^n (n >= 2) with exact rational vertices,
/// their classification, and the central-symmetry test.

#include "slicelab/rational.hpp"
#include "slicelab/surd.hpp"
#include "slicelab/vec.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace slicelab {

/// A supporting hyperplane { x : normal . x = offset } with the convention
/// that the supported body satisfies normal . x <= offset.
struct SupportPlane {
    RatVec normal;
    Rational offset;

    bool operator==(const SupportPlane& o) const {
        return normal == o.normal && offset == o.offset;
    }
};

enum class FaceClass {
    Triangle,
    Parallelogram,
    Trapezium,  // exactly one pair of parallel sides
    Pentagon,
    Hexagon,
    OtherCentrallySymmetric,
    OtherAsymmetric,
};

const char* to_string(FaceClass c);

class Polygon {
public:
    /// From vertices already in convex cyclic order. Consecutive collinear
    /// vertices are merged; fewer than 3 surviving vertices or a vertex set
    /// that does not span exactly 2 dimensions is rejected (InvalidPolygon).
    static Polygon from_cycle(std::vector<RatVec> vertices,
                              std::optional<SupportPlane> support = std::nullopt);

    /// From an unordered vertex set of a convex polygon: points are sorted
    /// into counterclockwise order around their centroid in an exact 2-D
    /// chart of their plane.
    static Polygon from_unordered(std::vector<RatVec> points,
                                  std::optional<SupportPlane> support = std::nullopt);

    /// Two-point degenerate "polygon" (a segment); only zonotope construction
    /// produces these. Regular polygon operations reject it.
    static Polygon degenerate_segment(RatVec a, RatVec b);

    const std::vector<RatVec>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    bool is_degenerate_segment() const { return vertices_.size() == 2; }
    const std::optional<SupportPlane>& support() const { return support_; }

    std::size_t ambient_dimension() const {
        return vertices_.empty() ? 0 : vertices_.front().size();
    }

    /// Vertices as (x_i, x_j) pairs; the polygon's own 2-D chart.
    std::vector<std::pair<Rational, Rational>> coordinate_chart(std::size_t i,
                                                                std::size_t j) const;

    /// Lexicographically sorted copy of the vertex list (order-free identity).
    std::vector<RatVec> sorted_vertices() const;

    bool same_vertex_set(const Polygon& o) const;

private:
    Polygon() = default;
    std::vector<RatVec> vertices_;  // cyclic convex order, no three consecutive collinear
    std::optional<SupportPlane> support_;
};

FaceClass classify_polygon(const Polygon& p);

struct SymmetryResult {
    bool symmetric = false;
    std::optional<RatVec> center;  // present iff symmetric
};

/// True iff the vertex count is even and all vertex pairs (i, i+m) share one
/// midpoint; that midpoint is the center.
SymmetryResult is_centrally_symmetric(const Polygon& p);

}  // namespace slicelab
