#pragma once

/// Facet enumeration for 3-dimensional slices, the face cut by a cube facet,
/// the face census, and the zonotope/zonoid verdict with witness.

#include "slicelab/cube_slice.hpp"
#include "slicelab/polygon.hpp"
#include "slicelab/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slicelab {

/// One facet of a full-dimensional 3-D point set, found by the supporting
/// plane scan. The plane is outward ({ m . w <= offset } holds for all
/// points), m is a primitive integer vector.
struct HullFacet {
    IntVec normal;
    Rational offset;
    std::vector<std::size_t> vertex_indices;  // cyclic convex order
};

/// Complete facet list of conv(points), points in R^3 spanning 3 dimensions,
/// deduplicated. Plain O(V^3) supporting-plane scan over vertex triples; the
/// inputs here never exceed a few dozen points. Facets are sorted by their
/// canonical (normal, offset) key.
std::vector<HullFacet> hull3_facets(const std::vector<RatVec>& points);

/// Facets of a 3-dimensional slice as polygons in the ambient R^n.
/// Ordered with the t = -1/2-style faces first: by axis descending, negative
/// side before positive, matching the face the worked examples single out.
std::vector<Polygon> facets_3d(const CubeSlice& s);

enum class FaceContact { Polygon2D, Edge, Vertex, Empty, HigherDimensional };

/// Result of cutting the slice with the cube facet { x_axis = sign/2 }: a
/// polygon when the contact is 2-dimensional, otherwise a tagged degenerate
/// carrying the contact points. Slices of dimension above 3 meet a cube facet
/// in a higher-dimensional polytope; that case is tagged, not classified.
struct FaceAt {
    FaceContact contact = FaceContact::Empty;
    std::optional<Polygon> polygon;
    std::vector<RatVec> contact_points;
};

FaceAt face_at(const CubeSlice& s, std::size_t axis, int side_sign);

enum class Verdict { Zonotope, NotZonoid, DegenerateCube };

const char* to_string(Verdict v);

struct ZonotopeVerdict {
    Verdict verdict = Verdict::Zonotope;
    std::optional<Polygon> witness;  // present iff NotZonoid: a non-centrally-symmetric face
    std::string reason;
};

/// Zonotope recognition for slices of dimension <= 3. Dimension <= 2 is
/// always a zonotope (every centrally symmetric convex polygon is a sum of
/// segments); in dimension 3 the slice is a zonotope iff every facet is
/// centrally symmetric, with the first failing facet as witness; a normal
/// with zero entries yields DegenerateCube (cube times a lower slice, always
/// a zonotope). Throws DimensionUnsupported above dimension 3.
ZonotopeVerdict zonotope_verdict(const CubeSlice& s);

/// Facet counts by class for a 3-dimensional slice.
std::map<FaceClass, std::size_t> face_census(const CubeSlice& s);

}  // namespace slicelab
