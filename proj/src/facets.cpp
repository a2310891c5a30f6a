#include "slicelab/facets.hpp"

#include "slicelab/errors.hpp"

#include <boost/integer/common_factor.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

namespace slicelab {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Zonotope: return "Zonotope";
        case Verdict::NotZonoid: return "NotZonoid";
        case Verdict::DegenerateCube: return "DegenerateCube";
    }
    return "?";
}

namespace {

// identity-canonical form of the plane { w : n.w = b }: primitive integer
// normal with positive leading entry, offset rescaled along
std::pair<IntVec, Rational> canonical_plane(const RatVec& n, const Rational& b) {
    Int lcm = 1;
    for (const Rational& x : n) lcm = boost::integer::lcm(lcm, denominator(x));
    IntVec m(n.size());
    Int g = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        m[i] = numerator(n[i]) * (lcm / denominator(n[i]));
        g = boost::integer::gcd(g, m[i]);
    }
    int lead = 0;
    for (const Int& x : m)
        if (x != 0) {
            lead = sign(x);
            break;
        }
    if (lead < 0) g = -g;
    for (Int& x : m) x /= g;
    return {std::move(m), b * Rational(lcm) / Rational(g)};
}

// counterclockwise cyclic order of coplanar 3-D points around their centroid,
// charted by dropping the largest normal coordinate
std::vector<std::size_t> cyclic_order(const std::vector<RatVec>& pts,
                                      const std::vector<std::size_t>& on,
                                      const IntVec& normal) {
    std::size_t drop = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (int_abs(normal[i]) > int_abs(normal[drop])) drop = i;
    const std::size_t a = drop == 0 ? 1 : 0;
    const std::size_t b = drop == 2 ? 1 : 2;

    Rational cx = 0, cy = 0;
    for (std::size_t i : on) {
        cx += pts[i][a];
        cy += pts[i][b];
    }
    cx /= Rational(Int(on.size()));
    cy /= Rational(Int(on.size()));

    auto half = [](const Rational& x, const Rational& y) {
        return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
    };
    std::vector<std::size_t> order = on;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const Rational xi = pts[i][a] - cx, yi = pts[i][b] - cy;
        const Rational xj = pts[j][a] - cx, yj = pts[j][b] - cy;
        const int hi = half(xi, yi), hj = half(xj, yj);
        if (hi != hj) return hi < hj;
        const Rational cr = xi * yj - yi * xj;
        if (cr != 0) return cr > 0;
        return xi * xi + yi * yi < xj * xj + yj * yj;
    });
    return order;
}

}  // namespace

std::vector<HullFacet> hull3_facets(const std::vector<RatVec>& points) {
    if (rank(points) < 3) throw NotThreeDimensional();
    const std::size_t n = points.size();

    std::map<std::pair<IntVec, Rational>, std::optional<HullFacet>> planes;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                RatVec nor = cross3(sub(points[j], points[i]), sub(points[k], points[i]));
                if (is_zero(nor)) continue;
                auto key = canonical_plane(nor, dot(nor, points[i]));
                auto [it, fresh] = planes.try_emplace(key, std::nullopt);
                if (!fresh) continue;

                const RatVec m = to_ratvec(key.first);
                const Rational& beta = key.second;
                bool above = false, below = false;
                std::vector<std::size_t> on;
                for (std::size_t l = 0; l < n; ++l) {
                    const int s = sign(dot(m, points[l]) - beta);
                    if (s > 0) above = true;
                    if (s < 0) below = true;
                    if (s == 0) on.push_back(l);
                    if (above && below) break;
                }
                if (above && below) continue;  // plane cuts the set: not a facet

                HullFacet f;
                if (above) {  // flip to the outward form m.w <= offset
                    f.normal = key.first;
                    for (Int& x : f.normal) x = -x;
                    f.offset = -beta;
                } else {
                    f.normal = key.first;
                    f.offset = beta;
                }
                f.vertex_indices = cyclic_order(points, on, f.normal);
                it->second = std::move(f);
            }
        }
    }

    std::vector<HullFacet> out;
    for (auto& [key, f] : planes)
        if (f) out.push_back(std::move(*f));
    std::sort(out.begin(), out.end(), [](const HullFacet& x, const HullFacet& y) {
        if (x.normal != y.normal) return x.normal < y.normal;
        return x.offset < y.offset;
    });
    return out;
}

namespace {

struct LiftedFacet {
    Polygon polygon;
    std::size_t priority;  // axis descending, negative side first
    IntVec chart_normal;
    Rational chart_offset;
};

// every facet of the slice lies in a cube facet { x_axis = +-1/2 }; the
// worked examples always look at t = -1/2 first, so facets are ordered by
// axis descending with the negative side ahead of the positive one
std::vector<LiftedFacet> lifted_facets(const CubeSlice& s) {
    if (s.affine_dimension() != 3) throw NotThreeDimensional();
    const std::size_t n = s.dimension;
    const std::size_t drop = s.hyperplane.max_abs_index();

    std::vector<RatVec> chart;
    chart.reserve(s.vertices.size());
    for (const RatVec& v : s.vertices) {
        RatVec w;
        w.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            if (i != drop) w.push_back(v[i]);
        chart.push_back(std::move(w));
    }

    const Rational half(1, 2);
    std::vector<LiftedFacet> out;
    for (const HullFacet& f : hull3_facets(chart)) {
        std::vector<RatVec> cycle;
        cycle.reserve(f.vertex_indices.size());
        for (std::size_t idx : f.vertex_indices) cycle.push_back(s.vertices[idx]);

        std::size_t best = 2 * n;  // priority rank; lower comes first
        std::optional<SupportPlane> support;
        for (std::size_t axis = 0; axis < n; ++axis) {
            for (int sg : {-1, +1}) {
                const Rational lev = sg < 0 ? -half : half;
                bool all = true;
                for (const RatVec& p : cycle)
                    if (p[axis] != lev) {
                        all = false;
                        break;
                    }
                if (!all) continue;
                const std::size_t pr = 2 * (n - 1 - axis) + (sg < 0 ? 0 : 1);
                if (pr < best) {
                    best = pr;
                    RatVec nvec(n, Rational(0));
                    nvec[axis] = Rational(sg);
                    support = SupportPlane{std::move(nvec), half};
                }
            }
        }
        if (!support) throw Error("slice facet not contained in any cube facet");

        out.push_back(LiftedFacet{Polygon::from_cycle(std::move(cycle), std::move(support)),
                                  best, f.normal, f.offset});
    }

    std::sort(out.begin(), out.end(), [](const LiftedFacet& x, const LiftedFacet& y) {
        if (x.priority != y.priority) return x.priority < y.priority;
        if (x.chart_normal != y.chart_normal) return x.chart_normal < y.chart_normal;
        return x.chart_offset < y.chart_offset;
    });
    return out;
}

}  // namespace

std::vector<Polygon> facets_3d(const CubeSlice& s) {
    std::vector<Polygon> out;
    for (auto& f : lifted_facets(s)) out.push_back(std::move(f.polygon));
    return out;
}

FaceAt face_at(const CubeSlice& s, std::size_t axis, int side_sign) {
    if (axis >= s.dimension) throw AxisOutOfRange(axis, s.dimension);
    if (side_sign != 1 && side_sign != -1) throw Error("face side sign must be +1 or -1");

    const Rational level(side_sign, 2);
    std::vector<RatVec> pts = section_vertices(s, axis, level);

    FaceAt result;
    result.contact_points = pts;
    if (pts.size() >= 3) {
        std::vector<RatVec> diffs;
        for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
        if (rank(diffs) > 2) {
            result.contact = FaceContact::HigherDimensional;
            return result;
        }
        RatVec nvec(s.dimension, Rational(0));
        nvec[axis] = Rational(side_sign);
        result.polygon =
            Polygon::from_unordered(std::move(pts), SupportPlane{std::move(nvec), Rational(1, 2)});
        result.contact = FaceContact::Polygon2D;
    } else if (pts.size() == 2) {
        result.contact = FaceContact::Edge;
    } else if (pts.size() == 1) {
        result.contact = FaceContact::Vertex;
    } else {
        result.contact = FaceContact::Empty;
    }
    return result;
}

ZonotopeVerdict zonotope_verdict(const CubeSlice& s) {
    const std::size_t d = s.affine_dimension();
    if (d > 3) throw DimensionUnsupported(d);

    if (s.hyperplane.degenerate())
        return {Verdict::DegenerateCube, std::nullopt,
                "normal has zero entries: the slice is a cube factor times a "
                "lower-dimensional slice, hence a zonotope"};

    if (d <= 2)
        return {Verdict::Zonotope, std::nullopt,
                "slice dimension <= 2: every centrally symmetric polygon is a sum of segments"};

    for (const Polygon& f : facets_3d(s)) {
        if (is_centrally_symmetric(f).symmetric) continue;
        std::string reason;
        switch (classify_polygon(f)) {
            case FaceClass::Triangle: reason = "triangle face"; break;
            case FaceClass::Trapezium: reason = "trapezium face"; break;
            case FaceClass::Pentagon: reason = "pentagon face"; break;
            case FaceClass::Hexagon: reason = "hexagon face without central symmetry"; break;
            default: reason = "face without central symmetry"; break;
        }
        return {Verdict::NotZonoid, f, reason + ": not a zonoid"};
    }
    return {Verdict::Zonotope, std::nullopt, "every facet is centrally symmetric"};
}

std::map<FaceClass, std::size_t> face_census(const CubeSlice& s) {
    std::map<FaceClass, std::size_t> counts;
    for (const Polygon& f : facets_3d(s)) ++counts[classify_polygon(f)];
    return counts;
}

}  // namespace slicelab
