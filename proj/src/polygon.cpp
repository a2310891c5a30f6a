#include "slicelab/polygon.hpp"

#include "slicelab/errors.hpp"
#include "slicelab/linalg.hpp"

#include <algorithm>
#include <utility>

namespace slicelab {

const char* to_string(FaceClass c) {
    switch (c) {
        case FaceClass::Triangle: return "Triangle";
        case FaceClass::Parallelogram: return "Parallelogram";
        case FaceClass::Trapezium: return "Trapezium";
        case FaceClass::Pentagon: return "Pentagon";
        case FaceClass::Hexagon: return "Hexagon";
        case FaceClass::OtherCentrallySymmetric: return "OtherCentrallySymmetric";
        case FaceClass::OtherAsymmetric: return "OtherAsymmetric";
    }
    return "?";
}

namespace {

RatVec centroid(const std::vector<RatVec>& pts) {
    RatVec c(pts.front().size(), Rational(0));
    for (const RatVec& p : pts) c = add(c, p);
    return scale(Rational(1, Int(pts.size())), c);
}

// 2-D coordinates of each point in the plane spanned by the set, relative to
// the centroid; throws when the set is not coplanar / not 2-dimensional.
struct PlaneChart {
    RatVec origin, u, v;
    std::vector<std::pair<Rational, Rational>> coords;
};

PlaneChart plane_chart(const std::vector<RatVec>& pts) {
    PlaneChart chart;
    chart.origin = centroid(pts);

    for (const RatVec& p : pts) {
        RatVec w = sub(p, chart.origin);
        if (is_zero(w)) continue;
        if (chart.u.empty()) {
            chart.u = w;
        } else if (chart.v.empty() && !parallel(chart.u, w)) {
            chart.v = w;
            break;
        }
    }
    if (chart.u.empty() || chart.v.empty())
        throw InvalidPolygon("vertex set does not span 2 dimensions");

    const Rational uu = dot(chart.u, chart.u);
    const Rational uv = dot(chart.u, chart.v);
    const Rational vv = dot(chart.v, chart.v);
    const Rational det = uu * vv - uv * uv;  // > 0 for independent u, v

    chart.coords.reserve(pts.size());
    for (const RatVec& p : pts) {
        RatVec w = sub(p, chart.origin);
        const Rational wu = dot(w, chart.u);
        const Rational wv = dot(w, chart.v);
        const Rational alpha = (wu * vv - wv * uv) / det;
        const Rational beta = (uu * wv - uv * wu) / det;
        // the chart must reproduce the point exactly, i.e. the set is coplanar
        RatVec back = add(chart.origin, add(scale(alpha, chart.u), scale(beta, chart.v)));
        if (back != p) throw InvalidPolygon("vertices are not coplanar");
        chart.coords.emplace_back(alpha, beta);
    }
    return chart;
}

bool collinear(const RatVec& a, const RatVec& b, const RatVec& c) {
    return parallel(sub(b, a), sub(c, a));
}

// drops vertices lying on the segment between their cyclic neighbours
std::vector<RatVec> merge_collinear(std::vector<RatVec> v) {
    bool changed = true;
    while (changed && v.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const RatVec& prev = v[(i + v.size() - 1) % v.size()];
            const RatVec& next = v[(i + 1) % v.size()];
            if (collinear(prev, v[i], next)) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return v;
}

void validate_convex_cycle(const std::vector<RatVec>& v) {
    if (v.size() < 3) throw InvalidPolygon("polygon needs at least 3 vertices");
    PlaneChart chart = plane_chart(v);
    int orientation = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = chart.coords[i];
        const auto& b = chart.coords[(i + 1) % v.size()];
        const auto& c = chart.coords[(i + 2) % v.size()];
        const Rational cr = (b.first - a.first) * (c.second - a.second) -
                            (c.first - a.first) * (b.second - a.second);
        const int s = sign(cr);
        if (s == 0) throw InvalidPolygon("three consecutive vertices collinear");
        if (orientation == 0)
            orientation = s;
        else if (s != orientation)
            throw InvalidPolygon("vertex cycle is not convex");
    }
}

}  // namespace

Polygon Polygon::from_cycle(std::vector<RatVec> vertices, std::optional<SupportPlane> support) {
    Polygon p;
    p.vertices_ = merge_collinear(std::move(vertices));
    p.support_ = std::move(support);
    validate_convex_cycle(p.vertices_);
    return p;
}

Polygon Polygon::from_unordered(std::vector<RatVec> points, std::optional<SupportPlane> support) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) throw InvalidPolygon("polygon needs at least 3 vertices");

    PlaneChart chart = plane_chart(points);

    // counterclockwise angular order around the centroid, exact
    std::vector<std::size_t> idx(points.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    auto half = [](const std::pair<Rational, Rational>& c) {
        return (c.second > 0 || (c.second == 0 && c.first > 0)) ? 0 : 1;
    };
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        const auto& a = chart.coords[i];
        const auto& b = chart.coords[j];
        const int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        const Rational cr = a.first * b.second - a.second * b.first;
        if (cr != 0) return cr > 0;
        // same ray: nearer point first, the collinear merge removes it
        return a.first * a.first + a.second * a.second <
               b.first * b.first + b.second * b.second;
    });

    std::vector<RatVec> ordered;
    ordered.reserve(points.size());
    for (std::size_t i : idx) ordered.push_back(points[i]);
    return from_cycle(std::move(ordered), std::move(support));
}

Polygon Polygon::degenerate_segment(RatVec a, RatVec b) {
    if (a == b) throw InvalidPolygon("degenerate segment needs two distinct points");
    Polygon p;
    p.vertices_ = {std::move(a), std::move(b)};
    return p;
}

std::vector<std::pair<Rational, Rational>> Polygon::coordinate_chart(std::size_t i,
                                                                     std::size_t j) const {
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(vertices_.size());
    for (const RatVec& v : vertices_) {
        if (i >= v.size() || j >= v.size()) throw AxisOutOfRange(std::max(i, j), v.size());
        out.emplace_back(v[i], v[j]);
    }
    return out;
}

std::vector<RatVec> Polygon::sorted_vertices() const {
    std::vector<RatVec> s = vertices_;
    std::sort(s.begin(), s.end());
    return s;
}

bool Polygon::same_vertex_set(const Polygon& o) const {
    return sorted_vertices() == o.sorted_vertices();
}

FaceClass classify_polygon(const Polygon& p) {
    if (p.is_degenerate_segment()) throw InvalidPolygon("cannot classify a degenerate segment");
    const auto& v = p.vertices();
    const std::size_t k = v.size();
    switch (k) {
        case 3:
            return FaceClass::Triangle;
        case 4: {
            const RatVec s0 = sub(v[1], v[0]);
            const RatVec s1 = sub(v[2], v[1]);
            const RatVec s2 = sub(v[3], v[2]);
            const RatVec s3 = sub(v[0], v[3]);
            const bool p02 = parallel(s0, s2);
            const bool p13 = parallel(s1, s3);
            if (p02 && p13) return FaceClass::Parallelogram;
            if (p02 || p13) return FaceClass::Trapezium;
            return FaceClass::OtherAsymmetric;
        }
        case 5:
            return FaceClass::Pentagon;
        case 6:
            return FaceClass::Hexagon;
        default:
            return is_centrally_symmetric(p).symmetric ? FaceClass::OtherCentrallySymmetric
                                                       : FaceClass::OtherAsymmetric;
    }
}

SymmetryResult is_centrally_symmetric(const Polygon& p) {
    const auto& v = p.vertices();
    if (v.size() % 2 != 0) return {};
    const std::size_t m = v.size() / 2;
    RatVec center = midpoint(v[0], v[m]);
    for (std::size_t i = 1; i < m; ++i)
        if (midpoint(v[i], v[i + m]) != center) return {};
    return {true, std::move(center)};
}

}  // namespace slicelab
