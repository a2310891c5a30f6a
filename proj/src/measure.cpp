#include "slicelab/measure.hpp"

#include "slicelab/errors.hpp"
#include "slicelab/facets.hpp"
#include "slicelab/parallel.hpp"

#include <algorithm>

namespace slicelab {

namespace {

Rational shoelace_abs(const std::vector<std::pair<Rational, Rational>>& chart) {
    Rational twice = 0;
    for (std::size_t i = 0; i < chart.size(); ++i) {
        const auto& a = chart[i];
        const auto& b = chart[(i + 1) % chart.size()];
        twice += a.first * b.second - b.first * a.second;
    }
    return rational_abs(twice) / 2;
}

}  // namespace

SurdValue polygon_area(const Polygon& p) {
    if (p.is_degenerate_segment()) throw InvalidPolygon("degenerate segment has no area");
    const auto& v = p.vertices();

    // chart the polygon's plane with two edge vectors; the Euclidean area is
    // the chart shoelace area times sqrt of the basis Gram determinant
    const RatVec u = sub(v[1], v[0]);
    RatVec w;
    for (std::size_t i = 2; i < v.size(); ++i) {
        RatVec cand = sub(v[i], v[0]);
        if (!parallel(u, cand)) {
            w = std::move(cand);
            break;
        }
    }
    if (w.empty()) throw InvalidPolygon("polygon does not span 2 dimensions");

    const Rational uu = dot(u, u);
    const Rational uv = dot(u, w);
    const Rational vv = dot(w, w);
    const Rational gram = uu * vv - uv * uv;

    std::vector<std::pair<Rational, Rational>> chart;
    chart.reserve(v.size());
    for (const RatVec& q : v) {
        const RatVec r = sub(q, v[0]);
        const Rational ru = dot(r, u);
        const Rational rv = dot(r, w);
        chart.emplace_back((ru * vv - rv * uv) / gram, (uu * rv - uv * ru) / gram);
    }
    return SurdValue::sqrt_of(gram) * shoelace_abs(chart);
}

SurdValue slice_volume_exact(const CubeSlice& s) {
    if (s.affine_dimension() != 3) throw NotThreeDimensional();
    const std::size_t n = s.dimension;
    const IntVec& a = s.hyperplane.normal();
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

    // by central symmetry the origin is interior, so the image volume is the
    // sum over facets of origin-apex simplices
    Rational six_vol = 0;
    for (const HullFacet& f : hull3_facets(chart)) {
        Rational part = 0;
        const auto& idx = f.vertex_indices;
        for (std::size_t i = 1; i + 1 < idx.size(); ++i) {
            const RatVec& p = chart[idx[0]];
            const RatVec& q = chart[idx[i]];
            const RatVec& r = chart[idx[i + 1]];
            part += dot(p, cross3(q, r));
        }
        six_vol += rational_abs(part);
    }

    // undo the chart distortion: the projection that drops coordinate k
    // scales (n-1)-volume by |a_k| / |a|
    const Rational vol = six_vol / 6;
    return SurdValue(vol / Rational(int_abs(a[drop])), s.hyperplane.squared_norm());
}

AreaValue section_area(const CubeSlice& s, std::size_t axis, const Rational& level) {
    const std::size_t n = s.dimension;
    if (axis >= n) throw AxisOutOfRange(axis, n);
    const IntVec& a = s.hyperplane.normal();

    std::size_t k = n;  // chart's solved-out coordinate: largest |a_k| off the axis
    for (std::size_t i = 0; i < n; ++i) {
        if (i == axis || a[i] == 0) continue;
        if (k == n || int_abs(a[i]) > int_abs(a[k])) k = i;
    }

    Int off_axis_sq = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (i != axis) off_axis_sq += a[i] * a[i];

    AreaValue out;
    out.dropped_coordinate = k == n ? axis : k;
    out.scale_factor = k == n ? SurdValue(Rational(1))
                              : SurdValue(Rational(1, int_abs(a[k])), off_axis_sq);

    std::vector<RatVec> pts = section_vertices(s, axis, level);
    if (pts.size() < 3) return out;  // empty / vertex / edge contact: zero area

    std::vector<RatVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    if (rank(diffs) != 2) throw Error("section is not two-dimensional");

    std::vector<std::size_t> chart_axes;
    for (std::size_t i = 0; i < n; ++i)
        if (i != axis && i != k) chart_axes.push_back(i);
    if (chart_axes.size() != 2) throw Error("section chart requires ambient dimension 4");

    Polygon poly = Polygon::from_unordered(std::move(pts));
    out.chart_area = shoelace_abs(poly.coordinate_chart(chart_axes[0], chart_axes[1]));
    out.value = out.scale_factor * out.chart_area;
    return out;
}

std::vector<std::pair<Rational, AreaValue>> section_area_profile(
    const CubeSlice& s, std::size_t axis, const std::vector<Rational>& levels) {
    for (const Rational& lv : levels)
        if (rational_abs(lv) > Rational(1, 2))
            throw Error("section level must satisfy |level| <= 1/2");

    std::vector<std::pair<Rational, AreaValue>> out(levels.size());
    parallel_for(levels.size(), [&](std::size_t i) {
        out[i] = {levels[i], section_area(s, axis, levels[i])};
    });
    return out;
}

}  // namespace slicelab
