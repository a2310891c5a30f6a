#include "slicelab/zonotope.hpp"

#include "slicelab/errors.hpp"
#include "slicelab/linalg.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace slicelab {

namespace {

// sums parallel generators with aligned signs; segments are centered, so the
// sign of a generator is immaterial
std::vector<RatVec> merge_parallel(const std::vector<RatVec>& gens) {
    std::vector<RatVec> merged;
    for (const RatVec& g : gens) {
        if (is_zero(g)) throw ZeroGenerator();
        bool absorbed = false;
        for (RatVec& h : merged) {
            if (!parallel(g, h)) continue;
            h = dot(g, h) > 0 ? add(h, g) : sub(h, g);
            absorbed = true;
            break;
        }
        if (!absorbed) merged.push_back(g);
    }
    return merged;
}

bool upper_half(const RatVec& g) {
    return g[1] > 0 || (g[1] == 0 && g[0] > 0);
}

}  // namespace

Polygon zonotope_from_segments_2d(const SegmentGenerators& gens) {
    if (gens.generators.empty()) throw ZeroGenerator();
    for (const RatVec& g : gens.generators)
        if (g.size() != 2) throw DimensionMismatch("2-D zonotope needs 2-D generators");

    std::vector<RatVec> dirs = merge_parallel(gens.generators);
    for (RatVec& g : dirs)
        if (!upper_half(g)) g = negate(g);

    if (dirs.size() == 1) {
        const RatVec half = scale(Rational(1, 2), dirs[0]);
        return Polygon::degenerate_segment(negate(half), half);
    }

    // angular order; walking the halved generators from the lowest vertex
    // traces one half of the boundary, the other half is its reflection
    std::sort(dirs.begin(), dirs.end(), [](const RatVec& a, const RatVec& b) {
        return a[0] * b[1] - a[1] * b[0] > 0;
    });

    RatVec start(2, Rational(0));
    for (const RatVec& g : dirs) start = sub(start, scale(Rational(1, 2), g));

    std::vector<RatVec> cycle;
    cycle.reserve(2 * dirs.size());
    RatVec cur = start;
    cycle.push_back(cur);
    for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
        cur = add(cur, dirs[i]);
        cycle.push_back(cur);
    }
    const std::size_t m = cycle.size();
    for (std::size_t i = 0; i < m; ++i) cycle.push_back(negate(cycle[i]));

    return Polygon::from_cycle(std::move(cycle));
}

SegmentGenerators decompose_symmetric_polygon(const Polygon& p) {
    if (p.is_degenerate_segment())
        return {{sub(p.vertices()[1], p.vertices()[0])}};
    if (!is_centrally_symmetric(p).symmetric) throw NotCentrallySymmetric();

    const auto& v = p.vertices();
    const std::size_t m = v.size() / 2;
    SegmentGenerators out;
    out.generators.reserve(m);
    for (std::size_t i = 0; i < m; ++i) out.generators.push_back(sub(v[i + 1], v[i]));
    return out;
}

std::vector<RatVec> zonotope_vertices(std::vector<RatVec> generators) {
    if (generators.empty()) throw ZeroGenerator();
    std::vector<RatVec> gens = merge_parallel(generators);
    const std::size_t m = gens.size();
    const std::size_t dim = gens.front().size();
    const RatVec origin(dim, Rational(0));

    // a sign choice selects a vertex iff no conic combination of the signed
    // generators vanishes, i.e. the origin avoids their convex hull
    std::set<RatVec> verts;
    for (std::size_t mask = 0; mask < (std::size_t(1) << (m - 1)); ++mask) {
        std::vector<RatVec> signed_gens(m);
        signed_gens[0] = gens[0];
        for (std::size_t i = 1; i < m; ++i)
            signed_gens[i] = (mask >> (i - 1) & 1) ? negate(gens[i]) : gens[i];
        if (in_convex_hull(origin, signed_gens)) continue;

        RatVec v(dim, Rational(0));
        for (const RatVec& g : signed_gens) v = add(v, g);
        v = scale(Rational(1, 2), v);
        verts.insert(negate(v));
        verts.insert(std::move(v));
    }
    return {verts.begin(), verts.end()};
}

Rational ProjectedZonotope::metric_sq(const RatVec& chart_vec) const {
    if (chart_vec.size() != basis.size())
        throw DimensionMismatch("chart vector length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < chart_vec.size(); ++i)
        s += chart_vec[i] * chart_vec[i] * basis_sq_len[i];
    return s;
}

RatVec ProjectedZonotope::chart_coordinates(const RatVec& ambient) const {
    RatVec out(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        out[j] = dot(ambient, basis[j]) / basis_sq_len[j];
    return out;
}

Polygon ProjectedZonotope::polygon() const {
    if (chart_dimension != 2) throw Error("shadow is not 2-dimensional");
    return zonotope_from_segments_2d({generators});
}

ProjectedZonotope project_cube(std::size_t n, const RatVec& direction) {
    if (n < 2 || n > 8) throw DimensionOutOfRange(n);
    if (direction.size() != n) throw DimensionMismatch("direction length != n");
    if (is_zero(direction)) throw ZeroDirection();

    ProjectedZonotope z;
    const Rational dd = squared_norm(direction);

    // rational Gram-Schmidt with deferred normalization: coordinates stay
    // rational, lengths live in basis_sq_len
    for (std::size_t k = 0; k < n && z.basis.size() < n - 1; ++k) {
        RatVec w(n, Rational(0));
        w[k] = 1;
        w = sub(w, scale(direction[k] / dd, direction));
        for (std::size_t j = 0; j < z.basis.size(); ++j)
            w = sub(w, scale(dot(w, z.basis[j]) / z.basis_sq_len[j], z.basis[j]));
        if (is_zero(w)) continue;
        z.basis_sq_len.push_back(squared_norm(w));
        z.basis.push_back(std::move(w));
    }
    z.chart_dimension = z.basis.size();

    for (std::size_t i = 0; i < n; ++i) {
        RatVec g(z.basis.size());
        for (std::size_t j = 0; j < z.basis.size(); ++j)
            g[j] = z.basis[j][i] / z.basis_sq_len[j];  // e_i . b_j = b_j[i]
        if (!is_zero(g)) z.generators.push_back(std::move(g));
    }
    z.generators = merge_parallel(z.generators);
    z.vertices = zonotope_vertices(z.generators);
    return z;
}

}  // namespace slicelab
