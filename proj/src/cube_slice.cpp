#include "slicelab/cube_slice.hpp"

#include "slicelab/errors.hpp"

#include <set>

namespace slicelab {

namespace {

constexpr std::size_t kMinDim = 2;
constexpr std::size_t kMaxDim = 8;  // the exact pipeline scans 2^n cube vertices

}  // namespace

std::size_t CubeSlice::affine_dimension() const {
    // the vertex set is centrally symmetric, so its affine hull is a linear
    // subspace and the dimension is the rank of the vertex matrix
    return rank(vertices);
}

CubeSlice slice_vertices(const Hyperplane& h, std::size_t n) {
    if (n < kMinDim || n > kMaxDim) throw DimensionOutOfRange(n);
    if (h.dimension() != n)
        throw DimensionMismatch("hyperplane has length " + std::to_string(h.dimension()) +
                                ", expected " + std::to_string(n));

    const IntVec& a = h.normal();
    const Rational half(1, 2);
    std::set<RatVec> found;

    // cube vertices lying exactly on H: sum of signed coefficients vanishes
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += (mask >> i & 1) ? a[i] : Int(-a[i]);
        if (s != 0) continue;
        RatVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i & 1) ? half : -half;
        found.insert(std::move(v));
    }

    // edge crossings: endpoints strictly on opposite sides of H
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k] == 0) continue;
        for (std::size_t mask = 0; mask < (std::size_t(1) << (n - 1)); ++mask) {
            Int t = 0;  // twice the fixed-coordinate part of normal . x
            RatVec v(n);
            std::size_t bit = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == k) continue;
                const bool plus = (mask >> bit & 1) != 0;
                t += plus ? a[i] : Int(-a[i]);
                v[i] = plus ? half : -half;
                ++bit;
            }
            if (int_abs(t) >= int_abs(a[k])) continue;  // no strict sign change
            v[k] = Rational(-t) / Rational(2 * a[k]);
            found.insert(std::move(v));
        }
    }

    CubeSlice s{n, h, {found.begin(), found.end()}};
    return s;
}

std::vector<RatVec> section_vertices(const CubeSlice& s, std::size_t axis,
                                     const Rational& level) {
    const std::size_t n = s.dimension;
    if (axis >= n) throw AxisOutOfRange(axis, n);
    if (rational_abs(level) > Rational(1, 2))
        throw Error("section level must satisfy |level| <= 1/2");

    // the cutting plane may contain the whole slice (axis-aligned degenerate
    // normals); the "section" is then the slice itself
    bool contained = !s.vertices.empty();
    for (const RatVec& v : s.vertices) {
        if (v[axis] != level) {
            contained = false;
            break;
        }
    }
    if (contained) return s.vertices;

    const IntVec& a = s.hyperplane.normal();
    const Rational half(1, 2);
    std::set<RatVec> found;

    // every section vertex has n-2 coordinates pinned at +-1/2; the axis
    // coordinate is `level` and one remaining coordinate solves normal.x = 0
    for (std::size_t m = 0; m < n; ++m) {
        if (m == axis || a[m] == 0) continue;
        std::vector<std::size_t> fixed;
        for (std::size_t i = 0; i < n; ++i)
            if (i != axis && i != m) fixed.push_back(i);

        for (std::size_t mask = 0; mask < (std::size_t(1) << fixed.size()); ++mask) {
            RatVec v(n);
            v[axis] = level;
            Rational rest = Rational(a[axis]) * level;
            for (std::size_t b = 0; b < fixed.size(); ++b) {
                const std::size_t i = fixed[b];
                v[i] = (mask >> b & 1) ? half : -half;
                rest += Rational(a[i]) * v[i];
            }
            v[m] = -rest / Rational(a[m]);
            if (rational_abs(v[m]) > half) continue;
            found.insert(std::move(v));
        }
    }
    return {found.begin(), found.end()};
}

}  // namespace slicelab
