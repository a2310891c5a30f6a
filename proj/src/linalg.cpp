#include "slicelab/linalg.hpp"

#include "slicelab/errors.hpp"

#include <algorithm>
#include <set>

namespace slicelab {

bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& points) {
    if (points.empty()) return false;
    const std::size_t d = p.size();
    const std::size_t m = points.size();
    const std::size_t rows = d + 1;
    const std::size_t cols = m + rows;  // lambda columns then artificials
    const std::size_t rhs = cols;

    // phase-1 simplex on { lambda >= 0, Q lambda = p, sum lambda = 1 }
    std::vector<RatVec> t(rows, RatVec(cols + 1, Rational(0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < m; ++j) t[i][j] = points[j][i];
        t[i][rhs] = p[i];
    }
    for (std::size_t j = 0; j < m; ++j) t[d][j] = 1;
    t[d][rhs] = 1;

    for (std::size_t i = 0; i < rows; ++i) {
        if (t[i][rhs] < 0)
            for (auto& x : t[i]) x = -x;
        t[i][m + i] = 1;
    }

    RatVec z(cols + 1, Rational(0));
    for (std::size_t j = 0; j <= cols; ++j) {
        if (j >= m && j < cols) continue;  // artificial reduced costs start at 0
        Rational s = 0;
        for (std::size_t i = 0; i < rows; ++i) s += t[i][j];
        z[j] = -s;
    }

    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = m + i;

    for (;;) {
        // Bland's rule; artificial columns never re-enter
        std::size_t enter = cols;
        for (std::size_t j = 0; j < m; ++j) {
            if (z[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) break;  // cannot happen: the feasible phase-1 region is bounded

        const Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        if (z[enter] != 0) {
            const Rational f = z[enter];
            for (std::size_t j = 0; j <= cols; ++j) z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    // z[rhs] holds -(sum of artificials); feasible iff it reached zero
    return z[rhs] == 0;
}

std::vector<RatVec> extreme_points(std::vector<RatVec> points) {
    std::set<RatVec> unique(points.begin(), points.end());
    std::vector<RatVec> all(unique.begin(), unique.end());
    std::vector<RatVec> result;
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::vector<RatVec> others;
        others.reserve(all.size() - 1);
        for (std::size_t j = 0; j < all.size(); ++j)
            if (j != i) others.push_back(all[j]);
        if (!in_convex_hull(all[i], others)) result.push_back(all[i]);
    }
    return result;
}

}  // namespace slicelab
