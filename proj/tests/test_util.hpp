#pragma once

// Shared helpers for the test suites: oracles kept independent of the library
// code paths they check, plus small constructors for points and normals.

#include "slicelab/cube_slice.hpp"
#include "slicelab/hyperplane.hpp"
#include "slicelab/rational.hpp"
#include "slicelab/vec.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace testutil {

using namespace slicelab;

inline RatVec pt(std::initializer_list<Rational> xs) { return RatVec(xs); }

inline Rational q(long num, long den = 1) { return Rational(num, den); }

inline Hyperplane normal(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return Hyperplane::from_integers(v);
}

inline RatVec ratvec(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// Brute-force oracle for the slice vertex set: walks the 2^n cube vertices
// and all n*2^(n-1) edges explicitly, intersecting each edge segment with the
// hyperplane by parameterizing it, with no shared code with slice_vertices.
inline std::vector<RatVec> slice_vertices_oracle(const Hyperplane& h) {
    const std::size_t n = h.dimension();
    std::vector<RatVec> corners;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        RatVec v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = (mask >> i & 1) ? Rational(1, 2) : Rational(-1, 2);
        corners.push_back(std::move(v));
    }

    std::set<RatVec> found;
    for (const RatVec& v : corners)
        if (h.evaluate(v) == 0) found.insert(v);

    for (std::size_t i = 0; i < corners.size(); ++i) {
        for (std::size_t j = i + 1; j < corners.size(); ++j) {
            std::size_t differ = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (corners[i][k] != corners[j][k]) ++differ;
            if (differ != 1) continue;
            const Rational si = h.evaluate(corners[i]);
            const Rational sj = h.evaluate(corners[j]);
            if (sign(si) * sign(sj) >= 0) continue;
            const Rational t = si / (si - sj);
            RatVec p(n);
            for (std::size_t k = 0; k < n; ++k)
                p[k] = corners[i][k] + t * (corners[j][k] - corners[i][k]);
            found.insert(std::move(p));
        }
    }
    return {found.begin(), found.end()};
}

// deterministic random integer normals
class NormalSource {
public:
    explicit NormalSource(unsigned seed) : rng_(seed) {}

    IntVec raw(std::size_t n, int lo, int hi, bool allow_zero_vector = false) {
        std::uniform_int_distribution<int> d(lo, hi);
        for (;;) {
            IntVec v(n);
            bool nonzero = false;
            for (auto& x : v) {
                x = d(rng_);
                if (x != 0) nonzero = true;
            }
            if (nonzero || allow_zero_vector) return v;
        }
    }

    Hyperplane hyperplane(std::size_t n, int lo, int hi) {
        return Hyperplane::from_integers(raw(n, lo, hi));
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testutil
