#pragma once

/// Central hyperplanes { x : normal . x = 0 } with a primitive integer normal.

#include "slicelab/rational.hpp"
#include "slicelab/vec.hpp"

#include <cstddef>

namespace slicelab {

class Hyperplane {
public:
    /// Builds the canonical representative of the hyperplane spanned by a raw
    /// rational normal: denominators cleared, entries divided by their gcd,
    /// first nonzero entry positive. Throws ZeroNormal / DimensionTooSmall.
    static Hyperplane canonicalize_normal(const RatVec& raw);

    /// Convenience for already-integer normals (still canonicalized).
    static Hyperplane from_integers(const IntVec& raw);

    const IntVec& normal() const { return normal_; }
    std::size_t dimension() const { return normal_.size(); }

    /// True iff some coefficient is zero: the slice degenerates into the
    /// product of a lower-dimensional slice with a cube.
    bool degenerate() const;

    /// Index of the entry with the largest absolute value (ties: smallest
    /// index). Used as the projection axis for charts and volumes.
    std::size_t max_abs_index() const;

    /// sum of squares of the entries, i.e. |normal|^2.
    Int squared_norm() const;

    Rational evaluate(const RatVec& point) const;

    bool operator==(const Hyperplane& o) const { return normal_ == o.normal_; }

private:
    explicit Hyperplane(IntVec normal) : normal_(std::move(normal)) {}
    IntVec normal_;
};

}  // namespace slicelab
