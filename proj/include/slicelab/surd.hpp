#pragma once

/// Exact numbers of the form q * sqrt(r) with q rational and r a positive
/// integer. Slice volumes and face areas are always of this shape because all
/// lengths for a fixed hyperplane share the single radicand sum(a_i^2).

#include "slicelab/rational.hpp"

#include <compare>
#include <string>

namespace slicelab {

class SurdValue {
public:
    /// Zero.
    SurdValue() : coefficient_(0), radicand_(1) {}

    /// A pure rational q (radicand 1).
    explicit SurdValue(Rational q) : coefficient_(std::move(q)), radicand_(1) {}

    /// q * sqrt(r); r > 0 required. The stored radicand is made squarefree,
    /// square factors migrate into the coefficient. 0 * sqrt(r) collapses
    /// to the canonical zero.
    SurdValue(Rational q, Int r);

    /// sqrt of a nonnegative rational p/q, stored exactly as sqrt(p*q)/q.
    static SurdValue sqrt_of(const Rational& x);

    const Rational& coefficient() const { return coefficient_; }
    const Int& radicand() const { return radicand_; }
    bool is_rational() const { return radicand_ == 1; }
    bool is_zero() const { return coefficient_ == 0; }

    double to_double() const;

    /// "q" when the radicand is 1, "q*sqrt(r)" otherwise (q in p/q form).
    std::string str() const;

    SurdValue operator-() const { return SurdValue(-coefficient_, radicand_); }
    SurdValue operator*(const Rational& s) const { return SurdValue(coefficient_ * s, radicand_); }
    SurdValue operator*(const SurdValue& o) const;

    /// Addition requires matching radicands (or a zero side); the pipeline
    /// never mixes radicands for one hyperplane.
    SurdValue operator+(const SurdValue& o) const;
    SurdValue operator-(const SurdValue& o) const { return *this + (-o); }

    bool operator==(const SurdValue& o) const {
        return coefficient_ == o.coefficient_ && radicand_ == o.radicand_;
    }
    bool operator!=(const SurdValue& o) const { return !(*this == o); }

    /// Exact order comparison (compares signs, then squares).
    std::strong_ordering operator<=>(const SurdValue& o) const;

    bool operator<(const SurdValue& o) const { return (*this <=> o) == std::strong_ordering::less; }
    bool operator<=(const SurdValue& o) const { return (*this <=> o) != std::strong_ordering::greater; }
    bool operator>(const SurdValue& o) const { return o < *this; }
    bool operator>=(const SurdValue& o) const { return o <= *this; }

private:
    Rational coefficient_;
    Int radicand_;  // positive, squarefree; 1 means pure rational
};

}  // namespace slicelab
