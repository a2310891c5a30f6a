#include "slicelab/surd.hpp"

#include "slicelab/errors.hpp"

#include <cmath>
#include <utility>

namespace slicelab {

namespace {

// Splits n > 0 as s^2 * f with f squarefree; returns (s, f) by trial division.
std::pair<Int, Int> split_square(Int n) {
    Int s = 1;
    Int f = 1;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        int count = 0;
        while (n % d == 0) {
            n /= d;
            ++count;
        }
        for (int i = 0; i + 1 < count; i += 2) s *= d;
        if (count % 2 == 1) f *= d;
    }
    return {s, f * n};
}

}  // namespace

SurdValue::SurdValue(Rational q, Int r) : coefficient_(std::move(q)), radicand_(std::move(r)) {
    if (radicand_ <= 0) throw Error("surd radicand must be positive");
    if (coefficient_ == 0) {
        radicand_ = 1;
        return;
    }
    auto [s, f] = split_square(radicand_);
    coefficient_ *= Rational(s);
    radicand_ = f;
}

SurdValue SurdValue::sqrt_of(const Rational& x) {
    if (x < 0) throw Error("sqrt of a negative rational");
    if (x == 0) return SurdValue();
    const Int p = numerator(x);
    const Int q = denominator(x);
    // sqrt(p/q) = sqrt(p*q) / q
    return SurdValue(Rational(1, q), p * q);
}

double SurdValue::to_double() const {
    return slicelab::to_double(coefficient_) * std::sqrt(radicand_.convert_to<double>());
}

std::string SurdValue::str() const {
    if (is_rational()) return to_string(coefficient_);
    return to_string(coefficient_) + "*sqrt(" + radicand_.str() + ")";
}

SurdValue SurdValue::operator*(const SurdValue& o) const {
    return SurdValue(coefficient_ * o.coefficient_, radicand_ * o.radicand_);
}

SurdValue SurdValue::operator+(const SurdValue& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (radicand_ != o.radicand_)
        throw Error("surd addition with mismatched radicands: " + str() + " + " + o.str());
    return SurdValue(coefficient_ + o.coefficient_, radicand_);
}

std::strong_ordering SurdValue::operator<=>(const SurdValue& o) const {
    const int sa = sign(coefficient_);
    const int sb = sign(o.coefficient_);
    if (sa != sb) return sa <=> sb;
    if (sa == 0) return std::strong_ordering::equal;
    // same sign: compare squares, orientation flips for negatives
    const Rational qa = coefficient_ * coefficient_ * Rational(radicand_);
    const Rational qb = o.coefficient_ * o.coefficient_ * Rational(o.radicand_);
    if (qa == qb) return std::strong_ordering::equal;
    const bool less = (qa < qb) == (sa > 0);
    return less ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace slicelab
