#include "slicelab/hyperplane.hpp"

#include "slicelab/errors.hpp"

#include <boost/integer/common_factor.hpp>

namespace slicelab {

Hyperplane Hyperplane::canonicalize_normal(const RatVec& raw) {
    if (raw.size() < 2) throw DimensionTooSmall(raw.size());
    if (is_zero(raw)) throw ZeroNormal();

    Int denom_lcm = 1;
    for (const Rational& x : raw) denom_lcm = boost::integer::lcm(denom_lcm, denominator(x));

    IntVec v(raw.size());
    Int g = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        v[i] = numerator(raw[i]) * (denom_lcm / denominator(raw[i]));
        g = boost::integer::gcd(g, v[i]);
    }
    int lead = 0;
    for (const Int& x : v) {
        if (x != 0) {
            lead = sign(x);
            break;
        }
    }
    if (lead < 0) g = -g;
    for (Int& x : v) x /= g;
    return Hyperplane(std::move(v));
}

Hyperplane Hyperplane::from_integers(const IntVec& raw) {
    return canonicalize_normal(to_ratvec(raw));
}

bool Hyperplane::degenerate() const {
    for (const Int& x : normal_)
        if (x == 0) return true;
    return false;
}

std::size_t Hyperplane::max_abs_index() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < normal_.size(); ++i)
        if (int_abs(normal_[i]) > int_abs(normal_[best])) best = i;
    return best;
}

Int Hyperplane::squared_norm() const {
    Int s = 0;
    for (const Int& x : normal_) s += x * x;
    return s;
}

Rational Hyperplane::evaluate(const RatVec& point) const {
    if (point.size() != normal_.size())
        throw DimensionMismatch("hyperplane/point dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < point.size(); ++i) s += Rational(normal_[i]) * point[i];
    return s;
}

}  // namespace slicelab
