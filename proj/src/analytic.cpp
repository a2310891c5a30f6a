#include "slicelab/analytic.hpp"

#include "slicelab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace slicelab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinTol = 1e-12;
constexpr std::int64_t kPanelCap = 60'000'000;
constexpr int kMaxDepth = 44;

double ipow(double x, int p) {
    double r = 1.0;
    while (p > 0) {
        if (p & 1) r *= x;
        x *= x;
        p >>= 1;
    }
    return r;
}

double pairwise_sum(const std::vector<double>& xs, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 4) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += xs[i];
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(xs, lo, mid) + pairwise_sum(xs, mid, hi);
}

struct QuadState {
    std::int64_t panels = 0;
    double err = 0.0;
};

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b, double fa,
             double fm, double fb, double whole, double eps, int depth, QuadState& st) {
    if (++st.panels > kPanelCap)
        throw ToleranceUnreachable("quadrature panel budget exhausted");
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * eps || depth <= 0) {
        st.err += std::fabs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return adapt(f, a, m, fa, flm, fm, left, eps * 0.5, depth - 1, st) +
           adapt(f, m, b, fm, frm, fb, right, eps * 0.5, depth - 1, st);
}

// absolute-tolerance integral over [0, T] with the interval pre-split at
// multiples of pi (the oscillation scale); summed pairwise for reproducibility
double integrate_to(const std::function<double(double)>& f, double T, double tol,
                    QuadState& st) {
    const auto cells = static_cast<std::size_t>(std::ceil(T / kPi));
    std::vector<double> parts(cells);
    for (std::size_t k = 0; k < cells; ++k) {
        const double a = kPi * static_cast<double>(k);
        const double b = std::min(T, kPi * static_cast<double>(k + 1));
        if (b <= a) {
            parts[k] = 0.0;
            continue;
        }
        const double fa = f(a);
        const double fb = f(b);
        const double fm = f(0.5 * (a + b));
        const double eps = tol * (b - a) / T;
        parts[k] = adapt(f, a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), eps,
                         kMaxDepth, st);
    }
    return pairwise_sum(parts, 0, parts.size());
}

// (1/pi) Int_0^pi sin^p dt via the Wallis recurrence
double wallis_mean(int p) {
    double val = (p % 2 == 0) ? kPi / 2.0 : 1.0;  // Int_0^{pi/2} sin^(0 or 1)
    for (int k = (p % 2 == 0) ? 2 : 3; k <= p; k += 2)
        val *= static_cast<double>(k - 1) / static_cast<double>(k);
    return 2.0 * val / kPi;
}

}  // namespace

QuadratureResult sinc_power_integral(int p, double tol) {
    if (p < 2) throw Error("sinc power integral requires p >= 2");
    if (!(tol >= kMinTol))
        throw ToleranceUnreachable("tolerances below 1e-12 are not honest in double precision");

    // T a multiple of pi with the mean-value tail remainder T^-p <= tol/2
    const double rawT = std::pow(2.0 / tol, 1.0 / p);
    const double T = kPi * std::ceil(rawT / kPi);

    const auto f = [p](double t) {
        if (t == 0.0) return 1.0;
        return ipow(std::fabs(std::sin(t) / t), p);
    };

    QuadState st;
    const double body = integrate_to(f, T, tol * kPi / 4.0, st);  // tol/2 after the 2/pi factor

    const double mean = wallis_mean(p);
    const double tail = mean * std::pow(T, 1.0 - p) / (p - 1);
    const double remainder = std::pow(T, -p);

    QuadratureResult r;
    r.value = 2.0 / kPi * (body + tail);
    r.error_bound = 2.0 / kPi * st.err + remainder;
    r.truncation_T = T;
    r.panel_count = st.panels;
    if (!(r.error_bound <= tol))
        throw ToleranceUnreachable("requested tolerance not reached");
    return r;
}

QuadratureResult slice_volume_quadrature(const RatVec& normal, double tol) {
    if (!(tol >= kMinTol))
        throw ToleranceUnreachable("tolerances below 1e-12 are not honest in double precision");

    // canonical factor list: |entries|, zeros dropped, sorted descending, so
    // the result is bit-identical under permutation and sign changes
    std::vector<Rational> c;
    for (const Rational& x : normal)
        if (x != 0) c.push_back(rational_abs(x));
    if (c.empty()) throw AllZeroNormal();
    std::sort(c.begin(), c.end(), [](const Rational& a, const Rational& b) { return a > b; });

    const int m = static_cast<int>(c.size());
    if (m == 1) return {1.0, 0.0, 0.0, 0};  // a single sinc factor integrates exactly

    Rational sq = 0;
    for (const Rational& x : c) sq += x * x;
    const double norm = std::sqrt(to_double(sq));

    std::vector<double> a(c.size());
    double prod_a = 1.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        a[i] = to_double(c[i]) / norm;
        prod_a *= a[i];
    }

    // frequency expansion of prod sin(a_i t): fix e_1 = +1; zero frequencies
    // integrate exactly in the tail, oscillating ones are bounded by parts.
    // Zero detection is exact on the rational sums.
    struct Term {
        double freq_abs;
        int sign;  // product of the e_i
    };
    std::vector<Term> osc;
    double zero_sign_sum = 0.0;
    for (std::size_t mask = 0; mask < (std::size_t(1) << (m - 1)); ++mask) {
        Rational w = c[0];
        int sgn = 1;
        for (int i = 1; i < m; ++i) {
            if (mask >> (i - 1) & 1) {
                w -= c[static_cast<std::size_t>(i)];
                sgn = -sgn;
            } else {
                w += c[static_cast<std::size_t>(i)];
            }
        }
        if (w == 0)
            zero_sign_sum += sgn;
        else
            osc.push_back({std::fabs(to_double(w)) / norm, sgn});
    }

    const double coeff = std::ldexp(1.0, 1 - m) / prod_a;  // 2^(1-m) / prod a_i
    const int half_pow = (m % 2 == 0) ? (m / 2) : ((m - 1) / 2);
    const double parity = (half_pow % 2 == 0) ? 1.0 : -1.0;
    // zero frequencies only survive for even m (cos(0)=1; sin(0)=0)
    const double k0 = (m % 2 == 0) ? parity * coeff * zero_sign_sum : 0.0;

    const auto tail_remainder = [&](double T) {
        const double flat = std::pow(T, 1.0 - m) / (m - 1);
        double s = 0.0;
        for (const Term& t : osc)
            s += std::min(2.0 / (t.freq_abs * ipow(T, m)), flat);
        return 2.0 / kPi * std::fabs(coeff) * s;
    };

    double T = 32.0 * kPi;
    int doublings = 0;
    while (tail_remainder(T) > tol / 2.0) {
        T *= 2.0;
        if (++doublings > 60) throw ToleranceUnreachable("tail bound does not reach tolerance");
    }

    const auto g = [&a](double t) {
        double r = 1.0;
        for (const double ai : a) {
            const double x = ai * t;
            r *= (x == 0.0) ? 1.0 : std::sin(x) / x;
        }
        return r;
    };

    QuadState st;
    const double body = integrate_to(g, T, tol * kPi / 4.0, st);
    const double tail_exact = k0 * std::pow(T, 1.0 - m) / (m - 1);

    QuadratureResult r;
    r.value = 2.0 / kPi * (body + tail_exact);
    r.error_bound = 2.0 / kPi * st.err + tail_remainder(T);
    r.truncation_T = T;
    r.panel_count = st.panels;
    if (!(r.error_bound <= tol))
        throw ToleranceUnreachable("requested tolerance not reached");
    return r;
}

BallBoundReport ball_bound_check(const RatVec& normal, double tol) {
    BallBoundReport rep;
    rep.volume = slice_volume_quadrature(normal, tol);
    rep.slack = tol + rep.volume.error_bound;
    rep.ok = rep.volume.value >= 1.0 - rep.slack &&
             rep.volume.value <= std::numbers::sqrt2 + rep.slack;

    Rational sq = 0;
    Rational max_sq = 0;
    for (const Rational& x : normal) {
        sq += x * x;
        max_sq = std::max(max_sq, Rational(x * x));
    }
    rep.small_entry_hypothesis = (2 * max_sq <= sq);
    return rep;
}

}  // namespace slicelab
