#pragma once

/// Numerical evaluation of the sinc integrals: the p-th power integral
/// I_p = (1/pi) Int |sin t / t|^p dt and the product formula for the volume
/// of a central cube slice, with rigorous truncation control.

#include "slicelab/rational.hpp"
#include "slicelab/vec.hpp"

#include <cstddef>
#include <cstdint>

namespace slicelab {

struct QuadratureResult {
    double value = 0.0;
    double error_bound = 0.0;  // adaptive-rule estimate plus analytic tail remainder
    double truncation_T = 0.0;
    std::int64_t panel_count = 0;
};

/// I_p for integer p >= 2, to the requested absolute tolerance.
/// The integrand at t = 0 is 1 (removable singularity). Beyond the truncation
/// point the integral is replaced by its exact mean-value term
/// A_p T^(1-p)/(p-1), A_p = (1/pi) Int_0^pi sin^p, whose remainder is bounded
/// by T^-p; the crude tail bound (2/pi) T^-(p-1)/(p-1) also holds.
/// Throws ToleranceUnreachable when tol < 1e-12 or the panel budget runs out.
QuadratureResult sinc_power_integral(int p, double tol = 1e-10);

/// Volume of the central slice with the given (rational) normal via
/// (1/pi) Int prod sin(a_i t)/(a_i t) dt, the normal rescaled to unit
/// Euclidean length. Zero entries drop out of the product (they contribute
/// factor 1); a single surviving factor gives exactly 1. The tail beyond T is
/// expanded into frequencies: zero-frequency terms integrate exactly, the
/// oscillating rest is bounded by 2/(|w| T^m) each.
QuadratureResult slice_volume_quadrature(const RatVec& normal, double tol = 1e-8);

struct BallBoundReport {
    QuadratureResult volume;
    bool ok = false;                    // value within [1 - slack, sqrt(2) + slack]
    bool small_entry_hypothesis = false;  // every normalized |a_i| <= 1/sqrt(2)
    double slack = 0.0;                 // tol + error_bound
};

/// Checks the computed slice volume against the classical bounds
/// 1 <= vol <= sqrt(2), with slack tol + error_bound on both ends.
BallBoundReport ball_bound_check(const RatVec& normal, double tol = 1e-8);

}  // namespace slicelab
