#pragma once

#include "restab/normal.hpp"
#include "restab/types.hpp"

#include <algorithm>
#include <cmath>

namespace restab {

/// Moments of the beta->inf l1 denoiser under the Gaussian field xi and the
/// penalty-atom mixture. pi_inactive carries 1 - pi_active computed in the
/// complement so that saturated coordinates keep full relative accuracy.
struct XMoments {
    double mean = 0.0;
    double var = 0.0;
    double chi = 0.0;
    double pi_active = 0.0;
    double pi_inactive = 1.0;
};

/// Proximal map of theta*|.|: sign(h) * max(|h| - theta, 0).
inline double soft_threshold(double h, double theta) {
    const double a = std::abs(h) - theta;
    return a > 0.0 ? (h > 0.0 ? a : -a) : 0.0;
}

namespace detail {

// Degenerate field (s -> 0): the denoiser is the deterministic proximal map,
// randomness comes from the lambda atoms only.
inline XMoments x_moments_deterministic(double r, double q_hat, const PenaltySpec& penalty) {
    double mean = 0.0, second = 0.0, pi = 0.0, pi_c = 0.0;
    for (const auto& atom : penalty.atoms) {
        const double theta = penalty.base * atom.multiplier / q_hat;
        const double st = soft_threshold(r, theta);
        const bool active = std::abs(r) > theta;
        mean += atom.weight * st;
        second += atom.weight * st * st;
        pi += active ? atom.weight : 0.0;
        pi_c += active ? 0.0 : atom.weight;
    }
    XMoments out;
    out.mean = mean;
    out.var = std::max(second - mean * mean, 0.0);
    out.pi_active = pi;
    out.pi_inactive = pi_c;
    out.chi = pi / q_hat;
    return out;
}

}  // namespace detail

/// Closed-form moments of soft_threshold(r + s*xi, lambda/q_hat) with
/// xi ~ N(0,1), s = sqrt(chi_hat)/q_hat, and lambda drawn from `penalty`.
inline XMoments x_moments(double r, double q_hat, double chi_hat, const PenaltySpec& penalty) {
    if (q_hat <= 0.0)
        throw Error(ErrorCode::NonPositivePrecision, "x_moments requires q_hat > 0");
    if (chi_hat < 0.0)
        throw Error(ErrorCode::InvalidArgument, "x_moments requires chi_hat >= 0");

    const double s = std::sqrt(chi_hat) / q_hat;
    if (s < 1e-14) return detail::x_moments_deterministic(r, q_hat, penalty);

    double mean = 0.0, second = 0.0, pi = 0.0, pi_c = 0.0;
    for (const auto& atom : penalty.atoms) {
        const double theta = penalty.base * atom.multiplier / q_hat;
        const double ap = (r - theta) / s;   // P(h > theta)  = Phi(ap)
        const double am = -(r + theta) / s;  // P(h < -theta) = Phi(am)
        const double Pp = normal_cdf(ap), Pm = normal_cdf(am);
        const double pp = normal_pdf(ap), pm = normal_pdf(am);
        const double m = (r - theta) * Pp + s * pp + (r + theta) * Pm - s * pm;
        const double m2 = (r - theta) * (r - theta) * Pp + 2.0 * (r - theta) * s * pp +
                          s * s * (Pp - ap * pp) + (r + theta) * (r + theta) * Pm -
                          2.0 * (r + theta) * s * pm + s * s * (Pm - am * pm);
        mean += atom.weight * m;
        second += atom.weight * m2;
        pi += atom.weight * (Pp + Pm);
        pi_c += atom.weight * (normal_tail(ap) - Pm);
    }
    XMoments out;
    out.mean = mean;
    out.var = std::max(second - mean * mean, 0.0);
    out.pi_active = std::clamp(pi, 0.0, 1.0);
    out.pi_inactive = std::clamp(pi_c, 0.0, 1.0);
    out.chi = out.pi_active / q_hat;
    return out;
}

}  // namespace restab
