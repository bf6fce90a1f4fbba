#pragma once

#include "restab/types.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace restab {

/// Moments of the likelihood-side single-site update. one_minus_qchi carries
/// 1 - q_hat*chi = E_c[1/(c q_hat + 1)] exactly (no cancellation), which the
/// message reflection divides by.
struct UMoments {
    double mean = 0.0;
    double var = 0.0;
    double chi = 0.0;
    double one_minus_qchi = 1.0;
};

/// Truncated, renormalized Poisson(tau) occupation distribution.
struct PoissonWeights {
    double tau = 0.5;
    std::vector<std::pair<int, double>> weights;  // (c, w), w summing to 1

    int c_max() const { return weights.empty() ? 0 : weights.back().first; }

    static PoissonWeights point_mass(int c) {
        PoissonWeights w;
        w.tau = static_cast<double>(c);
        w.weights = {{c, 1.0}};
        return w;
    }
};

/// Poisson pmf truncated at the smallest c_max whose upper tail is below
/// tail_tol, then renormalized to sum exactly 1.
inline PoissonWeights poisson_weights(double tau, double tail_tol) {
    if (tau <= 0.0 || tau > 1.0)
        throw Error(ErrorCode::InvalidArgument, "poisson tau must be in (0,1]");
    if (tail_tol <= 0.0 || tail_tol > 1e-6)
        throw Error(ErrorCode::InvalidArgument, "tail_tol must be in (0, 1e-6]");

    PoissonWeights out;
    out.tau = tau;
    double p = std::exp(-tau);  // pmf at c = 0
    double cum = 0.0;
    int c = 0;
    while (true) {
        out.weights.emplace_back(c, p);
        cum += p;
        if (1.0 - cum < tail_tol) break;
        ++c;
        p *= tau / c;
        if (c > 500) throw Error(ErrorCode::NumericalBreakdown, "poisson truncation runaway");
    }
    double total = 0.0;
    for (const auto& [ci, w] : out.weights) total += w;
    for (auto& [ci, w] : out.weights) w /= total;
    return out;
}

/// beta->inf single-site conjugate update for occupation count c:
/// argmin_u [ q_hat/2 (u - g)^2 - u y + u^2/(2c) ] = c (q_hat g + y) / (c q_hat + 1),
/// and 0 when c = 0 (the data point is absent from the resample).
inline double u_site_minimizer(double g, double y, double q_hat, int c) {
    if (q_hat <= 0.0)
        throw Error(ErrorCode::NonPositivePrecision, "u_site_minimizer requires q_hat > 0");
    if (c == 0) return 0.0;
    const double cd = static_cast<double>(c);
    return cd * (q_hat * g + y) / (cd * q_hat + 1.0);
}

/// Moments of u_site_minimizer(r + sqrt(chi_hat)/q_hat * xi; c) over xi ~ N(0,1)
/// and c ~ weights. The minimizer is affine in g for each c, so all moments are
/// finite sums over the truncated support.
inline UMoments u_moments(double r, double q_hat, double chi_hat, double y,
                          const PoissonWeights& weights) {
    if (q_hat <= 0.0)
        throw Error(ErrorCode::NonPositivePrecision, "u_moments requires q_hat > 0");
    if (chi_hat < 0.0)
        throw Error(ErrorCode::InvalidArgument, "u_moments requires chi_hat >= 0");

    const double s2 = chi_hat / (q_hat * q_hat);
    double ea = 0.0, ea2 = 0.0, eb = 0.0, eab = 0.0, eb2 = 0.0, ecompl = 0.0;
    for (const auto& [c, w] : weights.weights) {
        const double cd = static_cast<double>(c);
        const double denom = cd * q_hat + 1.0;
        const double a = cd * q_hat / denom;  // d u*/d g in [0,1)
        const double b = cd * y / denom;
        ea += w * a;
        ea2 += w * a * a;
        eb += w * b;
        eab += w * a * b;
        eb2 += w * b * b;
        ecompl += w / denom;
    }
    UMoments out;
    out.mean = ea * r + eb;
    const double second = ea2 * (r * r + s2) + 2.0 * eab * r + eb2;
    out.var = std::max(second - out.mean * out.mean, 0.0);
    out.chi = ea / q_hat;
    out.one_minus_qchi = ecompl;
    return out;
}

}  // namespace restab
