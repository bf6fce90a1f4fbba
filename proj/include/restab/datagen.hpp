#pragma once

#include "restab/rng.hpp"
#include "restab/types.hpp"

#include <cmath>
#include <numbers>

namespace restab {

/// Bernoulli-Gauss signal: entry is N(0,1) with probability rho, else 0.
inline Vector gen_bernoulli_gauss(Index n, double rho, std::uint64_t seed) {
    if (rho < 0.0 || rho > 1.0)
        throw Error(ErrorCode::InvalidArgument, "rho must be in [0,1]");
    Rng rng(seed);
    Vector x = Vector::Zero(n);
    for (Index i = 0; i < n; ++i) {
        const bool on = rng.next_double() < rho;
        const double g = rng.next_normal();  // always drawn: keeps streams aligned per entry
        if (on) x[i] = g;
    }
    return x;
}

/// Uniformly random M-row subset of the N x N orthonormal type-II DCT matrix.
/// Rows are orthonormal, so A A^T = I_M before any preprocessing.
inline Matrix gen_dct_design(Index n, Index m, std::uint64_t seed) {
    if (n < 2 || m < 1 || m > n)
        throw Error(ErrorCode::BadShape, "gen_dct_design requires 1 <= M <= N, N >= 2");
    Rng rng(seed);
    const auto rows = sample_without_replacement(n, m, rng);
    Matrix a(m, n);
    const double nd = static_cast<double>(n);
    for (Index r = 0; r < m; ++r) {
        const double k = static_cast<double>(rows[static_cast<std::size_t>(r)]);
        const double scale = rows[static_cast<std::size_t>(r)] == 0 ? std::sqrt(1.0 / nd)
                                                                    : std::sqrt(2.0 / nd);
        for (Index j = 0; j < n; ++j) {
            a(r, j) = scale * std::cos(std::numbers::pi * (2.0 * j + 1.0) * k / (2.0 * nd));
        }
    }
    return a;
}

/// y = A x0 + w with w ~ N(0, sigma^2).
inline Vector gen_linear_data(const Matrix& a, const Vector& x0, double sigma,
                              std::uint64_t seed) {
    if (a.cols() != x0.size())
        throw Error(ErrorCode::ShapeMismatch, "gen_linear_data: A cols != x0 length");
    if (sigma < 0.0) throw Error(ErrorCode::InvalidArgument, "sigma must be >= 0");
    Rng rng(seed);
    Vector y = a * x0;
    for (Index i = 0; i < y.size(); ++i) y[i] += sigma * rng.next_normal();
    return y;
}

/// Center columns, scale them to unit Euclidean norm, center the outputs.
inline Dataset preprocess(const Dataset& d) {
    validate_dataset(d);
    Dataset out = d;
    for (Index j = 0; j < out.n(); ++j) {
        auto col = out.features.col(j);
        col.array() -= col.mean();
        const double norm = col.norm();
        if (norm < 1e-14)
            throw Error(ErrorCode::DegenerateColumn,
                        "column " + std::to_string(j) + " is zero after centering");
        col /= norm;
    }
    out.outputs.array() -= out.outputs.mean();
    out.preprocessed = true;
    return out;
}

}  // namespace restab
