#pragma once

#include <cmath>

namespace restab {

inline constexpr double kInvSqrt2 = 0.7071067811865475244;
inline constexpr double kInvSqrt2Pi = 0.3989422804014326779;

/// Standard normal pdf.
inline double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

/// Standard normal cdf via erfc; keeps full relative accuracy in the lower tail.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

/// Upper tail P(Z > x) = Phi(-x), accurate for large x.
inline double normal_tail(double x) { return 0.5 * std::erfc(x * kInvSqrt2); }

}  // namespace restab
