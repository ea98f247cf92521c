#pragma once

#include <span>

namespace scr {

inline constexpr double kSqrt2 = 1.4142135623730950488;
inline constexpr double kSqrt2Pi = 2.5066282746310005024;
inline constexpr double kLogSqrt2Pi = 0.91893853320467274178;

/// Standard normal density.
double norm_pdf(double x);
double log_norm_pdf(double x);

/// Standard normal CDF, absolute error below 1e-14.
double norm_cdf(double x);

/// Upper tail Pr[Z > x], accurate in the far right tail.
double norm_sf(double x);

/// log Phi(x), usable down to x ~ -3e2 without underflow.
double log_norm_cdf(double x);
/// log Pr[Z > x].
double log_norm_sf(double x);

/// Normal quantile (Wichura AS241); requires p in (0,1).
double norm_quantile(double p);

/// Table-driven Phi with cubic Hermite interpolation, absolute error
/// below 2e-11. Hot-loop substitute for norm_cdf in the estimand
/// quadrature; not for the 1e-12 contract paths.
double norm_cdf_fast(double x);

/// log(sum(exp(v))) with the usual max shift; -inf for empty input.
double log_sum_exp(std::span<const double> v);

}  // namespace scr
