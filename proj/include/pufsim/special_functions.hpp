#pragma once

namespace pufsim::sf {

/// Complementary error function.
double erfc(double x);

/// Upper regularized incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
/// Series expansion for x < a + 1, continued fraction otherwise; absolute
/// error below 1e-10 over the tested domain. Requires a > 0, x >= 0.
double igamc(double a, double x);

/// Standard normal CDF.
double normal_cdf(double x);

}  // namespace pufsim::sf
