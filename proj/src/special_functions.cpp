#include "pufsim/special_functions.hpp"

#include <cmath>
#include <limits>

#include "pufsim/errors.hpp"

namespace pufsim::sf {

namespace {

constexpr int kMaxIterations = 20000;
constexpr double kEps = 1e-16;
constexpr double kTiny = std::numeric_limits<double>::min() / kEps;

// Lower regularized incomplete gamma by power series.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n <= kMaxIterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) {
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw InvalidInput("igamc: series failed to converge");
}

// Upper regularized incomplete gamma by modified Lentz continued fraction.
double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) {
      return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw InvalidInput("igamc: continued fraction failed to converge");
}

}  // namespace

double erfc(double x) {
  if (!std::isfinite(x)) throw InvalidInput("erfc: non-finite input");
  return std::erfc(x);
}

double igamc(double a, double x) {
  if (!std::isfinite(a) || !std::isfinite(x) || !(a > 0.0) || x < 0.0) {
    throw InvalidInput("igamc: requires a > 0 and x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace pufsim::sf
