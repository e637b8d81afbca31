#include "pufsim/fft.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "pufsim/errors.hpp"

namespace pufsim::fft {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative in-place radix-2 Cooley-Tukey.
void fft_pow2(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace

std::vector<double> dft_magnitudes(std::span<const double> x,
                                   std::size_t count) {
  const std::size_t n = x.size();
  if (n == 0 || count > n) {
    throw InvalidInput("dft_magnitudes: bad length or count");
  }
  if (!is_power_of_two(n)) return dft_magnitudes_direct(x, count);

  std::vector<std::complex<double>> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = {x[i], 0.0};
  fft_pow2(a);
  std::vector<double> mags(count);
  for (std::size_t j = 0; j < count; ++j) mags[j] = std::abs(a[j]);
  return mags;
}

std::vector<double> dft_magnitudes_direct(std::span<const double> x,
                                          std::size_t count) {
  const std::size_t n = x.size();
  if (n == 0 || count > n) {
    throw InvalidInput("dft_magnitudes_direct: bad length or count");
  }
  std::vector<double> mags(count);
  for (std::size_t j = 0; j < count; ++j) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(j) *
                           static_cast<double>(k) / static_cast<double>(n);
      re += x[k] * std::cos(angle);
      im += x[k] * std::sin(angle);
    }
    mags[j] = std::hypot(re, im);
  }
  return mags;
}

}  // namespace pufsim::fft
