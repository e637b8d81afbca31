#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pufsim::fft {

/// Magnitudes of the first `count` DFT coefficients of a real series,
/// using the e^{-2*pi*i*jk/n} convention. Radix-2 FFT for power-of-two
/// lengths, direct evaluation otherwise.
std::vector<double> dft_magnitudes(std::span<const double> x,
                                   std::size_t count);

/// Direct O(n^2) evaluation; reference oracle for dft_magnitudes.
std::vector<double> dft_magnitudes_direct(std::span<const double> x,
                                          std::size_t count);

}  // namespace pufsim::fft
