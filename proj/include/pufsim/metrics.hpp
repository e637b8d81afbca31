#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pufsim/crp.hpp"

namespace pufsim {

/// Fraction of ones. Throws InvalidInput on an empty sequence.
double uniformity(std::span<const std::uint8_t> bits);

/// Binary Shannon entropy -[p log2 p + (1-p) log2(1-p)], with
/// 0 * log2(0) = 0. Throws InvalidInput outside [0, 1].
double shannon_entropy(double p);

/// Fractional Hamming distance of two equal-length bit sequences.
double fhd(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

struct FhdStats {
  std::size_t pair_count;
  double mean;
  double stddev;  // population estimator
};

/// Mean/std of the FHD over all unordered pairs of responses.
/// Requires >= 2 equal-length responses.
FhdStats inter_fhd_stats(const std::vector<Response>& responses);

/// Mean fractional mismatch of the trials against the reference, pooled
/// over bits and trials (total mismatches / total bits).
double ber(const Response& reference, const std::vector<Response>& trials);

struct BerGridPoint {
  double vdd;          // V
  double temperature;  // degC
  std::size_t trials;
  double ber;
};

/// BER of noisy evaluations at every (vdd, temperature) grid point against
/// the noise-free golden response at the 1.2 V / 35 degC reference.
/// Trial seeds (seed + j) are shared across grid points, so environmental
/// comparisons see common noise draws per (trial, bit).
std::vector<BerGridPoint> ber_sweep(const PufArray& array,
                                    const Challenge& challenge,
                                    const ReadoutConfig& config,
                                    std::span<const double> vdd_list,
                                    std::span<const double> temp_list,
                                    std::size_t trials, std::uint64_t seed);

}  // namespace pufsim
