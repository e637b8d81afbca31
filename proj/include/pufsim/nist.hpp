#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace pufsim::nist {

using Bits = std::span<const std::uint8_t>;

/// Outcome of one statistical test on one bit sequence.
struct TestResult {
  std::string test_name;
  double p_value = 0.0;
  bool passed = false;  // p_value >= alpha
  std::map<std::string, double> parameters;
};

/// Frequency (monobit) test: S_n = #ones - #zeros,
/// p = erfc(|S_n| / sqrt(n) / sqrt(2)).
TestResult monobit(Bits bits, double alpha = 0.01);

/// Frequency within a block: chi^2 = 4 M sum (pi_i - 1/2)^2 over
/// N = floor(n/M) blocks, p = igamc(N/2, chi^2/2).
TestResult block_frequency(Bits bits, int block_size = 128,
                           double alpha = 0.01);

/// Runs test. When the proportion prerequisite |pi - 1/2| >= 2/sqrt(n)
/// fails, returns p = 0 with parameters["prerequisite_failed"] = 1.
TestResult runs(Bits bits, double alpha = 0.01);

/// Longest run of ones in a block. Block size and category count follow
/// the standard's parameter table for the input length (M = 8, K = 3 for
/// 128 <= n < 6272). Requires n >= 128.
TestResult longest_run(Bits bits, double alpha = 0.01);

/// Spectral test: magnitudes of the first n/2 DFT coefficients of the
/// +-1 series against the threshold sqrt(n ln(1/0.05)). Requires even
/// n >= 64.
TestResult dft_test(Bits bits, double alpha = 0.01);

/// Serial test on overlapping wraparound m-bit blocks. Yields two
/// p-values; p_value holds min(p1, p2) and parameters carry both.
/// Recommended m < floor(log2 n) - 2.
TestResult serial(Bits bits, int m = 2, double alpha = 0.01);

/// Approximate entropy: ApEn(m) = phi(m) - phi(m+1),
/// chi^2 = 2n (ln 2 - ApEn), p = igamc(2^(m-1), chi^2/2).
/// Recommended m < floor(log2 n) - 5.
TestResult approx_entropy(Bits bits, int m = 2, double alpha = 0.01);

enum class CusumMode { kForward, kBackward };

/// Cumulative sums test: z = max |partial sums of +-1|, p-value from the
/// standard's double sum of normal CDF terms.
TestResult cumulative_sums(Bits bits, CusumMode mode = CusumMode::kForward,
                           double alpha = 0.01);

inline constexpr std::array<const char*, 8> kSuiteTestNames = {
    "monobit",        "block_frequency", "runs",
    "longest_run",    "dft",             "serial",
    "approx_entropy", "cumulative_sums",
};

struct AggregateRow {
  std::string test_name;
  double mean_p = 0.0;
  double pass_rate = 0.0;
};

struct NistReport {
  double alpha = 0.001;
  std::size_t sequence_count = 0;
  // per_sequence[s][t]: result of suite test t on sequence s.
  std::vector<std::vector<TestResult>> per_sequence;
  std::vector<AggregateRow> aggregate;  // one row per suite test
};

/// Runs the eight tests above with their defaults (block_frequency M = 128,
/// serial/approx_entropy m = 2, cumulative_sums forward) on every sequence
/// and aggregates mean p-value and pass rate per test. Sequences must all
/// have the same length (>= 128); alpha must lie in (0, 0.5).
NistReport run_suite(const std::vector<std::vector<std::uint8_t>>& sequences,
                     double alpha = 0.001);

}  // namespace pufsim::nist
