#include "pufsim/nist.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "pufsim/errors.hpp"
#include "pufsim/fft.hpp"
#include "pufsim/special_functions.hpp"

namespace pufsim::nist {

namespace {

TestResult make_result(std::string name, double p, double alpha,
                       std::map<std::string, double> params = {}) {
  TestResult r;
  r.test_name = std::move(name);
  r.p_value = std::clamp(p, 0.0, 1.0);
  r.passed = r.p_value >= alpha;
  r.parameters = std::move(params);
  return r;
}

void require_nonempty(Bits bits, const char* who) {
  if (bits.empty()) {
    throw InvalidInput(std::string(who) + ": empty bit sequence");
  }
}

// Frequencies of all overlapping wraparound m-bit patterns.
std::vector<std::size_t> pattern_counts(Bits bits, int m) {
  const std::size_t n = bits.size();
  std::vector<std::size_t> counts(static_cast<std::size_t>(1) << m, 0);
  const std::size_t mask = (static_cast<std::size_t>(1) << m) - 1;
  std::size_t window = 0;
  for (int j = 0; j < m; ++j) {
    window = (window << 1) | (bits[j % n] ? 1 : 0);
  }
  counts[window]++;
  for (std::size_t i = 1; i < n; ++i) {
    window = ((window << 1) & mask) | (bits[(i + m - 1) % n] ? 1 : 0);
    counts[window]++;
  }
  return counts;
}

double psi_squared(Bits bits, int m) {
  if (m <= 0) return 0.0;
  const double n = static_cast<double>(bits.size());
  const std::vector<std::size_t> counts = pattern_counts(bits, m);
  double sum_sq = 0.0;
  for (std::size_t c : counts) {
    sum_sq += static_cast<double>(c) * static_cast<double>(c);
  }
  return sum_sq * static_cast<double>(counts.size()) / n - n;
}

}  // namespace

TestResult monobit(Bits bits, double alpha) {
  require_nonempty(bits, "monobit");
  const double n = static_cast<double>(bits.size());
  double s = 0.0;
  for (std::uint8_t b : bits) s += b ? 1.0 : -1.0;
  const double p = sf::erfc(std::abs(s) / std::sqrt(n) / std::sqrt(2.0));
  return make_result("monobit", p, alpha, {{"n", n}});
}

TestResult block_frequency(Bits bits, int block_size, double alpha) {
  require_nonempty(bits, "block_frequency");
  if (block_size <= 0 || static_cast<std::size_t>(block_size) > bits.size()) {
    throw InvalidInput("block_frequency: block size exceeds sequence length");
  }
  const std::size_t m = static_cast<std::size_t>(block_size);
  const std::size_t blocks = bits.size() / m;
  double chi2 = 0.0;
  for (std::size_t i = 0; i < blocks; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < m; ++j) ones += bits[i * m + j] ? 1 : 0;
    const double pi = static_cast<double>(ones) / static_cast<double>(m);
    chi2 += (pi - 0.5) * (pi - 0.5);
  }
  chi2 *= 4.0 * static_cast<double>(m);
  const double p = sf::igamc(static_cast<double>(blocks) / 2.0, chi2 / 2.0);
  return make_result("block_frequency", p, alpha,
                     {{"M", static_cast<double>(block_size)},
                      {"blocks", static_cast<double>(blocks)},
                      {"chi2", chi2}});
}

TestResult runs(Bits bits, double alpha) {
  require_nonempty(bits, "runs");
  const double n = static_cast<double>(bits.size());
  std::size_t ones = 0;
  for (std::uint8_t b : bits) ones += b ? 1 : 0;
  const double pi = static_cast<double>(ones) / n;
  // Constant short inputs can slip past the proportion prerequisite
  // (2/sqrt(n) >= 0.5 for n <= 16) and would zero the denominator below.
  if (std::abs(pi - 0.5) >= 2.0 / std::sqrt(n) || pi == 0.0 || pi == 1.0) {
    return make_result("runs", 0.0, alpha,
                       {{"pi", pi}, {"prerequisite_failed", 1.0}});
  }
  double v_obs = 1.0;
  for (std::size_t i = 0; i + 1 < bits.size(); ++i) {
    if ((bits[i] != 0) != (bits[i + 1] != 0)) v_obs += 1.0;
  }
  const double product = pi * (1.0 - pi);
  const double p = sf::erfc(std::abs(v_obs - 2.0 * n * product) /
                            (2.0 * std::sqrt(2.0 * n) * product));
  return make_result("runs", p, alpha, {{"pi", pi}, {"v_obs", v_obs}});
}

TestResult longest_run(Bits bits, double alpha) {
  const std::size_t n = bits.size();
  if (n < 128) throw InvalidInput("longest_run: needs at least 128 bits");

  // Parameter table from the standard: block size M, K + 1 categories and
  // their theoretical probabilities.
  std::size_t m_len;
  int k;
  std::vector<double> pi;
  int cat_lo, cat_hi;  // longest-run values mapped to the first/last category
  if (n < 6272) {
    m_len = 8;
    k = 3;
    pi = {0.21484375, 0.3671875, 0.23046875, 0.1875};
    cat_lo = 1;
    cat_hi = 4;
  } else if (n < 750000) {
    m_len = 128;
    k = 5;
    pi = {0.1174035788, 0.242955959, 0.249363483,
          0.17517706,   0.102701071, 0.112398847};
    cat_lo = 4;
    cat_hi = 9;
  } else {
    m_len = 10000;
    k = 6;
    pi = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
    cat_lo = 10;
    cat_hi = 16;
  }

  const std::size_t blocks = n / m_len;
  std::vector<std::size_t> nu(static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t i = 0; i < blocks; ++i) {
    int run = 0;
    int longest = 0;
    for (std::size_t j = i * m_len; j < (i + 1) * m_len; ++j) {
      run = bits[j] ? run + 1 : 0;
      longest = std::max(longest, run);
    }
    const int cat = std::clamp(longest, cat_lo, cat_hi) - cat_lo;
    nu[static_cast<std::size_t>(cat)]++;
  }
  double chi2 = 0.0;
  for (int i = 0; i <= k; ++i) {
    const double expected = static_cast<double>(blocks) * pi[i];
    const double delta = static_cast<double>(nu[i]) - expected;
    chi2 += delta * delta / expected;
  }
  const double p = sf::igamc(static_cast<double>(k) / 2.0, chi2 / 2.0);
  return make_result("longest_run", p, alpha,
                     {{"M", static_cast<double>(m_len)},
                      {"K", static_cast<double>(k)},
                      {"chi2", chi2}});
}

TestResult dft_test(Bits bits, double alpha) {
  const std::size_t n = bits.size();
  if (n < 64 || n % 2 != 0) {
    throw InvalidInput("dft_test: needs an even length >= 64");
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = bits[i] ? 1.0 : -1.0;
  const std::vector<double> mags = fft::dft_magnitudes(x, n / 2);

  const double nd = static_cast<double>(n);
  const double threshold = std::sqrt(nd * std::log(1.0 / 0.05));
  std::size_t below = 0;
  for (double mag : mags) below += mag < threshold ? 1 : 0;
  const double n1 = static_cast<double>(below);
  const double n0 = 0.95 * nd / 2.0;
  const double d = (n1 - n0) / std::sqrt(nd * 0.95 * 0.05 / 4.0);
  const double p = sf::erfc(std::abs(d) / std::sqrt(2.0));
  return make_result("dft", p, alpha,
                     {{"threshold", threshold}, {"N0", n0}, {"N1", n1}});
}

TestResult serial(Bits bits, int m, double alpha) {
  require_nonempty(bits, "serial");
  // The recommended range for trustworthy asymptotics is
  // m < floor(log2 n) - 2; the standard's own worked examples sit below it,
  // so only infeasible values are rejected here.
  if (m < 1 || m > 19 || static_cast<std::size_t>(m) > bits.size()) {
    throw InvalidInput("serial: m out of range for this length");
  }
  const double psi_m = psi_squared(bits, m);
  const double psi_m1 = psi_squared(bits, m - 1);
  const double psi_m2 = psi_squared(bits, m - 2);
  const double del1 = psi_m - psi_m1;
  const double del2 = psi_m - 2.0 * psi_m1 + psi_m2;
  const double p1 = sf::igamc(std::pow(2.0, m - 2), del1 / 2.0);
  const double p2 = sf::igamc(std::pow(2.0, m - 3), del2 / 2.0);
  return make_result("serial", std::min(p1, p2), alpha,
                     {{"m", static_cast<double>(m)},
                      {"p1", p1},
                      {"p2", p2},
                      {"del1", del1},
                      {"del2", del2}});
}

TestResult approx_entropy(Bits bits, int m, double alpha) {
  require_nonempty(bits, "approx_entropy");
  const double n = static_cast<double>(bits.size());
  // Recommended range: m < floor(log2 n) - 5. As with serial, the worked
  // examples run below it, so only infeasible values are rejected.
  if (m < 1 || m + 1 > 19 ||
      static_cast<std::size_t>(m + 1) > bits.size()) {
    throw InvalidInput("approx_entropy: m out of range for this length");
  }
  const auto phi = [&](int mm) {
    const std::vector<std::size_t> counts = pattern_counts(bits, mm);
    double sum = 0.0;
    for (std::size_t c : counts) {
      if (c > 0) {
        const double q = static_cast<double>(c) / n;
        sum += q * std::log(q);
      }
    }
    return sum;
  };
  const double apen = phi(m) - phi(m + 1);
  const double chi2 = 2.0 * n * (std::log(2.0) - apen);
  const double p = sf::igamc(std::pow(2.0, m - 1), chi2 / 2.0);
  return make_result(
      "approx_entropy", p, alpha,
      {{"m", static_cast<double>(m)}, {"apen", apen}, {"chi2", chi2}});
}

TestResult cumulative_sums(Bits bits, CusumMode mode, double alpha) {
  require_nonempty(bits, "cumulative_sums");
  const std::int64_t n = static_cast<std::int64_t>(bits.size());
  std::int64_t sum = 0;
  std::int64_t z = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const std::size_t idx = static_cast<std::size_t>(
        mode == CusumMode::kForward ? i : n - 1 - i);
    sum += bits[idx] ? 1 : -1;
    z = std::max(z, sum < 0 ? -sum : sum);
  }
  if (z == 0) {
    // Impossible for nonempty +-1 sums; guards the divisions below.
    return make_result("cumulative_sums", 0.0, alpha, {{"z", 0.0}});
  }
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double zd = static_cast<double>(z);

  // Sum limits follow the reference implementation's integer arithmetic
  // (truncation toward zero).
  double sum1 = 0.0;
  for (std::int64_t k = (-n / z + 1) / 4; k <= (n / z - 1) / 4; ++k) {
    const double kd = static_cast<double>(k);
    sum1 += sf::normal_cdf((4.0 * kd + 1.0) * zd / sqrt_n) -
            sf::normal_cdf((4.0 * kd - 1.0) * zd / sqrt_n);
  }
  double sum2 = 0.0;
  for (std::int64_t k = (-n / z - 3) / 4; k <= (n / z - 1) / 4; ++k) {
    const double kd = static_cast<double>(k);
    sum2 += sf::normal_cdf((4.0 * kd + 3.0) * zd / sqrt_n) -
            sf::normal_cdf((4.0 * kd + 1.0) * zd / sqrt_n);
  }
  const double p = 1.0 - sum1 + sum2;
  return make_result(
      "cumulative_sums", p, alpha,
      {{"z", zd}, {"forward", mode == CusumMode::kForward ? 1.0 : 0.0}});
}

NistReport run_suite(const std::vector<std::vector<std::uint8_t>>& sequences,
                     double alpha) {
  if (sequences.empty()) {
    throw InvalidInput("run_suite: no sequences");
  }
  if (!(alpha > 0.0) || !(alpha < 0.5)) {
    throw InvalidInput("run_suite: alpha must lie in (0, 0.5)");
  }
  const std::size_t len = sequences.front().size();
  for (const auto& s : sequences) {
    if (s.size() != len) {
      throw InvalidInput("run_suite: sequences must all have the same length");
    }
  }
  if (len < 128) {
    throw InvalidInput("run_suite: sequences must hold at least 128 bits");
  }

  NistReport report;
  report.alpha = alpha;
  report.sequence_count = sequences.size();
  report.per_sequence.reserve(sequences.size());
  for (const auto& seq : sequences) {
    const Bits bits(seq);
    std::vector<TestResult> row;
    row.reserve(kSuiteTestNames.size());
    row.push_back(monobit(bits, alpha));
    row.push_back(block_frequency(bits, 128, alpha));
    row.push_back(runs(bits, alpha));
    row.push_back(longest_run(bits, alpha));
    row.push_back(dft_test(bits, alpha));
    row.push_back(serial(bits, 2, alpha));
    row.push_back(approx_entropy(bits, 2, alpha));
    row.push_back(cumulative_sums(bits, CusumMode::kForward, alpha));
    report.per_sequence.push_back(std::move(row));
  }

  for (std::size_t t = 0; t < kSuiteTestNames.size(); ++t) {
    AggregateRow agg;
    agg.test_name = kSuiteTestNames[t];
    for (const auto& row : report.per_sequence) {
      agg.mean_p += row[t].p_value;
      agg.pass_rate += row[t].passed ? 1.0 : 0.0;
    }
    const double count = static_cast<double>(report.per_sequence.size());
    agg.mean_p /= count;
    agg.pass_rate /= count;
    report.aggregate.push_back(std::move(agg));
  }
  return report;
}

}  // namespace pufsim::nist
