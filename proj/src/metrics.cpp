#include "pufsim/metrics.hpp"

#include <cmath>

#include "pufsim/errors.hpp"

namespace pufsim {

double uniformity(std::span<const std::uint8_t> bits) {
  if (bits.empty()) throw InvalidInput("uniformity: empty bit sequence");
  std::size_t ones = 0;
  for (std::uint8_t b : bits) ones += b ? 1 : 0;
  return static_cast<double>(ones) / static_cast<double>(bits.size());
}

double shannon_entropy(double p) {
  if (!(p >= 0.0) || !(p <= 1.0)) {
    throw InvalidInput("shannon_entropy: p outside [0, 1]");
  }
  double e = 0.0;
  if (p > 0.0) e -= p * std::log2(p);
  if (p < 1.0) e -= (1.0 - p) * std::log2(1.0 - p);
  return e;
}

double fhd(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.empty() || a.size() != b.size()) {
    throw InvalidInput("fhd: sequences must have equal nonzero length");
  }
  std::size_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff += (a[i] != 0) != (b[i] != 0) ? 1 : 0;
  }
  return static_cast<double>(diff) / static_cast<double>(a.size());
}

FhdStats inter_fhd_stats(const std::vector<Response>& responses) {
  if (responses.size() < 2) {
    throw InvalidInput("inter_fhd_stats: need at least 2 responses");
  }
  const std::size_t len = responses.front().bits.size();
  for (const Response& r : responses) {
    if (r.bits.size() != len) {
      throw InvalidInput("inter_fhd_stats: responses must have equal length");
    }
  }
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < responses.size(); ++i) {
    for (std::size_t j = i + 1; j < responses.size(); ++j) {
      const double d = fhd(responses[i].bits, responses[j].bits);
      sum += d;
      sum_sq += d * d;
      ++pairs;
    }
  }
  const double n = static_cast<double>(pairs);
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  return FhdStats{pairs, mean, std::sqrt(var > 0.0 ? var : 0.0)};
}

double ber(const Response& reference, const std::vector<Response>& trials) {
  if (trials.empty()) throw InvalidInput("ber: need at least one trial");
  if (reference.bits.empty()) throw InvalidInput("ber: empty reference");
  std::size_t mismatches = 0;
  for (const Response& trial : trials) {
    if (trial.bits.size() != reference.bits.size()) {
      throw InvalidInput("ber: trial length differs from reference");
    }
    for (std::size_t i = 0; i < trial.bits.size(); ++i) {
      mismatches += (trial.bits[i] != 0) != (reference.bits[i] != 0) ? 1 : 0;
    }
  }
  return static_cast<double>(mismatches) /
         (static_cast<double>(trials.size()) *
          static_cast<double>(reference.bits.size()));
}

std::vector<BerGridPoint> ber_sweep(const PufArray& array,
                                    const Challenge& challenge,
                                    const ReadoutConfig& config,
                                    std::span<const double> vdd_list,
                                    std::span<const double> temp_list,
                                    std::size_t trials, std::uint64_t seed) {
  if (vdd_list.empty() || temp_list.empty()) {
    throw InvalidInput("ber_sweep: grids must be nonempty");
  }
  if (trials == 0) throw InvalidInput("ber_sweep: trials must be >= 1");
  for (double vdd : vdd_list) Environment::at(vdd, 35.0).validate();

  const Response reference =
      golden_response(array, challenge, Environment::reference(), config);

  std::vector<BerGridPoint> out;
  out.reserve(vdd_list.size() * temp_list.size());
  for (double vdd : vdd_list) {
    for (double temp : temp_list) {
      const Environment env = Environment::at(vdd, temp);
      const std::vector<Response> evals =
          repeat_evaluate(array, challenge, env, config, trials, seed);
      out.push_back(BerGridPoint{vdd, temp, trials, ber(reference, evals)});
    }
  }
  return out;
}

}  // namespace pufsim
