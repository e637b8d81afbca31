#include "pufsim/readout.hpp"

#include <algorithm>
#include <cmath>

#include "pufsim/errors.hpp"
#include "pufsim/rng.hpp"

namespace pufsim {

namespace {

constexpr double kVoltsPerPicoampGigaohm = 1e-6;
constexpr double kReferenceKelvin = 308.15;  // 35 degC

double linear_gain(double gain_db) { return std::pow(10.0, gain_db / 20.0); }

}  // namespace

void ReadoutConfig::validate() const {
  if (!std::isfinite(v3) || !std::isfinite(r_pseudo_nominal) ||
      !std::isfinite(r_supply_coeff) || !std::isfinite(gain_db) ||
      !std::isfinite(noise_sigma_ref) || !std::isfinite(offset_sigma)) {
    throw InvalidInput("ReadoutConfig: non-finite field");
  }
  if (!(r_pseudo_nominal > 0.0)) {
    throw InvalidInput("ReadoutConfig: r_pseudo_nominal must be > 0");
  }
  if (!(gain_db > 0.0)) throw InvalidInput("ReadoutConfig: gain_db must be > 0");
  if (noise_sigma_ref < 0.0 || offset_sigma < 0.0) {
    throw InvalidInput("ReadoutConfig: sigmas must be >= 0");
  }
}

double i_to_v(double i_pa, double v3, double r_pseudo_gohm, double vdd) {
  if (!std::isfinite(i_pa) || !std::isfinite(v3) ||
      !std::isfinite(r_pseudo_gohm) || !std::isfinite(vdd)) {
    throw InvalidInput("i_to_v: non-finite input");
  }
  if (!(r_pseudo_gohm > 0.0)) {
    throw InvalidInput("i_to_v: r_pseudo must be > 0");
  }
  const double v = v3 - i_pa * r_pseudo_gohm * kVoltsPerPicoampGigaohm;
  return std::clamp(v, 0.0, vdd);
}

double effective_r_pseudo(const ReadoutConfig& config, const Environment& env) {
  const double r =
      config.r_pseudo_nominal * (1.0 + config.r_supply_coeff * (env.vdd - 1.2));
  return std::max(r, 0.1 * config.r_pseudo_nominal);
}

double amplify(double delta_v, double gain_db, double vdd) {
  if (!std::isfinite(delta_v)) throw InvalidInput("amplify: non-finite input");
  return std::clamp(delta_v * linear_gain(gain_db), -vdd, vdd);
}

int compare(double delta_v_amp, double noise_sigma, double offset,
            std::uint64_t noise_seed) {
  if (noise_sigma < 0.0) {
    throw InvalidInput("compare: noise_sigma must be >= 0");
  }
  const double noise =
      noise_sigma > 0.0 ? noise_sigma * rng::gaussian_from_seed(noise_seed) : 0.0;
  return (delta_v_amp + offset + noise) > 0.0 ? 1 : 0;
}

double amplified_margin(double i_o1, double i_o2, const ReadoutConfig& config,
                        const Environment& env) {
  const double r = effective_r_pseudo(config, env);
  const double v_o1 = i_to_v(i_o1, config.v3, r, env.vdd);
  const double v_o2 = i_to_v(i_o2, config.v3, r, env.vdd);
  return amplify(v_o1 - v_o2, config.gain_db, env.vdd);
}

double noise_sigma_post(const ReadoutConfig& config, const Environment& env) {
  return config.noise_sigma_ref * 1e-6 * linear_gain(config.gain_db) *
         std::sqrt((env.temperature + 273.15) / kReferenceKelvin);
}

double draw_array_offset(const ReadoutConfig& config,
                         std::uint64_t array_seed) {
  if (config.offset_sigma <= 0.0) return 0.0;
  return config.offset_sigma * 1e-6 *
         rng::gaussian_from_seed(
             rng::derive(array_seed, rng::label::kOffset, 0));
}

int read_bit(double i_o1, double i_o2, const ReadoutConfig& config,
             const Environment& env, double array_offset_v,
             std::uint64_t noise_seed) {
  const double margin = amplified_margin(i_o1, i_o2, config, env);
  return compare(margin, noise_sigma_post(config, env),
                 array_offset_v * linear_gain(config.gain_db), noise_seed);
}

}  // namespace pufsim
