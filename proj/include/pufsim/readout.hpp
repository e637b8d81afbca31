#pragma once

#include <cstdint>

#include "pufsim/leakage.hpp"

namespace pufsim {

/// Readout front end: pseudo-resistor I-to-V conversion, differential
/// amplification, comparator with seeded Gaussian noise.
///
/// Voltages in volts. Noise and offset sigmas are given in microvolts and
/// are referred to the differential voltage before amplification; the
/// comparator sees them scaled by the linear gain.
struct ReadoutConfig {
  double v3 = 0.6;                // I-to-V bias, V
  double r_pseudo_nominal = 10.0; // GOhm at vdd = 1.2 V
  double r_supply_coeff = 0.5;    // fractional resistance change per volt
  double gain_db = 30.0;          // amplifier voltage gain
  double noise_sigma_ref = 120.0; // uV rms at 1.2 V / 35 degC
  double offset_sigma = 0.0;      // uV, per-array static comparator offset

  void validate() const;
  static ReadoutConfig defaults() { return ReadoutConfig{}; }
};

/// v3 - i * r, clamped to the [0, vdd] rails.
/// Product scale: 1 pA through 1 GOhm drops 1 uV.
double i_to_v(double i_pa, double v3, double r_pseudo_gohm, double vdd);

/// Supply-dependent pseudo-resistor value:
/// r_nominal * (1 + coeff * (vdd - 1.2)), floored at 0.1 * r_nominal.
double effective_r_pseudo(const ReadoutConfig& config, const Environment& env);

/// delta_v * 10^(gain_db/20), saturating at +-vdd.
double amplify(double delta_v, double gain_db, double vdd);

/// Comparator decision: 1 when delta_v_amp + offset + n > 0 with
/// n ~ Normal(0, noise_sigma) drawn from the seed; exact zero gives 0.
int compare(double delta_v_amp, double noise_sigma, double offset,
            std::uint64_t noise_seed);

/// Amplified differential voltage V_O1 - V_O2 for a current pair.
double amplified_margin(double i_o1, double i_o2, const ReadoutConfig& config,
                        const Environment& env);

/// Comparator-referred noise sigma in volts: the configured reference
/// value scaled by the linear gain and by sqrt((T + 273.15) / 308.15).
double noise_sigma_post(const ReadoutConfig& config, const Environment& env);

/// Static comparator offset of one array in volts (pre-amplifier
/// referred), drawn once from Normal(0, offset_sigma) via the array seed.
double draw_array_offset(const ReadoutConfig& config, std::uint64_t array_seed);

/// Full chain: I-to-V on both branches, amplify, compare.
/// array_offset_v is the pre-amplifier-referred offset in volts.
int read_bit(double i_o1, double i_o2, const ReadoutConfig& config,
             const Environment& env, double array_offset_v,
             std::uint64_t noise_seed);

}  // namespace pufsim
