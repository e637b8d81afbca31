#include "pufsim/leakage.hpp"

#include <cmath>
#include <cstddef>

#include "pufsim/errors.hpp"
#include "pufsim/rng.hpp"

namespace pufsim {

namespace {

bool all_finite(std::initializer_list<double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace

void ModelConstants::validate() const {
  if (!all_finite({k_dt, b_dt, t_ox_nominal, sigma_tox, sigma_k, alpha_t, f_gs,
                   f_gd, f_gcs, f_gcd, f_gb})) {
    throw InvalidInput("ModelConstants: non-finite field");
  }
  if (!(k_dt > 0.0)) throw InvalidInput("ModelConstants: k_dt must be > 0");
  if (!(t_ox_nominal > 0.0)) {
    throw InvalidInput("ModelConstants: t_ox_nominal must be > 0");
  }
  if (sigma_tox < 0.0 || sigma_k < 0.0) {
    throw InvalidInput("ModelConstants: sigmas must be >= 0");
  }
  const double fracs[] = {f_gs, f_gd, f_gcs, f_gcd, f_gb};
  double sum = 0.0;
  for (double f : fracs) {
    if (f < 0.0) throw InvalidInput("ModelConstants: negative fraction");
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InvalidInput("ModelConstants: fractions must sum to 1");
  }
  if (!(f_gcs + f_gcd > f_gs + f_gd + f_gb)) {
    throw InvalidInput("ModelConstants: channel components must dominate");
  }
}

ModelConstants ModelConstants::defaults() {
  ModelConstants m{};
  m.k_dt = 456719630.91469634;  // calibrate(28.1986, 8411.84) on this template
  m.b_dt = 6.0;
  m.t_ox_nominal = 2.0;
  m.sigma_tox = 0.10;
  m.sigma_k = 0.05;
  m.alpha_t = 5.0e-4;
  m.f_gs = 0.05;
  m.f_gd = 0.05;
  m.f_gcs = 0.42;
  m.f_gcd = 0.42;
  m.f_gb = 0.06;
  return m;
}

void DeviceInstance::validate() const {
  if (!all_finite({t_ox, area, k_local})) {
    throw InvalidInput("DeviceInstance: non-finite field");
  }
  if (!(t_ox > 0.0) || !(area > 0.0) || !(k_local > 0.0)) {
    throw InvalidInput("DeviceInstance: fields must be > 0");
  }
}

void Environment::validate() const {
  if (!all_finite({vdd, v2, temperature})) {
    throw InvalidInput("Environment: non-finite field");
  }
  if (vdd < 0.9 || vdd > 1.3) {
    throw InvalidInput("Environment: vdd outside supported range [0.9, 1.3]");
  }
  if (v2 < 0.0) throw InvalidInput("Environment: v2 must be >= 0");
}

LeakageBreakdown gate_leakage(const DeviceInstance& device,
                              const ModelConstants& model,
                              const Environment& env) {
  if (!all_finite({device.t_ox, device.area, device.k_local, env.vdd, env.v2,
                   env.temperature})) {
    throw InvalidInput("gate_leakage: non-finite input");
  }
  if (!(device.t_ox > 0.0)) {
    throw InvalidInput("gate_leakage: t_ox must be > 0");
  }
  LeakageBreakdown out{};
  if (env.v2 <= 0.0) return out;

  const double field = env.v2 / device.t_ox;  // V/nm
  const double total = device.k_local * model.k_dt * device.area * field *
                       field * std::exp(-model.b_dt * device.t_ox / env.v2) *
                       (1.0 + model.alpha_t * (env.temperature - 35.0));
  out.i_gs = total * model.f_gs;
  out.i_gd = total * model.f_gd;
  out.i_gcs = total * model.f_gcs;
  out.i_gcd = total * model.f_gcd;
  out.i_gb = total * model.f_gb;
  out.total = total;
  return out;
}

DeviceInstance sample_device(const ModelConstants& model, double area,
                             std::uint64_t seed) {
  model.validate();
  if (!std::isfinite(area) || !(area > 0.0)) {
    throw InvalidInput("sample_device: area must be > 0");
  }
  DeviceInstance d{};
  d.area = area;

  d.t_ox = model.t_ox_nominal;
  if (model.sigma_tox > 0.0) {
    const double lo = 0.5 * model.t_ox_nominal;
    const double hi = 1.5 * model.t_ox_nominal;
    rng::Prng stream(rng::derive(seed, rng::label::kDeviceTox, 0));
    // Rejection-sample the truncated Gaussian; the window is centered on
    // the mean, so acceptance is fast for any sigma. Falls back to the
    // nominal value if the budget is ever exhausted.
    for (int attempt = 0; attempt < 1024; ++attempt) {
      const double t =
          model.t_ox_nominal + model.sigma_tox * stream.next_gaussian();
      if (t > lo && t < hi) {
        d.t_ox = t;
        break;
      }
    }
  }

  d.k_local = 1.0;
  if (model.sigma_k > 0.0) {
    rng::Prng stream(rng::derive(seed, rng::label::kDeviceK, 0));
    d.k_local = std::exp(model.sigma_k * stream.next_gaussian());
  }
  return d;
}

DifferentialStats differential_leakage_stats(const ModelConstants& model,
                                             std::size_t pairs,
                                             std::uint64_t seed) {
  model.validate();
  if (pairs == 0) {
    throw InvalidInput("differential_leakage_stats: pairs must be >= 1");
  }
  const Environment env = Environment::reference();
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const DeviceInstance a =
        sample_device(model, 1.0, rng::derive(seed, rng::label::kCalibration, 2 * i));
    const DeviceInstance b = sample_device(
        model, 1.0, rng::derive(seed, rng::label::kCalibration, 2 * i + 1));
    const double diff =
        gate_leakage(a, model, env).total - gate_leakage(b, model, env).total;
    sum += diff;
    sum_sq += diff * diff;
  }
  const double n = static_cast<double>(pairs);
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  return DifferentialStats{mean, std::sqrt(var > 0.0 ? var : 0.0)};
}

ModelConstants calibrate(double target_diff_mean_pa, double target_diff_std_pa,
                         const ModelConstants& model_template) {
  if (!std::isfinite(target_diff_mean_pa) ||
      !std::isfinite(target_diff_std_pa) || !(target_diff_std_pa > 0.0)) {
    throw InvalidInput("calibrate: target std must be finite and > 0");
  }
  model_template.validate();

  constexpr std::size_t kPairs = 40000;
  constexpr std::uint64_t kSeed = 0x43414c4942524154ULL;
  constexpr int kBudget = 32;

  ModelConstants m = model_template;
  for (int iter = 0; iter < kBudget; ++iter) {
    const DifferentialStats stats =
        differential_leakage_stats(m, kPairs, kSeed);
    const double rel_err =
        std::abs(stats.stddev - target_diff_std_pa) / target_diff_std_pa;
    if (rel_err <= 0.0025) {
      if (std::abs(stats.mean) > 0.05 * target_diff_std_pa) {
        throw CalibrationError(
            "calibrate: differential mean outside tolerance after std match");
      }
      return m;
    }
    if (!(stats.stddev > 0.0)) {
      throw CalibrationError("calibrate: degenerate differential spread");
    }
    m.k_dt *= target_diff_std_pa / stats.stddev;
  }
  throw CalibrationError("calibrate: iteration budget exhausted");
}

}  // namespace pufsim
