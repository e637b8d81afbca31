// Command-line front end: seeded array generation, quality metrics,
// BER sweeps, SP 800-22 batteries and speckle bitmaps as on-disk artifacts.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pufsim/bitstream.hpp"
#include "pufsim/config.hpp"
#include "pufsim/crp.hpp"
#include "pufsim/errors.hpp"
#include "pufsim/metrics.hpp"
#include "pufsim/nist.hpp"
#include "pufsim/puf_array.hpp"
#include "pufsim/rng.hpp"

namespace {

// Exit codes: 0 success, 2 usage error, 3 data/parse error,
// 4 internal numeric failure.
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string config_path;
  pufsim::Config config;

  void load() {
    if (!config_path.empty()) {
      config = pufsim::Config::parse_file(config_path);
      pufsim::validate_known_keys(config);
    }
  }

  pufsim::ModelConstants model() const {
    return pufsim::model_from_config(config);
  }
  pufsim::ReadoutConfig readout() const {
    return pufsim::readout_from_config(config);
  }
  pufsim::Environment environment() const {
    return pufsim::environment_from_config(config);
  }
  double device_area() const {
    return config.get_double("model.device_area", 1.0);
  }
};

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pufsim::ParseError(path + ": cannot open file for writing");
  out << content;
  if (!out) throw pufsim::ParseError(path + ": write failed");
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_text_file(out_path, content);
  }
}

std::vector<double> parse_list(const std::string& csv, const char* flag) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": bad number `" + item + "`");
    }
  }
  if (values.empty()) throw UsageError(std::string(flag) + ": empty list");
  return values;
}

// ---------------------------------------------------------------- gen ----

struct GenOptions {
  CommonOptions common;
  std::uint64_t arrays = 1;
  std::uint64_t bits = 4096;
  std::uint64_t base_seed = 1;
  bool arrays_given = false, bits_given = false, seed_given = false;
  std::string out_path;
  std::string manifest_path;
};

int run_gen(GenOptions& opt) {
  opt.common.load();
  const pufsim::Config& cfg = opt.common.config;
  if (!opt.arrays_given) opt.arrays = cfg.get_u64("run.arrays", opt.arrays);
  if (!opt.bits_given) opt.bits = cfg.get_u64("run.bits", opt.bits);
  if (!opt.seed_given) opt.base_seed = cfg.get_u64("run.base_seed", opt.base_seed);

  if (opt.arrays < 1) throw UsageError("gen: --arrays must be >= 1");
  if (opt.bits < 1 || opt.bits > 4096) {
    throw UsageError("gen: --bits must lie in [1, 4096]");
  }

  const pufsim::ModelConstants model = opt.common.model();
  const pufsim::ReadoutConfig readout = opt.common.readout();
  const pufsim::Environment env = opt.common.environment();
  const double area = opt.common.device_area();
  const pufsim::Challenge challenge = pufsim::Challenge::canonical(opt.bits);

  std::vector<std::vector<std::uint8_t>> rows;
  std::vector<std::uint64_t> seeds;
  rows.reserve(opt.arrays);
  for (std::uint64_t i = 0; i < opt.arrays; ++i) {
    const std::uint64_t seed =
        pufsim::rng::derive(opt.base_seed, pufsim::rng::label::kArray, i);
    seeds.push_back(seed);
    const pufsim::PufArray array = pufsim::build_array(seed, model, area);
    rows.push_back(
        pufsim::golden_response(array, challenge, env, readout).bits);
  }

  pufsim::Config manifest;
  manifest.set_u64("run.arrays", opt.arrays);
  manifest.set_u64("run.bits", opt.bits);
  manifest.set_u64("run.base_seed", opt.base_seed);
  manifest.set_double("model.device_area", area);
  pufsim::write_model(manifest, model);
  pufsim::write_readout(manifest, readout);
  pufsim::write_environment(manifest, env);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    char key[32];
    std::snprintf(key, sizeof(key), "seed.array.%05zu", i);
    manifest.set_u64(key, seeds[i]);
  }

  pufsim::write_bitstream_file(
      opt.out_path, rows,
      {"golden responses, canonical ascending-address challenge",
       "arrays=" + std::to_string(opt.arrays) +
           " bits=" + std::to_string(opt.bits) +
           " base_seed=" + std::to_string(opt.base_seed)});
  const std::string manifest_path =
      opt.manifest_path.empty() ? opt.out_path + ".manifest" : opt.manifest_path;
  write_text_file(manifest_path, manifest.serialize());
  return 0;
}

// ------------------------------------------------------------ metrics ----

struct MetricsOptions {
  std::string in_path;
  std::string out_path;
};

int run_metrics(const MetricsOptions& opt) {
  const auto rows = pufsim::read_bitstream_file(opt.in_path);

  std::vector<std::uint8_t> pooled;
  for (const auto& row : rows) pooled.insert(pooled.end(), row.begin(), row.end());
  const double ones_fraction = pufsim::uniformity(pooled);
  const double entropy = pufsim::shannon_entropy(ones_fraction);

  std::string csv = "metric,value\n";
  csv += "arrays," + std::to_string(rows.size()) + "\n";
  csv += "bits_per_array," + std::to_string(rows.front().size()) + "\n";
  csv += "uniformity," + pufsim::format_double(ones_fraction) + "\n";
  csv += "shannon_entropy," + pufsim::format_double(entropy) + "\n";
  if (rows.size() >= 2) {
    std::vector<pufsim::Response> responses;
    responses.reserve(rows.size());
    for (const auto& row : rows) responses.push_back(pufsim::Response{row});
    const pufsim::FhdStats stats = pufsim::inter_fhd_stats(responses);
    csv += "fhd_pairs," + std::to_string(stats.pair_count) + "\n";
    csv += "fhd_mean," + pufsim::format_double(stats.mean) + "\n";
    csv += "fhd_std," + pufsim::format_double(stats.stddev) + "\n";
  } else {
    csv += "fhd_note,insufficient arrays\n";
  }
  emit(opt.out_path, csv);
  return 0;
}

// ---------------------------------------------------------- ber-sweep ----

struct BerSweepOptions {
  CommonOptions common;
  std::string vdd_csv = "0.9,1.0,1.1,1.2,1.3";
  std::string temps_csv = "0,10,20,30,40,50,60,70,80,90,100";
  std::uint64_t trials = 100;
  std::uint64_t arrays = 5;
  std::uint64_t base_seed = 1;
  bool trials_given = false, arrays_given = false, seed_given = false;
  std::string out_path;
};

int run_ber_sweep(BerSweepOptions& opt) {
  opt.common.load();
  const pufsim::Config& cfg = opt.common.config;
  if (!opt.trials_given) opt.trials = cfg.get_u64("run.trials", opt.trials);
  if (!opt.arrays_given) opt.arrays = cfg.get_u64("run.arrays", opt.arrays);
  if (!opt.seed_given) opt.base_seed = cfg.get_u64("run.base_seed", opt.base_seed);

  const std::vector<double> vdds = parse_list(opt.vdd_csv, "--vdd");
  const std::vector<double> temps = parse_list(opt.temps_csv, "--temps");
  if (opt.trials < 1) throw UsageError("ber-sweep: --trials must be >= 1");
  if (opt.arrays < 1) throw UsageError("ber-sweep: --arrays must be >= 1");
  for (double vdd : vdds) {
    if (vdd < 0.9 || vdd > 1.3) {
      throw UsageError("ber-sweep: --vdd values must lie in [0.9, 1.3]");
    }
  }

  const pufsim::ModelConstants model = opt.common.model();
  const pufsim::ReadoutConfig readout = opt.common.readout();
  const double area = opt.common.device_area();
  const pufsim::Challenge challenge = pufsim::Challenge::canonical(4096);

  std::vector<double> ber_sums;
  std::vector<pufsim::BerGridPoint> grid;
  for (std::uint64_t i = 0; i < opt.arrays; ++i) {
    const std::uint64_t seed =
        pufsim::rng::derive(opt.base_seed, pufsim::rng::label::kArray, i);
    const pufsim::PufArray array = pufsim::build_array(seed, model, area);
    const auto points = pufsim::ber_sweep(array, challenge, readout, vdds,
                                          temps, opt.trials, opt.base_seed);
    if (ber_sums.empty()) {
      ber_sums.assign(points.size(), 0.0);
      grid = points;
    }
    for (std::size_t p = 0; p < points.size(); ++p) {
      ber_sums[p] += points[p].ber;
    }
  }

  std::string csv = "vdd,temp_c,trials,ber\n";
  for (std::size_t p = 0; p < grid.size(); ++p) {
    csv += pufsim::format_double(grid[p].vdd) + "," +
           pufsim::format_double(grid[p].temperature) + "," +
           std::to_string(opt.trials) + "," +
           pufsim::format_double(ber_sums[p] / static_cast<double>(opt.arrays)) +
           "\n";
  }
  emit(opt.out_path, csv);
  return 0;
}

// --------------------------------------------------------------- nist ----

struct NistOptions {
  std::string in_path;
  double alpha = 0.001;
  std::string out_path;
  std::string per_sequence_path;
};

int run_nist(const NistOptions& opt) {
  if (!(opt.alpha > 0.0) || !(opt.alpha < 0.5)) {
    throw UsageError("nist: --alpha must lie in (0, 0.5)");
  }
  const auto rows = pufsim::read_bitstream_file(opt.in_path);
  const pufsim::nist::NistReport report = pufsim::nist::run_suite(rows, opt.alpha);

  std::string csv = "test,sequences,mean_p,pass_rate\n";
  for (const auto& agg : report.aggregate) {
    csv += agg.test_name + "," + std::to_string(report.sequence_count) + "," +
           pufsim::format_double(agg.mean_p) + "," +
           pufsim::format_double(agg.pass_rate) + "\n";
  }
  emit(opt.out_path, csv);

  if (!opt.per_sequence_path.empty()) {
    std::string long_csv = "sequence,test,p_value,passed\n";
    for (std::size_t s = 0; s < report.per_sequence.size(); ++s) {
      for (const auto& result : report.per_sequence[s]) {
        long_csv += std::to_string(s) + "," + result.test_name + "," +
                    pufsim::format_double(result.p_value) + "," +
                    (result.passed ? "1" : "0") + "\n";
      }
    }
    write_text_file(opt.per_sequence_path, long_csv);
  }
  return 0;
}

// ------------------------------------------------------------- speckle ----

struct SpeckleOptions {
  CommonOptions common;
  std::uint64_t seed = 1;
  std::string out_path;
};

int run_speckle(SpeckleOptions& opt) {
  opt.common.load();
  const pufsim::ModelConstants model = opt.common.model();
  const pufsim::ReadoutConfig readout = opt.common.readout();
  const pufsim::Environment env = opt.common.environment();
  const pufsim::PufArray array =
      pufsim::build_array(opt.seed, model, opt.common.device_area());
  const pufsim::Response response = pufsim::golden_response(
      array, pufsim::Challenge::canonical(4096), env, readout);
  pufsim::write_pbm(opt.out_path, response.bits, pufsim::PufArray::kDim,
                    pufsim::PufArray::kDim);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"behavioral gate-leakage PUF simulator"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "generate golden response bitstreams");
  gen_cmd->add_option("--config", gen.common.config_path, "config file");
  auto* gen_arrays = gen_cmd->add_option("--arrays", gen.arrays, "array count");
  auto* gen_bits = gen_cmd->add_option("--bits", gen.bits, "bits per response");
  auto* gen_seed = gen_cmd->add_option("--seed", gen.base_seed, "base seed");
  gen_cmd->add_option("--out", gen.out_path, "output bitstream path")
      ->required();
  gen_cmd->add_option("--manifest", gen.manifest_path,
                      "manifest path (default: <out>.manifest)");

  MetricsOptions metrics;
  CLI::App* metrics_cmd =
      app.add_subcommand("metrics", "uniformity, entropy and inter-array FHD");
  metrics_cmd->add_option("--in", metrics.in_path, "input bitstream")
      ->required();
  metrics_cmd->add_option("--out", metrics.out_path,
                          "report CSV path (default: stdout)");

  BerSweepOptions sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("ber-sweep", "BER over a voltage/temperature grid");
  sweep_cmd->add_option("--config", sweep.common.config_path, "config file");
  sweep_cmd->add_option("--vdd", sweep.vdd_csv, "comma-separated vdd list");
  sweep_cmd->add_option("--temps", sweep.temps_csv,
                        "comma-separated temperature list");
  auto* sweep_trials =
      sweep_cmd->add_option("--trials", sweep.trials, "trials per grid point");
  auto* sweep_arrays =
      sweep_cmd->add_option("--arrays", sweep.arrays, "arrays to average");
  auto* sweep_seed = sweep_cmd->add_option("--seed", sweep.base_seed, "base seed");
  sweep_cmd->add_option("--out", sweep.out_path, "CSV path (default: stdout)");

  NistOptions nist;
  CLI::App* nist_cmd =
      app.add_subcommand("nist", "SP 800-22 battery over a bitstream file");
  nist_cmd->add_option("--in", nist.in_path, "input bitstream")->required();
  nist_cmd->add_option("--alpha", nist.alpha, "significance level");
  nist_cmd->add_option("--out", nist.out_path,
                       "aggregate CSV path (default: stdout)");
  nist_cmd->add_option("--per-sequence", nist.per_sequence_path,
                       "long-form per-sequence CSV path");

  SpeckleOptions speckle;
  CLI::App* speckle_cmd =
      app.add_subcommand("speckle", "64x64 golden-response bitmap (PBM)");
  speckle_cmd->add_option("--config", speckle.common.config_path, "config file");
  speckle_cmd->add_option("--seed", speckle.seed, "array seed");
  speckle_cmd->add_option("--out", speckle.out_path, "output PBM path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) {
      gen.arrays_given = gen_arrays->count() > 0;
      gen.bits_given = gen_bits->count() > 0;
      gen.seed_given = gen_seed->count() > 0;
      return run_gen(gen);
    }
    if (*metrics_cmd) return run_metrics(metrics);
    if (*sweep_cmd) {
      sweep.trials_given = sweep_trials->count() > 0;
      sweep.arrays_given = sweep_arrays->count() > 0;
      sweep.seed_given = sweep_seed->count() > 0;
      return run_ber_sweep(sweep);
    }
    if (*nist_cmd) return run_nist(nist);
    if (*speckle_cmd) return run_speckle(speckle);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pufsim::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const pufsim::AddressError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const pufsim::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const pufsim::CalibrationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}
