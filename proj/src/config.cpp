#include "pufsim/config.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "pufsim/errors.hpp"

namespace pufsim {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

constexpr std::array<const char*, 12> kModelKeys = {
    "model.k_dt",      "model.b_dt",  "model.t_ox_nominal",
    "model.sigma_tox", "model.sigma_k", "model.alpha_t",
    "model.f_gs",      "model.f_gd",  "model.f_gcs",
    "model.f_gcd",     "model.f_gb",  "model.device_area",
};

constexpr std::array<const char*, 6> kReadoutKeys = {
    "readout.v3",
    "readout.r_pseudo_nominal",
    "readout.r_supply_coeff",
    "readout.gain_db",
    "readout.noise_sigma_ref",
    "readout.offset_sigma",
};

constexpr std::array<const char*, 3> kEnvKeys = {
    "env.vdd",
    "env.v2",
    "env.temperature",
};

constexpr std::array<const char*, 4> kRunKeys = {
    "run.arrays",
    "run.bits",
    "run.base_seed",
    "run.trials",
};

}  // namespace

Config Config::parse_string(std::string_view text, const std::string& origin) {
  Config config;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                       : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(origin, line_no, "expected `key = value`");
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string value{trim(line.substr(eq + 1))};
    if (key.empty()) throw ParseError(origin, line_no, "empty key");
    config.entries_[key] = value;
  }
  return config;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_string(buffer.str(), path);
}

double Config::get_double(const std::string& key, double fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  const std::string& s = it->second;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("config key `" + key + "`: not a number: `" + s + "`");
  }
  return value;
}

std::uint64_t Config::get_u64(const std::string& key,
                              std::uint64_t fallback) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  const std::string& s = it->second;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("config key `" + key + "`: not an unsigned integer: `" +
                     s + "`");
  }
  return value;
}

void Config::set(const std::string& key, const std::string& value) {
  entries_[key] = value;
}

void Config::set_double(const std::string& key, double value) {
  entries_[key] = format_double(value);
}

void Config::set_u64(const std::string& key, std::uint64_t value) {
  entries_[key] = std::to_string(value);
}

std::string Config::serialize() const {
  std::string out;
  for (const auto& [key, value] : entries_) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  }
  return out;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw InvalidInput("format_double: conversion failed");
  return std::string(buf.data(), ptr);
}

ModelConstants model_from_config(const Config& config) {
  ModelConstants m = ModelConstants::defaults();
  m.k_dt = config.get_double("model.k_dt", m.k_dt);
  m.b_dt = config.get_double("model.b_dt", m.b_dt);
  m.t_ox_nominal = config.get_double("model.t_ox_nominal", m.t_ox_nominal);
  m.sigma_tox = config.get_double("model.sigma_tox", m.sigma_tox);
  m.sigma_k = config.get_double("model.sigma_k", m.sigma_k);
  m.alpha_t = config.get_double("model.alpha_t", m.alpha_t);
  m.f_gs = config.get_double("model.f_gs", m.f_gs);
  m.f_gd = config.get_double("model.f_gd", m.f_gd);
  m.f_gcs = config.get_double("model.f_gcs", m.f_gcs);
  m.f_gcd = config.get_double("model.f_gcd", m.f_gcd);
  m.f_gb = config.get_double("model.f_gb", m.f_gb);
  m.validate();
  return m;
}

ReadoutConfig readout_from_config(const Config& config) {
  ReadoutConfig r = ReadoutConfig::defaults();
  r.v3 = config.get_double("readout.v3", r.v3);
  r.r_pseudo_nominal =
      config.get_double("readout.r_pseudo_nominal", r.r_pseudo_nominal);
  r.r_supply_coeff =
      config.get_double("readout.r_supply_coeff", r.r_supply_coeff);
  r.gain_db = config.get_double("readout.gain_db", r.gain_db);
  r.noise_sigma_ref =
      config.get_double("readout.noise_sigma_ref", r.noise_sigma_ref);
  r.offset_sigma = config.get_double("readout.offset_sigma", r.offset_sigma);
  r.validate();
  return r;
}

Environment environment_from_config(const Config& config) {
  Environment env = Environment::reference();
  env.vdd = config.get_double("env.vdd", env.vdd);
  env.v2 = config.get_double("env.v2", env.vdd);  // v2 tracks vdd by default
  env.temperature = config.get_double("env.temperature", env.temperature);
  env.validate();
  return env;
}

void write_model(Config& config, const ModelConstants& model) {
  config.set_double("model.k_dt", model.k_dt);
  config.set_double("model.b_dt", model.b_dt);
  config.set_double("model.t_ox_nominal", model.t_ox_nominal);
  config.set_double("model.sigma_tox", model.sigma_tox);
  config.set_double("model.sigma_k", model.sigma_k);
  config.set_double("model.alpha_t", model.alpha_t);
  config.set_double("model.f_gs", model.f_gs);
  config.set_double("model.f_gd", model.f_gd);
  config.set_double("model.f_gcs", model.f_gcs);
  config.set_double("model.f_gcd", model.f_gcd);
  config.set_double("model.f_gb", model.f_gb);
}

void write_readout(Config& config, const ReadoutConfig& readout) {
  config.set_double("readout.v3", readout.v3);
  config.set_double("readout.r_pseudo_nominal", readout.r_pseudo_nominal);
  config.set_double("readout.r_supply_coeff", readout.r_supply_coeff);
  config.set_double("readout.gain_db", readout.gain_db);
  config.set_double("readout.noise_sigma_ref", readout.noise_sigma_ref);
  config.set_double("readout.offset_sigma", readout.offset_sigma);
}

void write_environment(Config& config, const Environment& env) {
  config.set_double("env.vdd", env.vdd);
  config.set_double("env.v2", env.v2);
  config.set_double("env.temperature", env.temperature);
}

void validate_known_keys(const Config& config) {
  const auto known = [](const std::string& key) {
    for (const char* k : kModelKeys) {
      if (key == k) return true;
    }
    for (const char* k : kReadoutKeys) {
      if (key == k) return true;
    }
    for (const char* k : kEnvKeys) {
      if (key == k) return true;
    }
    for (const char* k : kRunKeys) {
      if (key == k) return true;
    }
    return false;
  };
  for (const auto& [key, value] : config.entries()) {
    const bool sectioned = key.rfind("model.", 0) == 0 ||
                           key.rfind("readout.", 0) == 0 ||
                           key.rfind("env.", 0) == 0 ||
                           key.rfind("run.", 0) == 0;
    if (sectioned && !known(key)) {
      throw ParseError("config: unknown key `" + key + "`");
    }
  }
}

}  // namespace pufsim
