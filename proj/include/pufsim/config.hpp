#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "pufsim/leakage.hpp"
#include "pufsim/readout.hpp"

namespace pufsim {

/// Line-based `key = value` configuration with `#` comment lines and
/// dotted keys for nesting. Keys are kept sorted, so serialization is
/// byte-deterministic.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(std::string_view text,
                             const std::string& origin = "<string>");

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  double get_double(const std::string& key, double fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;

  void set(const std::string& key, const std::string& value);
  void set_double(const std::string& key, double value);
  void set_u64(const std::string& key, std::uint64_t value);

  std::string serialize() const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

/// Shortest exact decimal representation of a double ('.' separator,
/// round-trips bit-exactly).
std::string format_double(double value);

// model.* / readout.* / env.* sections; absent keys keep the defaults.
ModelConstants model_from_config(const Config& config);
ReadoutConfig readout_from_config(const Config& config);
Environment environment_from_config(const Config& config);

void write_model(Config& config, const ModelConstants& model);
void write_readout(Config& config, const ReadoutConfig& readout);
void write_environment(Config& config, const Environment& env);

/// Rejects unrecognized keys under the sections above (typo guard).
/// Other prefixes pass through untouched.
void validate_known_keys(const Config& config);

}  // namespace pufsim
