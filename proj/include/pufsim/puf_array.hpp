#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pufsim/leakage.hpp"

namespace pufsim {

struct CellAddress {
  int row;  // 0..63
  int col;  // 0..63
};

/// Two independently sampled leakage devices; their current difference is
/// the cell's entropy.
struct PufCell {
  DeviceInstance device_a;
  DeviceInstance device_b;
};

/// Splits a 12-bit address code into row (high 6 bits) and column (low
/// 6 bits). Throws AddressError outside [0, 4095].
CellAddress decode_address(int code);

/// 64x64 grid of two-device cells, reconstructible bit-exactly from
/// (array_seed, model, device_area).
class PufArray {
 public:
  static constexpr int kDim = 64;
  static constexpr int kCellCount = kDim * kDim;

  PufArray(std::uint64_t array_seed, const ModelConstants& model,
           double device_area = 1.0);

  const PufCell& cell(const CellAddress& addr) const;

  std::uint64_t seed() const { return array_seed_; }
  const ModelConstants& model() const { return model_; }
  double device_area() const { return device_area_; }

 private:
  std::uint64_t array_seed_;
  ModelConstants model_;
  double device_area_;
  std::vector<PufCell> cells_;
};

/// Builds the array. Per-device seeds come from the avalanche hash of
/// (array_seed, row, col, branch); the (row, col, branch) triple is packed
/// into one 13-bit index, so distinct triples can never collide.
PufArray build_array(std::uint64_t array_seed, const ModelConstants& model,
                     double device_area = 1.0);

/// Leakage pair (i_o1, i_o2) of the selected cell in pA. Selection is
/// ideal: unselected cells contribute nothing.
std::pair<double, double> select_cell(const PufArray& array,
                                      const CellAddress& addr,
                                      const Environment& env);

/// Ordered sequence of 12-bit address codes.
struct Challenge {
  std::vector<std::uint16_t> codes;

  /// Codes 0..n-1 ascending; the whole-array ordering used for speckle
  /// images and inter-array comparisons. Requires 1 <= n <= 4096.
  static Challenge canonical(std::size_t n);

  void validate() const;
};

/// Ordered response bits, one per challenge code.
struct Response {
  std::vector<std::uint8_t> bits;

  std::string to_string() const;
};

}  // namespace pufsim
