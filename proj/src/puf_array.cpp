#include "pufsim/puf_array.hpp"

#include "pufsim/errors.hpp"
#include "pufsim/rng.hpp"

namespace pufsim {

namespace {

// 13-bit pack: row(6) | col(6) | branch(1).
constexpr std::uint64_t device_index(int row, int col, int branch) {
  return (static_cast<std::uint64_t>(row) << 7) |
         (static_cast<std::uint64_t>(col) << 1) |
         static_cast<std::uint64_t>(branch);
}

}  // namespace

CellAddress decode_address(int code) {
  if (code < 0 || code > 4095) {
    throw AddressError("decode_address: code " + std::to_string(code) +
                       " outside [0, 4095]");
  }
  return CellAddress{code >> 6, code & 0x3f};
}

PufArray::PufArray(std::uint64_t array_seed, const ModelConstants& model,
                   double device_area)
    : array_seed_(array_seed), model_(model), device_area_(device_area) {
  model_.validate();
  cells_.reserve(kCellCount);
  for (int row = 0; row < kDim; ++row) {
    for (int col = 0; col < kDim; ++col) {
      PufCell cell{};
      cell.device_a = sample_device(
          model_, device_area_,
          rng::derive(array_seed_, rng::label::kDevice, device_index(row, col, 0)));
      cell.device_b = sample_device(
          model_, device_area_,
          rng::derive(array_seed_, rng::label::kDevice, device_index(row, col, 1)));
      cells_.push_back(cell);
    }
  }
}

const PufCell& PufArray::cell(const CellAddress& addr) const {
  if (addr.row < 0 || addr.row >= kDim || addr.col < 0 || addr.col >= kDim) {
    throw AddressError("PufArray::cell: address (" + std::to_string(addr.row) +
                       ", " + std::to_string(addr.col) + ") outside the grid");
  }
  return cells_[static_cast<std::size_t>(addr.row) * kDim + addr.col];
}

PufArray build_array(std::uint64_t array_seed, const ModelConstants& model,
                     double device_area) {
  return PufArray(array_seed, model, device_area);
}

std::pair<double, double> select_cell(const PufArray& array,
                                      const CellAddress& addr,
                                      const Environment& env) {
  const PufCell& cell = array.cell(addr);
  return {gate_leakage(cell.device_a, array.model(), env).total,
          gate_leakage(cell.device_b, array.model(), env).total};
}

Challenge Challenge::canonical(std::size_t n) {
  if (n < 1 || n > 4096) {
    throw InvalidInput("Challenge::canonical: n must lie in [1, 4096]");
  }
  Challenge c;
  c.codes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.codes[i] = static_cast<std::uint16_t>(i);
  }
  return c;
}

void Challenge::validate() const {
  if (codes.empty()) throw InvalidInput("Challenge: needs at least one code");
  for (std::uint16_t code : codes) {
    if (code > 4095) {
      throw AddressError("Challenge: code " + std::to_string(code) +
                         " outside [0, 4095]");
    }
  }
}

std::string Response::to_string() const {
  std::string s;
  s.reserve(bits.size());
  for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace pufsim
