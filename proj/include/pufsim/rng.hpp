#pragma once

#include <cstdint>

namespace pufsim::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// splitmix64 finalizer; bijective on 64-bit words with full avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

/// Derives an independent child seed from (base, label, index).
///
/// For a fixed base and label this is injective in the index: mix64 is a
/// bijection and distinct indices stay distinct under the wrapping add.
constexpr std::uint64_t derive(std::uint64_t base, std::uint64_t label,
                               std::uint64_t index) {
  return mix64(mix64(base ^ label) + index);
}

// Stream labels. Arbitrary distinct constants; changing any of them changes
// every derived sample, so they are frozen.
namespace label {
inline constexpr std::uint64_t kDevice = 0x5045c1f339f9da57ULL;
inline constexpr std::uint64_t kDeviceTox = 0x282f2fd39cf41b93ULL;
inline constexpr std::uint64_t kDeviceK = 0x6c62272e07bb0142ULL;
inline constexpr std::uint64_t kBitNoise = 0x9ae16a3b2f90404fULL;
inline constexpr std::uint64_t kArray = 0xc2b2ae3d27d4eb4fULL;
inline constexpr std::uint64_t kOffset = 0x165667b19e3779f9ULL;
inline constexpr std::uint64_t kCalibration = 0x27d4eb2f165667c5ULL;
}  // namespace label

/// Inverse standard-normal CDF (Wichura's AS241, double precision).
double normal_quantile(double p);

/// splitmix64 sequence; cheap, seedable, identical output on every platform.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform draw strictly inside (0, 1).
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double next_gaussian() { return normal_quantile(next_unit()); }

 private:
  std::uint64_t state_;
};

/// One standard-normal draw fully determined by the seed.
inline double gaussian_from_seed(std::uint64_t seed) {
  return normal_quantile(
      (static_cast<double>(mix64(seed) >> 11) + 0.5) * 0x1.0p-53);
}

}  // namespace pufsim::rng
