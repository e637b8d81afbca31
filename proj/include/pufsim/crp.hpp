#pragma once

#include <cstdint>
#include <vector>

#include "pufsim/puf_array.hpp"
#include "pufsim/readout.hpp"

namespace pufsim {

/// Noise-free response (noise sigma forced to zero, static offset kept):
/// the deterministic enrollment reference for a (array, challenge, env).
Response golden_response(const PufArray& array, const Challenge& challenge,
                         const Environment& env, const ReadoutConfig& config);

/// One noisy evaluation. Per-bit noise seeds are derived from
/// (trial_seed, bit index) by the avalanche hash, so bits may be evaluated
/// in any order. With noise_sigma_ref = 0 this equals golden_response.
Response evaluate_challenge(const PufArray& array, const Challenge& challenge,
                            const Environment& env, const ReadoutConfig& config,
                            std::uint64_t trial_seed);

/// `trials` independent noisy evaluations; trial j runs with seed
/// base_seed + j, so a single trial with base_seed equals
/// evaluate_challenge(..., base_seed). Throws InvalidInput for trials = 0.
std::vector<Response> repeat_evaluate(const PufArray& array,
                                      const Challenge& challenge,
                                      const Environment& env,
                                      const ReadoutConfig& config,
                                      std::size_t trials,
                                      std::uint64_t base_seed);

}  // namespace pufsim
