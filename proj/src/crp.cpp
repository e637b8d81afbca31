#include "pufsim/crp.hpp"

#include "pufsim/errors.hpp"
#include "pufsim/rng.hpp"

namespace pufsim {

Response evaluate_challenge(const PufArray& array, const Challenge& challenge,
                            const Environment& env, const ReadoutConfig& config,
                            std::uint64_t trial_seed) {
  challenge.validate();
  config.validate();
  const double offset = draw_array_offset(config, array.seed());
  Response response;
  response.bits.reserve(challenge.codes.size());
  for (std::size_t k = 0; k < challenge.codes.size(); ++k) {
    const CellAddress addr = decode_address(challenge.codes[k]);
    const auto [i_o1, i_o2] = select_cell(array, addr, env);
    const std::uint64_t bit_seed =
        rng::derive(trial_seed, rng::label::kBitNoise, k);
    response.bits.push_back(static_cast<std::uint8_t>(
        read_bit(i_o1, i_o2, config, env, offset, bit_seed)));
  }
  return response;
}

Response golden_response(const PufArray& array, const Challenge& challenge,
                         const Environment& env, const ReadoutConfig& config) {
  ReadoutConfig quiet = config;
  quiet.noise_sigma_ref = 0.0;
  return evaluate_challenge(array, challenge, env, quiet, 0);
}

std::vector<Response> repeat_evaluate(const PufArray& array,
                                      const Challenge& challenge,
                                      const Environment& env,
                                      const ReadoutConfig& config,
                                      std::size_t trials,
                                      std::uint64_t base_seed) {
  if (trials == 0) throw InvalidInput("repeat_evaluate: trials must be >= 1");
  std::vector<Response> out;
  out.reserve(trials);
  for (std::size_t j = 0; j < trials; ++j) {
    out.push_back(
        evaluate_challenge(array, challenge, env, config, base_seed + j));
  }
  return out;
}

}  // namespace pufsim
