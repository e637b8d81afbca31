#include <doctest.h>

#include <cmath>
#include <vector>

#include "pufsim/errors.hpp"
#include "pufsim/metrics.hpp"
#include "pufsim/rng.hpp"

using namespace pufsim;

namespace {

std::vector<std::uint8_t> bits_of(const char* s) {
  std::vector<std::uint8_t> out;
  for (const char* p = s; *p; ++p) out.push_back(*p == '1' ? 1 : 0);
  return out;
}

std::vector<std::uint8_t> random_bits(std::size_t n, std::uint64_t seed) {
  rng::Prng prng(seed);
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) b = prng.next_u64() & 1;
  return out;
}

}  // namespace

TEST_CASE("uniformity counts ones") {
  CHECK(uniformity(bits_of("0101")) == 0.5);
  CHECK(uniformity(bits_of("0000")) == 0.0);
  CHECK(uniformity(bits_of("111")) == 1.0);
  CHECK_THROWS_AS(uniformity({}), InvalidInput);
}

TEST_CASE("shannon_entropy endpoints and the published operating point") {
  CHECK(shannon_entropy(0.5) == 1.0);
  CHECK(shannon_entropy(0.0) == 0.0);
  CHECK(shannon_entropy(1.0) == 0.0);
  // Exact value at p = 0.4998 (mpmath): 0.9999998845843937.
  CHECK(std::abs(shannon_entropy(0.4998) - 0.9999998845843937) <= 1e-12);
  CHECK(std::abs(shannon_entropy(0.4998) - 0.9999998) <= 1e-7);
  CHECK_THROWS_AS(shannon_entropy(-0.001), InvalidInput);
  CHECK_THROWS_AS(shannon_entropy(1.001), InvalidInput);
}

TEST_CASE("shannon_entropy is symmetric about one half") {
  for (int i = 0; i <= 50; ++i) {
    const double p = i / 50.0;
    CHECK(std::abs(shannon_entropy(p) - shannon_entropy(1.0 - p)) <= 1e-15);
  }
}

TEST_CASE("fhd basics") {
  CHECK(fhd(bits_of("0011"), bits_of("0011")) == 0.0);
  CHECK(fhd(bits_of("0011"), bits_of("1100")) == 1.0);
  CHECK(fhd(bits_of("0011"), bits_of("0010")) == 0.25);
  CHECK_THROWS_AS(fhd(bits_of("01"), bits_of("011")), InvalidInput);
  CHECK_THROWS_AS(fhd({}, {}), InvalidInput);
}

TEST_CASE("fhd satisfies the metric axioms on random triples") {
  for (int i = 0; i < 200; ++i) {
    const auto a = random_bits(64, 3 * i);
    const auto b = random_bits(64, 3 * i + 1);
    const auto c = random_bits(64, 3 * i + 2);
    CHECK(fhd(a, b) == fhd(b, a));
    CHECK(fhd(a, a) == 0.0);
    CHECK(fhd(a, c) <= fhd(a, b) + fhd(b, c) + 1e-15);
  }
}

TEST_CASE("inter_fhd_stats counts unordered pairs") {
  std::vector<Response> responses;
  for (int i = 0; i < 20; ++i) {
    responses.push_back(Response{random_bits(4096, 1000 + i)});
  }
  const FhdStats stats = inter_fhd_stats(responses);
  CHECK(stats.pair_count == 190);
  CHECK(std::abs(stats.mean - 0.5) <= 0.01);
  CHECK(std::abs(stats.stddev - std::sqrt(0.25 / 4096.0)) <= 0.003);
}

TEST_CASE("inter_fhd_stats of identical responses degenerates to zero") {
  const auto bits = random_bits(128, 5);
  const FhdStats stats = inter_fhd_stats({Response{bits}, Response{bits}});
  CHECK(stats.pair_count == 1);
  CHECK(stats.mean == 0.0);
  CHECK(stats.stddev == 0.0);
}

TEST_CASE("inter_fhd_stats validates its input") {
  CHECK_THROWS_AS(inter_fhd_stats({Response{bits_of("01")}}), InvalidInput);
  CHECK_THROWS_AS(
      inter_fhd_stats({Response{bits_of("01")}, Response{bits_of("011")}}),
      InvalidInput);
}

TEST_CASE("ber basics") {
  const Response ref{bits_of("0101")};
  CHECK(ber(ref, {ref, ref, ref}) == 0.0);
  CHECK(ber(ref, {Response{bits_of("1010")}}) == 1.0);
  CHECK(ber(ref, {ref, Response{bits_of("0100")}}) == doctest::Approx(0.125));
  CHECK_THROWS_AS(ber(ref, {}), InvalidInput);
  CHECK_THROWS_AS(ber(ref, {Response{bits_of("01")}}), InvalidInput);
  CHECK_THROWS_AS(ber(Response{}, {Response{}}), InvalidInput);
}

TEST_CASE("calibrated noise keeps the reference-point BER tiny") {
  const ModelConstants model = ModelConstants::defaults();
  const ReadoutConfig readout = ReadoutConfig::defaults();
  const Environment env = Environment::reference();
  const PufArray array = build_array(1234, model);
  const Challenge challenge = Challenge::canonical(4096);
  const Response golden = golden_response(array, challenge, env, readout);
  const auto trials = repeat_evaluate(array, challenge, env, readout, 100, 77);
  CHECK(ber(golden, trials) <= 1e-3);
}

TEST_CASE("noise-free BER at the reference environment is exactly zero") {
  const ModelConstants model = ModelConstants::defaults();
  ReadoutConfig quiet = ReadoutConfig::defaults();
  quiet.noise_sigma_ref = 0.0;
  const Environment env = Environment::reference();
  const PufArray array = build_array(4321, model);
  const Challenge challenge = Challenge::canonical(4096);
  const Response golden = golden_response(array, challenge, env, quiet);
  const auto trials = repeat_evaluate(array, challenge, env, quiet, 3, 9);
  CHECK(ber(golden, trials) == 0.0);
}

TEST_CASE("BER is non-decreasing in the noise level") {
  const ModelConstants model = ModelConstants::defaults();
  const Environment env = Environment::reference();
  const PufArray array = build_array(77, model);
  const Challenge challenge = Challenge::canonical(1024);
  double prev = -1.0;
  for (double sigma : {0.0, 60.0, 120.0, 240.0, 480.0}) {
    ReadoutConfig readout = ReadoutConfig::defaults();
    readout.noise_sigma_ref = sigma;
    const Response golden = golden_response(array, challenge, env, readout);
    const auto trials =
        repeat_evaluate(array, challenge, env, readout, 40, 1717);
    const double b = ber(golden, trials);
    CHECK(b >= prev);
    prev = b;
  }
}

TEST_CASE("ber_sweep covers the grid in row-major order") {
  const ModelConstants model = ModelConstants::defaults();
  ReadoutConfig quiet = ReadoutConfig::defaults();
  quiet.noise_sigma_ref = 0.0;
  const PufArray array = build_array(55, model);
  const Challenge challenge = Challenge::canonical(256);
  const std::vector<double> vdds = {1.1, 1.2};
  const std::vector<double> temps = {20.0, 35.0, 50.0};
  const auto points = ber_sweep(array, challenge, quiet, vdds, temps, 2, 4);
  REQUIRE(points.size() == 6);
  CHECK(points[0].vdd == 1.1);
  CHECK(points[0].temperature == 20.0);
  CHECK(points[5].vdd == 1.2);
  CHECK(points[5].temperature == 50.0);
  // Noise disabled: the reference grid point reads back exactly clean.
  CHECK(points[4].vdd == 1.2);
  CHECK(points[4].temperature == 35.0);
  CHECK(points[4].ber == 0.0);
}

TEST_CASE("ber_sweep shows the low-voltage worst case") {
  const ModelConstants model = ModelConstants::defaults();
  const ReadoutConfig readout = ReadoutConfig::defaults();
  const PufArray array = build_array(66, model);
  const Challenge challenge = Challenge::canonical(4096);
  const std::vector<double> vdds = {0.9, 1.2};
  const std::vector<double> temps = {35.0};
  const auto points = ber_sweep(array, challenge, readout, vdds, temps, 10, 21);
  REQUIRE(points.size() == 2);
  CHECK(points[0].ber > points[1].ber);
  CHECK(points[0].ber > 0.01);
}

TEST_CASE("ber_sweep validates its grids") {
  const ModelConstants model = ModelConstants::defaults();
  const PufArray array = build_array(5, model);
  const Challenge challenge = Challenge::canonical(16);
  CHECK_THROWS_AS(ber_sweep(array, challenge, ReadoutConfig::defaults(), {},
                            std::vector<double>{35.0}, 1, 0),
                  InvalidInput);
  CHECK_THROWS_AS(ber_sweep(array, challenge, ReadoutConfig::defaults(),
                            std::vector<double>{1.2}, {}, 1, 0),
                  InvalidInput);
}
