#include <doctest.h>

#include <cmath>

#include "pufsim/errors.hpp"
#include "pufsim/special_functions.hpp"

namespace sf = pufsim::sf;

namespace {

// Reference values computed with 40-digit arithmetic (mpmath).
struct ErfcPoint {
  double x, value;
};
constexpr ErfcPoint kErfcTable[] = {
    {0.0, 1.0},
    {0.05, 0.9436280222029834},
    {0.1, 0.887537083981715},
    {0.25, 0.7236736098317631},
    {0.5, 0.4795001221869535},
    {0.75, 0.28884436634648486},
    {1.0, 0.15729920705028513},
    {1.2345, 0.08083760358643417},
    {1.5, 0.033894853524689274},
    {2.0, 0.004677734981047266},
    {2.5, 0.0004069520174449589},
    {3.0, 2.209049699858544e-05},
    {3.5, 7.430983723414128e-07},
    {4.0, 1.541725790028002e-08},
    {5.0, 1.537459794428035e-12},
    {6.0, 2.1519736712498913e-17},
    {-0.5, 1.5204998778130465},
    {-1.0, 1.8427007929497148},
    {-2.0, 1.9953222650189528},
    {0.7071067811865476, 0.3173105078629141},
};

struct IgamcPoint {
  double a, x, value;
};
constexpr IgamcPoint kIgamcTable[] = {
    {0.5, 0.25, 0.4795001221869535},
    {0.5, 2.0, 0.04550026389635842},
    {1.0, 0.5, 0.6065306597126334},
    {1.0, 1.0, 0.36787944117144233},
    {1.0, 2.0, 0.1353352832366127},
    {1.5, 2.441229, 0.18060927704615287},
    {2.0, 0.8, 0.8087921354109988},
    {2.5, 1.0, 0.8491450360846097},
    {3.0, 7.2, 0.0254735077818123},
    {4.0, 1.909532, 0.8730679294437805},
    {5.0, 3.6, 0.7064384496412808},
    {8.0, 8.0, 0.45296080948699446},
    {16.0, 13.0, 0.7636069060453377},
    {16.0, 32.0, 0.0006599275525999415},
    {64.0, 50.0, 0.968156558249262},
    {64.0, 80.0, 0.029048874802733247},
    {0.25, 0.1, 0.39166115427103393},
    {2048.0, 2048.0, 0.49706150462322},
    {1.5, 34.67, 5.909835162658164e-15},
    {256.0, 220.0, 0.9904603394914335},
};

}  // namespace

TEST_CASE("erfc matches high-precision reference values") {
  for (const auto& [x, expected] : kErfcTable) {
    CHECK(std::abs(sf::erfc(x) - expected) <= 1e-10);
  }
}

TEST_CASE("erfc of zero is one") { CHECK(sf::erfc(0.0) == 1.0); }

TEST_CASE("erfc rejects non-finite input") {
  CHECK_THROWS_AS(sf::erfc(std::nan("")), pufsim::InvalidInput);
}

TEST_CASE("igamc matches high-precision reference values") {
  for (const auto& [a, x, expected] : kIgamcTable) {
    CHECK(std::abs(sf::igamc(a, x) - expected) <= 1e-10);
  }
}

TEST_CASE("sf::igamc(1, x) equals exp(-x)") {
  for (double x : {0.5, 1.0, 2.0}) {
    CHECK(sf::igamc(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-13));
  }
}

TEST_CASE("sf::igamc(0.5, x) equals sf::erfc(sqrt(x))") {
  for (double x : {0.04, 0.2, 1.0, 4.0, 9.0}) {
    CHECK(sf::igamc(0.5, x) ==
          doctest::Approx(sf::erfc(std::sqrt(x))).epsilon(1e-12));
  }
}

TEST_CASE("igamc boundary and monotonicity") {
  for (double a : {0.25, 1.0, 3.0, 16.0}) {
    CHECK(sf::igamc(a, 0.0) == 1.0);
    double prev = 1.0;
    for (int i = 1; i <= 60; ++i) {
      const double q = sf::igamc(a, 0.25 * i);
      CHECK(q <= prev);
      CHECK(q >= 0.0);
      prev = q;
    }
  }
}

TEST_CASE("igamc rejects bad domains") {
  CHECK_THROWS_AS(sf::igamc(0.0, 1.0), pufsim::InvalidInput);
  CHECK_THROWS_AS(sf::igamc(-1.0, 1.0), pufsim::InvalidInput);
  CHECK_THROWS_AS(sf::igamc(1.0, -0.5), pufsim::InvalidInput);
}

TEST_CASE("normal_cdf agrees with the erfc identity") {
  CHECK(sf::normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(sf::normal_cdf(-1.0) - 0.15865525393145707) <= 1e-12);
  CHECK(std::abs(sf::normal_cdf(1.959963984540054) - 0.975) <= 1e-12);
}
