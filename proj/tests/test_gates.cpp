#include "doctest.h"

#include "spe/circuits.hpp"
#include "spe/gates.hpp"
#include "spe/weyl.hpp"

using namespace spe;

TEST_CASE("angle parsing") {
  CHECK(parse_angle("0.5pi") == doctest::Approx(kPi / 2));
  CHECK(parse_angle("pi/2") == doctest::Approx(kPi / 2));
  CHECK(parse_angle("3pi/4") == doctest::Approx(3 * kPi / 4));
  CHECK(parse_angle("-pi") == doctest::Approx(-kPi));
  CHECK(parse_angle("1.25") == doctest::Approx(1.25));
  CHECK(parse_angle("pi") == doctest::Approx(kPi));
  CHECK_THROWS_AS(parse_angle("abc"), InvalidArgument);
  CHECK_THROWS_AS(parse_angle(""), InvalidArgument);
  CHECK_THROWS_AS(parse_angle("pi/0"), InvalidArgument);
}

TEST_CASE("named gate registry") {
  auto names = named_gate_list();
  for (const char* n : {"identity", "cnot", "ecr", "swap", "iswap", "dcnot", "b"}) {
    bool found = std::find(names.begin(), names.end(), n) != names.end();
    CHECK_MESSAGE(found, n);
  }
  auto c = cartan_coordinates(named_gate("dcnot"));
  CHECK(c.c1 == doctest::Approx(kPi / 2));
  CHECK(c.c2 == doctest::Approx(kPi / 2));
  CHECK(std::abs(c.c3) < 1e-9);
  auto i = cartan_coordinates(named_gate("iswap"));
  CHECK(i.c2 == doctest::Approx(kPi / 2));
  CHECK(approx_equal(named_gate("spe:pi/3").matrix(), spe_matrix(kPi / 3).matrix(), 1e-15));
  CHECK(approx_equal(named_gate("B").matrix(), spe_matrix(kPi / 2).matrix(), 1e-15));
  CHECK_THROWS_AS(named_gate("toffoli"), InvalidArgument);
}
