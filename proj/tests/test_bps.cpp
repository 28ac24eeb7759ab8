#include <doctest.h>

#include <random>

#include "quotdt/bps.hpp"

using namespace quotdt;
using namespace quotdt::bps;

TEST_CASE("basis elements") {
  auto b1 = bps_basis_element(1, 1, 0, 3);
  CHECK(b1.coeff(0) == Rat(1));  // q^0 (1+q)^0 = 1
  CHECK(b1.coeff(1) == Rat(0));
  CHECK(b1.coeff(2) == Rat(0));

  auto b0 = bps_basis_element(0, 0, 1, 4);
  CHECK(b0.coeff(1) == Rat(1));
  CHECK(b0.coeff(2) == Rat(-2));
  CHECK(b0.coeff(3) == Rat(3));
  CHECK(b0.coeff(4) == Rat(-4));

  auto b2 = bps_basis_element(2, 2, -1, 2);
  CHECK(b2.coeff(-1) == Rat(1));
  CHECK(b2.coeff(0) == Rat(2));
  CHECK(b2.coeff(1) == Rat(1));
  CHECK(b2.coeff(2) == Rat(0));
}

TEST_CASE("bps_to_pt") {
  BpsVector g0{0, {Rat(1)}};
  auto z = bps_to_pt(g0, 1, 5);
  CHECK(z.coeff(1) == Rat(1));
  CHECK(z.coeff(2) == Rat(-2));
  CHECK(z.coeff(5) == Rat(5));

  BpsVector g1{1, {Rat(0), Rat(5)}};
  auto z1 = bps_to_pt(g1, 0, 3);
  CHECK(z1.coeff(0) == Rat(5));  // 5 * q^0
  CHECK(z1.coeff(1) == Rat(0));
  CHECK(z1.coeff(2) == Rat(0));

  BpsVector zv{2, {Rat(0), Rat(0), Rat(0)}};
  CHECK(bps_to_pt(zv, -1, 4).is_zero_series());
}

TEST_CASE("extraction roundtrip") {
  LaurentSeries<Rat> z(1, 4);
  z.at(1) = Rat(1);
  z.at(2) = Rat(-2);
  z.at(3) = Rat(3);
  z.at(4) = Rat(-4);
  auto ex = extract_bps(z, 0);
  CHECK(ex.bps.values == std::vector<Rat>{Rat(1)});
  CHECK(ex.residual_zero);
  CHECK(ex.integral);

  BpsVector v{2, {Rat(2), Rat(-1), Rat(3)}};
  auto z2 = bps_to_pt(v, -1, 6);
  auto ex2 = extract_bps(z2, 2);
  CHECK(ex2.bps.values == v.values);
  CHECK(ex2.residual_zero);
}

TEST_CASE("roundtrip for random rational vectors") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> num(-10, 10), den(1, 5);
  for (int g = 0; g <= 6; ++g)
    for (int trial = 0; trial < 20; ++trial) {
      BpsVector v;
      v.genus = g;
      bool integral_input = true;
      for (int i = 0; i <= g; ++i) {
        Rat x(num(rng), den(rng));
        integral_input = integral_input && is_integral(x);
        v.values.push_back(x);
      }
      auto z = bps_to_pt(v, 1 - g, 1 - g + 2 * g + 4);
      auto ex = extract_bps(z, g);
      CHECK(ex.bps.values == v.values);
      CHECK(ex.residual_zero);
      CHECK(ex.integral == integral_input);
    }
}

TEST_CASE("triangularity: n_g reads only the lowest coefficient") {
  for (int g = 1; g <= 4; ++g) {
    LaurentSeries<Rat> z(1 - g, 3);
    z.at(1 - g) = Rat(7);
    auto ex = extract_bps(z, g);
    CHECK(ex.bps.values[g] == Rat(7));
  }
}

TEST_CASE("rationality failure detected") {
  LaurentSeries<Rat> z(1, 50);
  z.at(1) = Rat(1);
  z.at(50) = Rat(1);
  auto ex = extract_bps(z, 0);
  CHECK(ex.bps.values == std::vector<Rat>{Rat(1)});
  CHECK_FALSE(ex.residual_zero);
  CHECK_FALSE(ex.residual.coeff(50).is_zero());
}

TEST_CASE("window and offset validation") {
  LaurentSeries<Rat> short_window(-1, 0);
  short_window.at(-1) = Rat(1);
  CHECK_THROWS_AS(extract_bps(short_window, 2), std::invalid_argument);

  LaurentSeries<Rat> too_low(-3, 2);
  too_low.at(-3) = Rat(1);
  CHECK_THROWS_AS(extract_bps(too_low, 2), std::invalid_argument);

  CHECK_THROWS_AS(bps_basis_element(3, 2, -5, 5), std::invalid_argument);
  CHECK_THROWS_AS(bps_basis_element(0, 0, 2, 5), std::invalid_argument);
}
