#include <doctest.h>

#include <random>

#include "quotdt/half_laurent.hpp"
#include "quotdt/macmahon.hpp"
#include "quotdt/trunc_series.hpp"

using namespace quotdt;

namespace {

TruncSeries<BigInt> series(std::vector<long long> cs) {
  TruncSeries<BigInt> s(static_cast<int>(cs.size()) - 1);
  for (size_t i = 0; i < cs.size(); ++i) s.at(static_cast<int>(i)) = cs[i];
  return s;
}

TruncSeries<BigInt> random_unit_series(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> coeff(-5, 5), sign(0, 1);
  TruncSeries<BigInt> s(order);
  s.at(0) = sign(rng) ? 1 : -1;
  for (int n = 1; n <= order; ++n) s.at(n) = coeff(rng);
  return s;
}

HalfLaurent random_half_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-6, 6), coeff(-4, 4), nterms(0, 4);
  HalfLaurent h;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) h += HalfLaurent::monomial(exp(rng), coeff(rng));
  return h;
}

}  // namespace

TEST_CASE("series add and mul") {
  auto one_plus = series({1, 1, 0});
  auto one_minus = series({1, -1, 0});
  CHECK(one_plus * one_minus == series({1, 0, -1}));
  CHECK(series({1, 1, 1}) + one_minus == series({2, 0, 1}));
  CHECK_THROWS_AS(series({1, 1}) * series({1, 1, 1}), std::invalid_argument);
}

TEST_CASE("series inverse") {
  CHECK(series({1, -1, 0, 0}).inverse() == series({1, 1, 1, 1}));
  CHECK(series({1, 1, 0, 0}).inverse() == series({1, -1, 1, -1}));
  CHECK_THROWS_AS(series({2, 1}).inverse(), std::invalid_argument);

  auto m = macmahon::macmahon_series(10);
  CHECK(m * m.inverse() == TruncSeries<BigInt>::one(10));
}

TEST_CASE("series pow") {
  CHECK(series({1, 1, 0}).pow(2) == series({1, 2, 1}));
  CHECK(series({1, -1, 0, 0}).pow(-2) == series({1, 2, 3, 4}));
  CHECK(series({1, 5, 7}).pow(0) == TruncSeries<BigInt>::one(2));
  CHECK_THROWS_AS(series({0, 1}).pow(-1), std::invalid_argument);

  // [q^2] M(q)^3 = 12 = #(triples of plane partitions with total size 2)
  CHECK(macmahon::macmahon_series(4).pow(3)[2] == 12);
}

TEST_CASE("pow laws") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_unit_series(rng, 12);
    std::uniform_int_distribution<int> kd(-5, 5);
    int j = kd(rng), k = kd(rng);
    CHECK(a.pow(k) * a.pow(-k) == TruncSeries<BigInt>::one(12));
    CHECK(a.pow(j) * a.pow(k) == a.pow(j + k));
  }
}

TEST_CASE("exp and log") {
  TruncSeries<Rat> q(3);
  q.at(1) = 1;
  auto e = exp_series(q);
  CHECK(e[0] == Rat(1));
  CHECK(e[1] == Rat(1));
  CHECK(e[2] == Rat(1, 2));
  CHECK(e[3] == Rat(1, 6));

  auto l = log_series(TruncSeries<Rat>::one(3) + q);
  CHECK(l[1] == Rat(1));
  CHECK(l[2] == Rat(-1, 2));
  CHECK(l[3] == Rat(1, 3));

  CHECK_THROWS_AS(exp_series(TruncSeries<Rat>::one(2)), std::invalid_argument);
  CHECK_THROWS_AS(log_series(TruncSeries<Rat>(2)), std::invalid_argument);

  auto m = to_rational(macmahon::macmahon_series(8));
  CHECK(exp_series(log_series(m)) == m);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    TruncSeries<Rat> a(10);
    for (int n = 1; n <= 10; ++n) a.at(n) = Rat(num(rng), den(rng));
    CHECK(log_series(exp_series(a)) == a);
  }
}

TEST_CASE("substitute_sign") {
  auto m = macmahon::macmahon_series(4);
  CHECK(m.substitute_sign(-1)[3] == -6);
  CHECK(m.substitute_sign(1) == m);
  CHECK(m.substitute_sign(-1).substitute_sign(-1) == m);

  // ring automorphism on random pairs
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_unit_series(rng, 8);
    auto b = random_unit_series(rng, 8);
    CHECK((a * b).substitute_sign(-1) == a.substitute_sign(-1) * b.substitute_sign(-1));
    CHECK((a + b).substitute_sign(-1) == a.substitute_sign(-1) + b.substitute_sign(-1));
  }
}

TEST_CASE("retruncate and order mismatch policy") {
  auto a = series({1, 2, 3, 4});
  CHECK(a.retruncate(1) == series({1, 2}));
  CHECK_THROWS_AS(a.retruncate(9), std::invalid_argument);
  CHECK_THROWS_AS(a + series({1, 2}), std::invalid_argument);
  CHECK(a.retruncate(1) + series({1, 2}) == series({2, 4}));
}

TEST_CASE("half laurent basics") {
  auto l32 = HalfLaurent::monomial(3, 1);  // L^{3/2}
  CHECK(l32.euler_specialize() == -1);
  CHECK(HalfLaurent::monomial(4, 1).euler_specialize() == 1);
  CHECK((l32 + HalfLaurent::monomial(1, 1)).euler_specialize() == -2);

  // geometric expansion of (1 - L^{3/2} t)^{-1} at N=2
  TruncSeries<HalfLaurent> f = TruncSeries<HalfLaurent>::one(2);
  f.at(1) = -l32;
  auto inv = f.inverse();
  CHECK(inv[1] == l32);
  CHECK(inv[2] == HalfLaurent::monomial(6, 1));
}

TEST_CASE("euler specialization is a ring homomorphism") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = random_half_laurent(rng);
    auto y = random_half_laurent(rng);
    CHECK((x * y).euler_specialize() == x.euler_specialize() * y.euler_specialize());
    CHECK((x + y).euler_specialize() == x.euler_specialize() + y.euler_specialize());
  }
}

TEST_CASE("half laurent unit inverse") {
  auto u = HalfLaurent::monomial(-3, -1);
  auto inv = unit_inverse(u);
  REQUIRE(inv.has_value());
  CHECK(u * *inv == HalfLaurent(1));
  CHECK_FALSE(unit_inverse(HalfLaurent::monomial(2, 3)).has_value());
  CHECK_FALSE(unit_inverse(HalfLaurent(1) + HalfLaurent::monomial(2, 1)).has_value());
}
