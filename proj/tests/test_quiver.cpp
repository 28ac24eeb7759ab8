#include <doctest.h>

#include <random>

#include "quotdt/quiver.hpp"

using namespace quotdt;
using namespace quotdt::quiver;

namespace {

FramedRep<Rat> make_rep(int n, int r) {
  FramedRep<Rat> rep;
  rep.n = n;
  rep.r = r;
  rep.A = Matrix<Rat>(n, n);
  rep.B = Matrix<Rat>(n, n);
  rep.C = Matrix<Rat>(n, n);
  rep.framing.assign(r, std::vector<Rat>(n));
  return rep;
}

FramedRep<Fp> make_fp_rep(int n, int r, int p, std::mt19937_64& rng) {
  FramedRep<Fp> rep;
  rep.n = n;
  rep.r = r;
  rep.A = Matrix<Fp>(n, n);
  rep.B = Matrix<Fp>(n, n);
  rep.C = Matrix<Fp>(n, n);
  std::uniform_int_distribution<int> d(0, p - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rep.A(i, j) = Fp(d(rng), p);
      rep.B(i, j) = Fp(d(rng), p);
      rep.C(i, j) = Fp(d(rng), p);
    }
  for (int k = 0; k < r; ++k) {
    std::vector<Fp> v(n);
    for (int i = 0; i < n; ++i) v[i] = Fp(d(rng), p);
    rep.framing.push_back(std::move(v));
  }
  return rep;
}

const Theta kTheta10{Rat(1), Rat(0)};

}  // namespace

TEST_CASE("generation closure") {
  auto rep = make_rep(1, 1);
  rep.framing[0][0] = 1;
  CHECK(generation_closure(rep).first == 1);

  auto rep2 = make_rep(2, 1);
  rep2.framing[0][0] = 1;
  CHECK(generation_closure(rep2).first == 1);  // no operators reach e2

  // nilpotent Jordan block: A e1 = e2
  rep2.A(1, 0) = 1;
  CHECK(generation_closure(rep2).first == 2);
}

TEST_CASE("closure is monotone in the framing") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto rep = make_fp_rep(3, 1, 5, rng);
    int before = generation_closure(rep).first;
    auto extended = rep;
    extended.r = 2;
    std::uniform_int_distribution<int> d(0, 4);
    std::vector<Fp> extra(3);
    for (auto& x : extra) x = Fp(d(rng), 5);
    extended.framing.push_back(extra);
    CHECK(generation_closure(extended).first >= before);
  }
}

TEST_CASE("slope") {
  CHECK(slope(kTheta10, 1, 1) == Rat(1, 2));
  CHECK(slope(Theta{Rat(7), Rat(3)}, 0, 4) == Rat(3));  // d1=0 gives theta2
  CHECK(slope(Theta{Rat(2), Rat(1)}, 1, 3) == Rat(5, 4));
  CHECK_THROWS_AS(slope(kTheta10, 0, 0), std::invalid_argument);
}

TEST_CASE("stability criterion") {
  auto rep = make_rep(1, 1);
  rep.framing[0][0] = 1;
  CHECK(is_stable_via_generation(rep, kTheta10));

  auto rep2 = make_rep(2, 1);
  rep2.framing[0][0] = 1;
  CHECK_FALSE(is_stable_via_generation(rep2, kTheta10));

  CHECK_THROWS_AS(is_stable_via_generation(rep, Theta{Rat(0), Rat(1)}), std::invalid_argument);
}

TEST_CASE("brute force oracle on small examples") {
  std::mt19937_64 rng(1);
  auto rep = make_fp_rep(1, 1, 5, rng);
  rep.framing[0][0] = Fp(1, 5);
  CHECK(brute_force_stability(rep, kTheta10) == Verdict::stable);

  FramedRep<Fp> zero2;
  zero2.n = 2;
  zero2.r = 1;
  zero2.A = Matrix<Fp>(2, 2);
  zero2.B = Matrix<Fp>(2, 2);
  zero2.C = Matrix<Fp>(2, 2);
  zero2.framing.push_back({Fp(1, 5), Fp(0, 5)});
  CHECK(brute_force_stability(zero2, kTheta10) == Verdict::unstable);

  FramedRep<Fp> novec;
  novec.n = 1;
  novec.r = 1;
  novec.A = Matrix<Fp>(1, 1);
  novec.B = Matrix<Fp>(1, 1);
  novec.C = Matrix<Fp>(1, 1);
  novec.A(0, 0) = Fp(2, 5);
  novec.framing.push_back({Fp(0, 5)});
  CHECK(brute_force_stability(novec, kTheta10) == Verdict::unstable);

  auto big = make_fp_rep(4, 1, 5, rng);
  CHECK_THROWS_AS(brute_force_stability(big, kTheta10), std::invalid_argument);
}

TEST_CASE("criterion agrees with the oracle") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 1 + trial % 2;
    int r = 1 + (trial / 2) % 2;
    auto rep = make_fp_rep(n, r, 5, rng);
    bool stable = brute_force_stability(rep, kTheta10) == Verdict::stable;
    CHECK(stable == is_stable_via_generation(rep, kTheta10));
  }
}

TEST_CASE("subspace enumeration is duplicate-free") {
  auto subs = enumerate_subspaces(2, 5);
  CHECK(subs.size() == 8);  // 1 + 6 + 1
  auto subs3 = enumerate_subspaces(3, 3);
  CHECK(subs3.size() == 28);  // 1 + 13 + 13 + 1
}

TEST_CASE("potential value") {
  auto rep = make_rep(2, 1);
  rep.A(0, 0) = 1;
  rep.A(1, 1) = 2;
  rep.B(0, 0) = 3;
  rep.B(1, 1) = 4;
  rep.C(0, 0) = 5;
  rep.C(1, 1) = 6;
  CHECK(potential_value(rep) == Rat(0));  // diagonal triple commutes

  auto rep2 = make_rep(2, 1);
  rep2.A(0, 1) = 1;  // E_12
  rep2.B(1, 0) = 1;  // E_21
  rep2.C(0, 0) = 1;  // diag(1, 0)
  CHECK(potential_value(rep2) == Rat(1));

  CHECK(potential_value(make_rep(2, 1)) == Rat(0));
}

TEST_CASE("potential is conjugation invariant") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    auto rep = make_rep(3, 1);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        rep.A(i, j) = d(rng);
        rep.B(i, j) = d(rng);
        rep.C(i, j) = d(rng);
      }
    // random invertible g: identity plus a strict upper and lower shear
    Matrix<Rat> g = Matrix<Rat>::identity(3);
    g(0, 1) = d(rng);
    g(1, 2) = d(rng);
    g(2, 0) = 0;
    Matrix<Rat> ginv = Matrix<Rat>::identity(3);
    ginv(0, 1) = -g(0, 1);
    ginv(1, 2) = -g(1, 2);
    ginv(0, 2) = g(0, 1) * g(1, 2);
    REQUIRE(g * ginv == Matrix<Rat>::identity(3));
    auto conj = rep;
    conj.A = g * rep.A * ginv;
    conj.B = g * rep.B * ginv;
    conj.C = g * rep.C * ginv;
    CHECK(potential_value(conj) == potential_value(rep));
  }
}

TEST_CASE("gradient matches the exact entrywise derivative") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    auto rep = make_rep(3, 1);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        rep.A(i, j) = d(rng);
        rep.B(i, j) = d(rng);
        rep.C(i, j) = d(rng);
      }
    auto grad = potential_gradient(rep);
    // f is linear in each entry, so a unit bump gives the exact partial
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        auto bump = rep;
        bump.A(i, j) = bump.A(i, j) + 1;
        CHECK(grad.dA(i, j) == potential_value(bump) - potential_value(rep));
        bump = rep;
        bump.B(i, j) = bump.B(i, j) + 1;
        CHECK(grad.dB(i, j) == potential_value(bump) - potential_value(rep));
        bump = rep;
        bump.C(i, j) = bump.C(i, j) + 1;
        CHECK(grad.dC(i, j) == potential_value(bump) - potential_value(rep));
      }
  }
}

TEST_CASE("critical points") {
  auto diag = make_rep(3, 1);
  diag.A(0, 0) = 1;
  diag.B(1, 1) = 2;
  diag.C(2, 2) = 3;
  CHECK(is_critical_point(diag));

  auto rep = make_rep(2, 1);
  rep.A(0, 1) = 1;
  rep.B(1, 0) = 1;
  CHECK_FALSE(is_critical_point(rep));  // [A,B] = diag(1,-1)

  CHECK(is_critical_point(make_rep(1, 1)));  // scalars always commute
}

TEST_CASE("fixed point counts") {
  CHECK(fixed_point_count(1, 4) == 13);
  CHECK(fixed_point_count(3, 1) == 3);
  CHECK(fixed_point_count(2, 0) == 1);
  CHECK_THROWS_AS(fixed_point_count(1, 99), std::invalid_argument);
}
