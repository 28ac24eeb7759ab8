#include "quotdt/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

#include "quotdt/bps.hpp"
#include "quotdt/dtpt.hpp"
#include "quotdt/macmahon.hpp"
#include "quotdt/motivic.hpp"
#include "quotdt/quiver.hpp"

namespace quotdt::verify {

namespace {

using quiver::FramedRep;
using quiver::Theta;
using quiver::Verdict;

Theta theta10() { return Theta{Rat(1), Rat(0)}; }

FramedRep<Fp> random_fp_rep(std::mt19937_64& rng, int n, int r, int p) {
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

FramedRep<Rat> random_rat_rep(std::mt19937_64& rng, int n, int r, bool commuting) {
  FramedRep<Rat> rep;
  rep.n = n;
  rep.r = r;
  rep.A = Matrix<Rat>(n, n);
  rep.B = Matrix<Rat>(n, n);
  rep.C = Matrix<Rat>(n, n);
  std::uniform_int_distribution<int> d(-3, 3);
  if (commuting) {
    // diagonal triples commute
    for (int i = 0; i < n; ++i) {
      rep.A(i, i) = Rat(d(rng));
      rep.B(i, i) = Rat(d(rng));
      rep.C(i, i) = Rat(d(rng));
    }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        rep.A(i, j) = Rat(d(rng));
        rep.B(i, j) = Rat(d(rng));
        rep.C(i, j) = Rat(d(rng));
      }
  }
  for (int k = 0; k < r; ++k) {
    std::vector<Rat> v(n);
    for (int i = 0; i < n; ++i) v[i] = Rat(d(rng));
    rep.framing.push_back(std::move(v));
  }
  return rep;
}

// f(.. X_ij + 1 ..) - f(..): exact partial derivative, since the
// potential is linear in every single entry.
template <typename Pick>
Rat exact_partial(const FramedRep<Rat>& rep, Pick pick, int i, int j) {
  FramedRep<Rat> bumped = rep;
  pick(bumped)(i, j) = pick(bumped)(i, j) + Rat(1);
  return quiver::potential_value(bumped) - quiver::potential_value(rep);
}

double to_double(const Rat& x) {
  return static_cast<double>(boost::multiprecision::numerator(x)) /
         static_cast<double>(boost::multiprecision::denominator(x));
}

double potential_double(const std::vector<std::vector<double>>& a,
                        const std::vector<std::vector<double>>& b,
                        const std::vector<std::vector<double>>& c) {
  int n = static_cast<int>(a.size());
  double t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        t += a[i][j] * (b[j][k] * c[k][i] - c[j][k] * b[k][i]);
  return t;
}

// ---- individual checks ------------------------------------------------

CheckResult check_macmahon_oracle(unsigned) {
  auto m = macmahon::macmahon_series(10);
  for (int n = 0; n <= 10; ++n)
    if (m[n] != macmahon::plane_partition_count(n))
      return {"macmahon-oracle", false, "mismatch at n=" + std::to_string(n)};
  return {"macmahon-oracle", true, "product formula = enumeration for n <= 10"};
}

CheckResult check_virtual_chi(unsigned) {
  for (int r = 1; r <= 4; ++r) {
    auto spec = motivic::virtual_chi_series(r, 10);
    auto expected = macmahon::wall_crossing_factor(r, 1, 10);
    if (!(spec == expected))
      return {"virtual-chi", false, "mismatch at r=" + std::to_string(r)};
  }
  return {"virtual-chi", true, "euler-specialized Z_r = M((-1)^r t)^r for r <= 4, N=10"};
}

CheckResult check_signed_chi(unsigned) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 8; ++n) {
      auto [a, b] = motivic::signed_chi_check(r, n);
      if (a != b)
        return {"signed-chi", false,
                "mismatch at r=" + std::to_string(r) + ", n=" + std::to_string(n)};
    }
  return {"signed-chi", true, "(-1)^{rn} colored counts match specialization, r <= 3, n <= 8"};
}

CheckResult check_n_invariants(unsigned) {
  for (int r = 1; r <= 3; ++r)
    for (int chi : {-6, -1, 0, 1, 4}) {
      auto round = macmahon::n_invariant_factor(r, chi, 10);
      auto direct = to_rational(macmahon::wall_crossing_factor(r, chi, 10));
      if (!(round == direct))
        return {"n-invariants", false,
                "mismatch at r=" + std::to_string(r) + ", chi=" + std::to_string(chi)};
    }
  return {"n-invariants", true, "exp-log roundtrip reproduces wall factor, r <= 3"};
}

CheckResult check_dtpt_roundtrip(unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9), rd(1, 3), chid(-5, 5), fl(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    TruncSeries<BigInt> pt(20);
    for (int n = 0; n <= 20; ++n) pt.at(n) = coeff(rng);
    dtpt::LocalSeriesLabel label{rd(rng), chid(rng),
                                 fl(rng) ? dtpt::Flavor::euler : dtpt::Flavor::behrend_weighted,
                                 "tag-" + std::to_string(trial)};
    auto dt = dtpt::dt_pt_convert(pt, label, dtpt::Direction::pt_to_dt);
    auto back = dtpt::dt_pt_convert(dt, label, dtpt::Direction::dt_to_pt);
    if (!(back == pt)) return {"dtpt-roundtrip", false, "trial " + std::to_string(trial)};
  }
  return {"dtpt-roundtrip", true, "pt->dt->pt identity, 100 random series at N=20"};
}

CheckResult check_locally_free(unsigned) {
  for (int r = 1; r <= 3; ++r)
    for (int chi = 0; chi <= 6; ++chi) {
      auto pt = TruncSeries<BigInt>::one(10);
      dtpt::LocalSeriesLabel label{r, chi, dtpt::Flavor::behrend_weighted, ""};
      auto dt = dtpt::dt_pt_convert(pt, label, dtpt::Direction::pt_to_dt);
      if (!(dt == macmahon::wall_crossing_factor(r, chi, 10)))
        return {"locally-free", false,
                "mismatch at r=" + std::to_string(r) + ", chi=" + std::to_string(chi)};
    }
  return {"locally-free", true, "PT=1 gives DT = M((-1)^r q)^{r chi}, r <= 3, chi <= 6"};
}

CheckResult check_stability(unsigned seed) {
  auto agree = [&](const FramedRep<Fp>& rep) {
    bool stable = quiver::brute_force_stability(rep, theta10()) == Verdict::stable;
    bool generated = quiver::is_stable_via_generation(rep, theta10());
    return stable == generated;
  };

  // n = 1: exhaustive over F_5.
  for (int r = 1; r <= 2; ++r) {
    int total = 125 * (r == 1 ? 5 : 25);
    for (int code = 0; code < total; ++code) {
      int c = code;
      FramedRep<Fp> rep;
      rep.n = 1;
      rep.r = r;
      rep.A = Matrix<Fp>(1, 1);
      rep.B = Matrix<Fp>(1, 1);
      rep.C = Matrix<Fp>(1, 1);
      rep.A(0, 0) = Fp(c % 5, 5), c /= 5;
      rep.B(0, 0) = Fp(c % 5, 5), c /= 5;
      rep.C(0, 0) = Fp(c % 5, 5), c /= 5;
      for (int k = 0; k < r; ++k) {
        rep.framing.push_back({Fp(c % 5, 5)});
        c /= 5;
      }
      if (!agree(rep)) return {"stability", false, "n=1 discrepancy, code " + std::to_string(code)};
    }
  }

  // n = 2: exhaustive over F_2 (the F_5 state space is ~5^14 and out of
  // reach; see the random sample below).
  for (int r = 1; r <= 2; ++r) {
    int bits = 12 + 2 * r;
    for (long long code = 0; code < (1LL << bits); ++code) {
      long long c = code;
      FramedRep<Fp> rep;
      rep.n = 2;
      rep.r = r;
      rep.A = Matrix<Fp>(2, 2);
      rep.B = Matrix<Fp>(2, 2);
      rep.C = Matrix<Fp>(2, 2);
      for (Matrix<Fp>* m : {&rep.A, &rep.B, &rep.C})
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            (*m)(i, j) = Fp(c & 1, 2);
            c >>= 1;
          }
      for (int k = 0; k < r; ++k) {
        std::vector<Fp> v(2);
        for (int i = 0; i < 2; ++i) {
          v[i] = Fp(c & 1, 2);
          c >>= 1;
        }
        rep.framing.push_back(std::move(v));
      }
      if (!agree(rep))
        return {"stability", false, "n=2 (F_2) discrepancy, code " + std::to_string(code)};
    }
  }

  // n = 2 and n = 3 over F_5: large random samples.
  std::mt19937_64 rng(seed);
  for (int r = 1; r <= 2; ++r)
    for (int trial = 0; trial < 20000; ++trial)
      if (!agree(random_fp_rep(rng, 2, r, 5)))
        return {"stability", false, "n=2 (F_5) discrepancy, trial " + std::to_string(trial)};
  for (int trial = 0; trial < 1500; ++trial)
    if (!agree(random_fp_rep(rng, 3, 1 + trial % 2, 5)))
      return {"stability", false, "n=3 discrepancy, trial " + std::to_string(trial)};

  return {"stability", true, "brute-force verdict 'stable' <=> joint generation, 0 discrepancies"};
}

CheckResult check_critical_locus(unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nd(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    int n = nd(rng);
    bool commuting = trial % 4 == 0;
    auto rep = random_rat_rep(rng, n, 1, commuting);
    auto grad = quiver::potential_gradient(rep);

    bool commutators_vanish = commutator(rep.A, rep.B).is_zero() &&
                              commutator(rep.B, rep.C).is_zero() &&
                              commutator(rep.C, rep.A).is_zero();
    if (grad.is_zero() != commutators_vanish)
      return {"critical-locus", false, "gradient/commutator mismatch, trial " + std::to_string(trial)};
    if (quiver::is_critical_point(rep) != commutators_vanish)
      return {"critical-locus", false, "is_critical_point mismatch, trial " + std::to_string(trial)};

    // exact entrywise derivative
    auto pickA = [](FramedRep<Rat>& x) -> Matrix<Rat>& { return x.A; };
    auto pickB = [](FramedRep<Rat>& x) -> Matrix<Rat>& { return x.B; };
    auto pickC = [](FramedRep<Rat>& x) -> Matrix<Rat>& { return x.C; };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (grad.dA(i, j) != exact_partial(rep, pickA, i, j) ||
            grad.dB(i, j) != exact_partial(rep, pickB, i, j) ||
            grad.dC(i, j) != exact_partial(rep, pickC, i, j))
          return {"critical-locus", false, "symbolic derivative mismatch, trial " + std::to_string(trial)};
      }

    // floating-point central finite differences
    auto dump = [&](const Matrix<Rat>& m) {
      std::vector<std::vector<double>> d(n, std::vector<double>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = to_double(m(i, j));
      return d;
    };
    auto a = dump(rep.A), b = dump(rep.B), c = dump(rep.C);
    const double h = 1e-6;
    auto fd_check = [&](std::vector<std::vector<double>>& target, const Matrix<Rat>& g) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double keep = target[i][j];
          target[i][j] = keep + h;
          double fp = potential_double(a, b, c);
          target[i][j] = keep - h;
          double fm = potential_double(a, b, c);
          target[i][j] = keep;
          double fd = (fp - fm) / (2 * h);
          double gv = to_double(g(i, j));
          if (std::abs(fd - gv) > 1e-5 * std::max(1.0, std::abs(gv))) return false;
        }
      return true;
    };
    if (!fd_check(a, grad.dA) || !fd_check(b, grad.dB) || !fd_check(c, grad.dC))
      return {"critical-locus", false, "finite differences off, trial " + std::to_string(trial)};
  }
  return {"critical-locus", true,
          "500 random reps n <= 4: gradient <=> commutators, symbolic and fd oracles agree"};
}

CheckResult check_bps(unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  for (int g = 0; g <= 6; ++g)
    for (int trial = 0; trial < 40; ++trial) {
      bps::BpsVector v;
      v.genus = g;
      for (int i = 0; i <= g; ++i) v.values.push_back(Rat(num(rng), den(rng)));
      long long lo = 1 - g, hi = lo + 2 * g + 4;
      auto z = bps::bps_to_pt(v, lo, hi);
      auto ex = bps::extract_bps(z, g);
      if (ex.bps.values != v.values || !ex.residual_zero)
        return {"bps-roundtrip", false, "roundtrip failed at g=" + std::to_string(g)};
    }
  // constructed non-rational input: q + q^50 at genus 0
  LaurentSeries<Rat> z(1, 50);
  z.at(1) = Rat(1);
  z.at(50) = Rat(1);
  auto ex = bps::extract_bps(z, 0);
  if (ex.bps.values != std::vector<Rat>{Rat(1)} || ex.residual_zero)
    return {"bps-roundtrip", false, "non-rational input not detected"};
  return {"bps-roundtrip", true, "extract o expand = id for g <= 6; residual detection correct"};
}

CheckResult check_reciprocal(unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9), len(1, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    int L = len(rng);
    std::vector<BigInt> p(L);
    for (auto& x : p) x = coeff(rng);
    if (p.back().is_zero()) p.back() = 1;
    int d = L - 1;
    auto twice = dtpt::reciprocal_polynomial(dtpt::reciprocal_polynomial(p, d), d);
    if (twice != p) return {"reciprocal", false, "involution failed, trial " + std::to_string(trial)};

    // constructed palindrome p + p* must pass; bumping one end must fail
    std::vector<BigInt> sym(d + 1);
    auto rev = dtpt::reciprocal_polynomial(p, d);
    for (int i = 0; i <= d; ++i) sym[i] = p[i] + rev[i];
    if (!sym[d].is_zero()) {
      if (!dtpt::palindrome_check(sym))
        return {"reciprocal", false, "palindrome not detected, trial " + std::to_string(trial)};
      if (d >= 1) {
        std::vector<BigInt> bad = sym;
        bad[0] += 1;
        if (dtpt::palindrome_check(bad))
          return {"reciprocal", false, "false palindrome, trial " + std::to_string(trial)};
      }
    }
  }
  return {"reciprocal", true, "involution and palindrome detection on 1000 random polynomials"};
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"macmahon-oracle", "virtual-chi", "signed-chi",     "n-invariants", "dtpt-roundtrip",
          "locally-free",    "stability",   "critical-locus", "bps-roundtrip", "reciprocal"};
}

std::vector<CheckResult> run_suite(const std::string& suite, unsigned seed) {
  using Fn = std::function<CheckResult(unsigned)>;
  const std::vector<std::pair<std::string, Fn>> checks = {
      {"macmahon-oracle", check_macmahon_oracle},
      {"virtual-chi", check_virtual_chi},
      {"signed-chi", check_signed_chi},
      {"n-invariants", check_n_invariants},
      {"dtpt-roundtrip", check_dtpt_roundtrip},
      {"locally-free", check_locally_free},
      {"stability", check_stability},
      {"critical-locus", check_critical_locus},
      {"bps-roundtrip", check_bps},
      {"reciprocal", check_reciprocal},
  };
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [name, fn] : checks)
    if (suite == "all" || suite == name) {
      found = true;
      out.push_back(fn(seed));
    }
  if (!found) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

}  // namespace quotdt::verify
