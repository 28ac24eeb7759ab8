#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quotdt/macmahon.hpp"
#include "quotdt/matrix.hpp"
#include "quotdt/numeric.hpp"

namespace quotdt::quiver {

/// Point of End(V_n)^3 x V_n^r: three loop operators plus r framing
/// vectors. Operators act on column vectors from the left; E_{ij} has
/// its single 1 in row i, column j.
template <typename F>
struct FramedRep {
  int n = 0;
  int r = 1;
  Matrix<F> A, B, C;
  std::vector<std::vector<F>> framing;  // r vectors of length n

  void validate() const {
    if (n < 0 || r < 1) throw std::invalid_argument("FramedRep: need n >= 0, r >= 1");
    for (const Matrix<F>* m : {&A, &B, &C})
      if (m->rows() != n || m->cols() != n)
        throw std::invalid_argument("FramedRep: operator matrices must be n x n");
    if (static_cast<int>(framing.size()) != r)
      throw std::invalid_argument("FramedRep: expected r framing vectors");
    for (const auto& v : framing)
      if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("FramedRep: framing vectors must have length n");
  }
};

struct Theta {
  Rat theta1, theta2;
};

/// Slope (theta1*d1 + theta2*d2) / (d1 + d2) of the dimension vector
/// (d1, d2) with d1 the framing multiplicity.
inline Rat slope(const Theta& theta, long long d1, long long d2) {
  if (d1 < 0 || d2 < 0 || d1 + d2 == 0)
    throw std::invalid_argument("slope: dimension vector must be nonnegative and nonzero");
  return (theta.theta1 * Rat(d1) + theta.theta2 * Rat(d2)) / Rat(d1 + d2);
}

/// Smallest A,B,C-invariant subspace containing all framing vectors.
/// Returns its dimension and an echelonized basis.
template <typename F>
std::pair<int, std::vector<std::vector<F>>> generation_closure(const FramedRep<F>& rep) {
  rep.validate();
  RowSpace<F> space(rep.n);
  std::vector<std::vector<F>> frontier;
  for (const auto& v : rep.framing)
    if (space.insert(v)) frontier.push_back(v);
  while (!frontier.empty() && space.dim() < rep.n) {
    std::vector<std::vector<F>> next;
    for (const auto& v : frontier)
      for (const Matrix<F>* op : {&rep.A, &rep.B, &rep.C}) {
        auto w = op->apply(v);
        if (space.insert(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return {space.dim(), space.rows()};
}

/// theta-stability via the joint-generation criterion; only valid for
/// theta1 >= theta2.
template <typename F>
bool is_stable_via_generation(const FramedRep<F>& rep, const Theta& theta) {
  if (theta.theta1 < theta.theta2)
    throw std::invalid_argument("is_stable_via_generation: requires theta1 >= theta2");
  return generation_closure(rep).first == rep.n;
}

enum class Verdict { stable, strictly_semistable, unstable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::stable: return "stable";
    case Verdict::strictly_semistable: return "strictly-semistable";
    case Verdict::unstable: return "unstable";
  }
  return "?";
}

/// Slope comparison over every invariant subspace, enumerated by
/// reduced row echelon form. Guarded to n <= 3, p <= 7 unless
/// allow_large is set.
Verdict brute_force_stability(const FramedRep<Fp>& rep, const Theta& theta,
                              bool allow_large = false);

/// All subspaces of F_p^n, each as an echelonized row basis (the zero
/// subspace appears as an empty basis).
std::vector<std::vector<std::vector<Fp>>> enumerate_subspaces(int n, int p);

/// f(A,B,C,v) = Tr A[B,C].
template <typename F>
F potential_value(const FramedRep<F>& rep) {
  rep.validate();
  return (rep.A * rep.B * rep.C).trace() - (rep.A * rep.C * rep.B).trace();
}

template <typename F>
struct Gradient {
  Matrix<F> dA, dB, dC;
  bool is_zero() const { return dA.is_zero() && dB.is_zero() && dC.is_zero(); }
};

/// Entrywise gradient of the trace potential: dA = (BC-CB)^T,
/// dB = (CA-AC)^T, dC = (AB-BA)^T. Framing vectors do not enter.
template <typename F>
Gradient<F> potential_gradient(const FramedRep<F>& rep) {
  rep.validate();
  return {commutator(rep.B, rep.C).transpose(), commutator(rep.C, rep.A).transpose(),
          commutator(rep.A, rep.B).transpose()};
}

/// True iff the gradient vanishes, iff all three commutators vanish.
/// Both conditions are computed and must agree.
template <typename F>
bool is_critical_point(const FramedRep<F>& rep) {
  bool grad_zero = potential_gradient(rep).is_zero();
  bool commuting = commutator(rep.A, rep.B).is_zero() &&
                   commutator(rep.B, rep.C).is_zero() &&
                   commutator(rep.C, rep.A).is_zero();
  if (grad_zero != commuting)
    throw std::logic_error("is_critical_point: gradient and commutator tests disagree");
  return grad_zero;
}

/// Torus fixed points of the rank-r Quot scheme at length n, counted
/// as r-tuples of plane partitions.
inline BigInt fixed_point_count(int r, int n,
                                int bound = macmahon::kDefaultEnumerationBound) {
  return macmahon::colored_count(r, n, bound);
}

}  // namespace quotdt::quiver
