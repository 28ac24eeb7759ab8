#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "quotdt/numeric.hpp"

namespace quotdt {

/// Formal power series in one variable truncated at a fixed order N:
/// coefficients of q^0 .. q^N over an exact commutative ring C.
/// Binary operations demand equal orders; use retruncate() explicitly.
template <typename C>
class TruncSeries {
 public:
  explicit TruncSeries(int order) : coeffs_(check_order(order) + 1) {}

  TruncSeries(int order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    check_order(order);
    if (static_cast<int>(coeffs_.size()) != order + 1)
      throw std::invalid_argument("TruncSeries: coefficient list length must be order+1");
  }

  static TruncSeries one(int order) {
    TruncSeries s(order);
    s.coeffs_[0] = C(1);
    return s;
  }

  static TruncSeries constant(C c, int order) {
    TruncSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<C>& coeffs() const { return coeffs_; }
  const C& operator[](int n) const { return coeffs_.at(n); }
  C& at(int n) { return coeffs_.at(n); }

  bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }

  TruncSeries& operator+=(const TruncSeries& o) {
    require_same_order(o);
    for (int n = 0; n <= order(); ++n) coeffs_[n] = coeffs_[n] + o.coeffs_[n];
    return *this;
  }

  TruncSeries& operator-=(const TruncSeries& o) {
    require_same_order(o);
    for (int n = 0; n <= order(); ++n) coeffs_[n] = coeffs_[n] - o.coeffs_[n];
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) {
    a += b;
    return a;
  }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) {
    a -= b;
    return a;
  }

  TruncSeries operator-() const {
    TruncSeries s(order());
    for (int n = 0; n <= order(); ++n) s.coeffs_[n] = -coeffs_[n];
    return s;
  }

  /// Cauchy product truncated at the shared order.
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.require_same_order(b);
    const int N = a.order();
    TruncSeries s(N);
    for (int i = 0; i <= N; ++i) {
      if (quotdt::is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j <= N; ++j)
        s.coeffs_[i + j] = s.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return s;
  }

  /// Multiplicative inverse; the constant term must be a unit of C.
  TruncSeries inverse() const {
    auto c0 = unit_inverse(coeffs_[0]);
    if (!c0)
      throw std::invalid_argument("series inverse: constant term is not a unit");
    const int N = order();
    TruncSeries b(N);
    b.coeffs_[0] = *c0;
    for (int n = 1; n <= N; ++n) {
      C acc{};
      for (int k = 1; k <= n; ++k) acc = acc + coeffs_[k] * b.coeffs_[n - k];
      b.coeffs_[n] = -(*c0 * acc);
    }
    return b;
  }

  /// Integer power by binary exponentiation; k < 0 inverts first.
  TruncSeries pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    TruncSeries acc = one(order());
    TruncSeries base = *this;
    while (k > 0) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  /// q -> s*q for s = +-1.
  TruncSeries substitute_sign(int s) const {
    if (s != 1 && s != -1)
      throw std::invalid_argument("substitute_sign: sign must be +1 or -1");
    TruncSeries r = *this;
    if (s == -1)
      for (int n = 1; n <= order(); n += 2) r.coeffs_[n] = -r.coeffs_[n];
    return r;
  }

  TruncSeries retruncate(int new_order) const {
    if (new_order < 0 || new_order > order())
      throw std::invalid_argument("retruncate: new order must lie in [0, order]");
    return TruncSeries(new_order,
                       std::vector<C>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
    return order;
  }

  void require_same_order(const TruncSeries& o) const {
    if (order() != o.order())
      throw std::invalid_argument("TruncSeries: order mismatch (retruncate explicitly)");
  }

  std::vector<C> coeffs_;
};

/// exp of a rational series with zero constant term, by the recurrence
/// n b_n = sum_{k=1..n} k a_k b_{n-k}.
inline TruncSeries<Rat> exp_series(const TruncSeries<Rat>& a) {
  if (!a[0].is_zero())
    throw std::invalid_argument("exp_series: constant term must be 0");
  const int N = a.order();
  TruncSeries<Rat> b = TruncSeries<Rat>::one(N);
  for (int n = 1; n <= N; ++n) {
    Rat acc = 0;
    for (int k = 1; k <= n; ++k) acc += Rat(k) * a[k] * b[n - k];
    b.at(n) = acc / Rat(n);
  }
  return b;
}

/// log of a rational series with constant term 1, by the recurrence
/// n a_n = n b_n - sum_{k=1..n-1} k a_k b_{n-k} where b = input.
inline TruncSeries<Rat> log_series(const TruncSeries<Rat>& b) {
  if (b[0] != Rat(1))
    throw std::invalid_argument("log_series: constant term must be 1");
  const int N = b.order();
  TruncSeries<Rat> a(N);
  for (int n = 1; n <= N; ++n) {
    Rat acc = Rat(n) * b[n];
    for (int k = 1; k < n; ++k) acc -= Rat(k) * a[k] * b[n - k];
    a.at(n) = acc / Rat(n);
  }
  return a;
}

inline TruncSeries<Rat> to_rational(const TruncSeries<BigInt>& a) {
  TruncSeries<Rat> r(a.order());
  for (int n = 0; n <= a.order(); ++n) r.at(n) = Rat(a[n]);
  return r;
}

}  // namespace quotdt
