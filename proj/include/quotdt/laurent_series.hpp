#pragma once

#include <stdexcept>
#include <vector>

#include "quotdt/numeric.hpp"

namespace quotdt {

/// Laurent series supported on a finite exponent window [lo, hi].
/// coeffs[0] is the coefficient of q^lo.
template <typename C>
class LaurentSeries {
 public:
  LaurentSeries(long long lo, long long hi) : lo_(lo), coeffs_(window_size(lo, hi)) {}

  LaurentSeries(long long lo, std::vector<C> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("LaurentSeries: empty window");
  }

  long long lo() const { return lo_; }
  long long hi() const { return lo_ + static_cast<long long>(coeffs_.size()) - 1; }
  const std::vector<C>& coeffs() const { return coeffs_; }

  C coeff(long long e) const {
    if (e < lo() || e > hi()) return C{};
    return coeffs_[static_cast<size_t>(e - lo_)];
  }

  C& at(long long e) {
    if (e < lo() || e > hi())
      throw std::out_of_range("LaurentSeries: exponent outside window");
    return coeffs_[static_cast<size_t>(e - lo_)];
  }

  LaurentSeries& operator+=(const LaurentSeries& o) {
    require_same_window(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return *this;
  }

  LaurentSeries& operator-=(const LaurentSeries& o) {
    require_same_window(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return *this;
  }

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) {
    a += b;
    return a;
  }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) {
    a -= b;
    return a;
  }

  LaurentSeries scaled(const C& c) const {
    LaurentSeries s = *this;
    for (auto& x : s.coeffs_) x = x * c;
    return s;
  }

  bool is_zero_series() const {
    for (const auto& x : coeffs_)
      if (!quotdt::is_zero(x)) return false;
    return true;
  }

  bool operator==(const LaurentSeries& o) const {
    return lo_ == o.lo_ && coeffs_ == o.coeffs_;
  }

 private:
  static size_t window_size(long long lo, long long hi) {
    if (hi < lo) throw std::invalid_argument("LaurentSeries: hi < lo");
    return static_cast<size_t>(hi - lo + 1);
  }

  void require_same_window(const LaurentSeries& o) const {
    if (lo_ != o.lo_ || coeffs_.size() != o.coeffs_.size())
      throw std::invalid_argument("LaurentSeries: window mismatch");
  }

  long long lo_;
  std::vector<C> coeffs_;
};

}  // namespace quotdt
