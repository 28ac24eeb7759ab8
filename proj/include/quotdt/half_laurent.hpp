#pragma once

#include <map>
#include <optional>
#include <utility>

#include "quotdt/numeric.hpp"

namespace quotdt {

/// Integer Laurent polynomial in L^{1/2}. Exponents are stored doubled,
/// so L^{3/2} sits at key 3 and L^2 at key 4; all keys stay integral.
class HalfLaurent {
 public:
  HalfLaurent() = default;
  HalfLaurent(int c) {
    if (c != 0) terms_[0] = c;
  }
  HalfLaurent(BigInt c) {
    if (!quotdt::is_zero(c)) terms_[0] = std::move(c);
  }

  static HalfLaurent monomial(long long twice_exp, BigInt coeff) {
    HalfLaurent h;
    if (!quotdt::is_zero(coeff)) h.terms_[twice_exp] = std::move(coeff);
    return h;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<long long, BigInt>& terms() const { return terms_; }

  BigInt coeff(long long twice_exp) const {
    auto it = terms_.find(twice_exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  HalfLaurent& operator+=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.terms_) {
      auto& dst = terms_[e];
      dst += c;
      if (dst.is_zero()) terms_.erase(e);
    }
    return *this;
  }

  HalfLaurent& operator-=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.terms_) {
      auto& dst = terms_[e];
      dst -= c;
      if (dst.is_zero()) terms_.erase(e);
    }
    return *this;
  }

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) {
    a += b;
    return a;
  }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) {
    a -= b;
    return a;
  }

  HalfLaurent operator-() const {
    HalfLaurent h;
    for (const auto& [e, c] : terms_) h.terms_[e] = -c;
    return h;
  }

  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent h;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        auto& dst = h.terms_[ea + eb];
        dst += ca * cb;
        if (dst.is_zero()) h.terms_.erase(ea + eb);
      }
    return h;
  }

  bool operator==(const HalfLaurent& o) const { return terms_ == o.terms_; }

  /// L^{1/2} -> -1, i.e. each term contributes coeff * (-1)^twiceExp.
  BigInt euler_specialize() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_)
      s += (e % 2 != 0) ? -c : c;
    return s;
  }

 private:
  std::map<long long, BigInt> terms_;
};

inline bool is_zero(const HalfLaurent& x) { return x.is_zero(); }

/// Units of the Laurent ring are the monomials with coefficient +-1.
inline std::optional<HalfLaurent> unit_inverse(const HalfLaurent& x) {
  if (x.terms().size() != 1) return std::nullopt;
  const auto& [e, c] = *x.terms().begin();
  if (c != 1 && c != -1) return std::nullopt;
  return HalfLaurent::monomial(-e, c);
}

}  // namespace quotdt
