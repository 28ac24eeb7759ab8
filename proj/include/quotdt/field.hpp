#pragma once

#include <stdexcept>
#include <string>

#include "quotdt/numeric.hpp"

namespace quotdt {

/// Prime-field element with a runtime modulus. A default-constructed or
/// int-constructed element carries modulus 0 ("any field"); the modulus
/// propagates through arithmetic, and mixing two distinct nonzero moduli
/// is an error. This lets generic code use F{} and F(1) freely.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long long v) : v_(v), p_(0) {}
  Fp(long long v, int p) : v_(0), p_(check_p(p)) { v_ = reduce(v, p_); }

  int modulus() const { return p_; }
  long long value() const { return v_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    int p = join(a.p_, b.p_);
    return make(a.v_ + b.v_, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    int p = join(a.p_, b.p_);
    return make(a.v_ - b.v_, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    int p = join(a.p_, b.p_);
    return make(a.v_ * b.v_, p);
  }
  Fp operator-() const { return make(-v_, p_); }

  Fp inverse() const {
    if (p_ == 0) {
      if (v_ == 1 || v_ == -1) return *this;
      throw std::domain_error("Fp: inverse without a modulus");
    }
    if (v_ % p_ == 0) throw std::domain_error("Fp: inverse of zero");
    // Fermat; p is prime and small.
    long long r = 1, b = reduce(v_, p_), e = p_ - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return Fp(r, p_);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    int p = join(a.p_, b.p_);
    if (p == 0) return a.v_ == b.v_;
    return reduce(a.v_, p) == reduce(b.v_, p);
  }

  bool is_zero_elem() const { return p_ == 0 ? v_ == 0 : reduce(v_, p_) == 0; }

 private:
  static int check_p(int p) {
    if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
    return p;
  }
  static long long reduce(long long v, int p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
  }
  static int join(int pa, int pb) {
    if (pa == 0) return pb;
    if (pb == 0) return pa;
    if (pa != pb) throw std::invalid_argument("Fp: mixed moduli");
    return pa;
  }
  static Fp make(long long v, int p) { return p == 0 ? Fp(v) : Fp(v, p); }

  long long v_;
  int p_;
};

inline bool is_zero(const Fp& x) { return x.is_zero_elem(); }

inline Fp field_inverse(const Fp& x) { return x.inverse(); }
inline Rat field_inverse(const Rat& x) {
  if (x.is_zero()) throw std::domain_error("rational inverse of zero");
  return Rat(1) / x;
}

inline std::string to_string(const Fp& x) {
  return std::to_string(x.modulus() == 0 ? x.value()
                                         : ((x.value() % x.modulus()) + x.modulus()) % x.modulus());
}

}  // namespace quotdt
