#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace quotdt {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_zero(const BigInt& x) { return x.is_zero(); }
inline bool is_zero(const Rat& x) { return x.is_zero(); }

/// Multiplicative inverse when the element is a unit of its ring.
inline std::optional<BigInt> unit_inverse(const BigInt& x) {
  if (x == 1 || x == -1) return x;
  return std::nullopt;
}

inline std::optional<Rat> unit_inverse(const Rat& x) {
  if (x.is_zero()) return std::nullopt;
  return Rat(1) / x;
}

/// Binomial coefficient C(a, k) with integer (possibly negative) top.
/// The running product c * (a - i) / (i + 1) is integral at every step.
inline BigInt binomial(long long a, long long k) {
  if (k < 0) throw std::invalid_argument("binomial: k must be nonnegative");
  BigInt c = 1;
  for (long long i = 0; i < k; ++i) {
    c *= BigInt(a - i);
    c /= BigInt(i + 1);
  }
  return c;
}

inline BigInt parse_bigint(const std::string& s) {
  try {
    return BigInt(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a valid integer: " + s);
  }
}

inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a valid rational: " + s);
  }
}

inline std::string to_string(const BigInt& x) { return x.str(); }
inline std::string to_string(const Rat& x) { return x.str(); }

inline bool is_integral(const Rat& x) {
  return boost::multiprecision::denominator(x) == 1;
}

}  // namespace quotdt
