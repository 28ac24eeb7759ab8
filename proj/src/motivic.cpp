#include "quotdt/motivic.hpp"

#include <stdexcept>

namespace quotdt::motivic {

MotivicSeries motivic_quot_series(int rank, int order) {
  if (rank < 1) throw std::invalid_argument("motivic_quot_series: rank must be >= 1");
  if (order < 0) throw std::invalid_argument("motivic_quot_series: negative order");

  auto result = TruncSeries<HalfLaurent>::one(order);
  for (int m = 1; m <= order; ++m) {
    for (int k = 0; k < rank * m; ++k) {
      long long twice_exp = 4 + 2LL * k - static_cast<long long>(rank) * m;
      // (1 - L^{twice_exp/2} t^m)^{-1} via geometric expansion
      TruncSeries<HalfLaurent> factor = TruncSeries<HalfLaurent>::one(order);
      HalfLaurent power(1);
      HalfLaurent mono = HalfLaurent::monomial(twice_exp, 1);
      for (int e = m; e <= order; e += m) {
        power = power * mono;
        factor.at(e) = power;
      }
      result = result * factor;
    }
  }
  return {rank, result};
}

TruncSeries<BigInt> virtual_chi_series(int rank, int order) {
  auto z = motivic_quot_series(rank, order);
  TruncSeries<BigInt> chi(order);
  for (int n = 0; n <= order; ++n) chi.at(n) = z.series[n].euler_specialize();
  return chi;
}

std::pair<BigInt, BigInt> signed_chi_check(int rank, int n, int bound) {
  BigInt count = macmahon::colored_count(rank, n, bound);
  if ((static_cast<long long>(rank) * n) % 2 != 0) count = -count;
  BigInt spec = virtual_chi_series(rank, n)[n];
  return {count, spec};
}

}  // namespace quotdt::motivic
