#pragma once

#include <utility>

#include "quotdt/half_laurent.hpp"
#include "quotdt/macmahon.hpp"
#include "quotdt/trunc_series.hpp"

namespace quotdt::motivic {

/// Generating series of motivic classes: coefficients are Laurent
/// polynomials in L^{1/2}, one per point count n = 0..order.
struct MotivicSeries {
  int rank;
  TruncSeries<HalfLaurent> series;
};

/// Z_r(t) = prod_{m>=1} prod_{k=0}^{rm-1} (1 - L^{2+k-rm/2} t^m)^{-1},
/// truncated at the given order. The L-exponent is stored doubled:
/// twiceExp = 4 + 2k - rm.
MotivicSeries motivic_quot_series(int rank, int order);

/// Coefficientwise Euler specialization L^{1/2} -> -1 of Z_r(t);
/// equals M((-1)^r t)^r.
TruncSeries<BigInt> virtual_chi_series(int rank, int order);

/// Pair ((-1)^{rn} * colored_count(r,n), [t^n] virtual_chi_series);
/// the two entries must agree.
std::pair<BigInt, BigInt> signed_chi_check(int rank, int n,
                                           int bound = macmahon::kDefaultEnumerationBound);

}  // namespace quotdt::motivic
