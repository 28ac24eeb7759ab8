#pragma once

#include <vector>

#include "quotdt/laurent_series.hpp"
#include "quotdt/numeric.hpp"

namespace quotdt::bps {

/// BPS numbers n_0..n_g of a curve of arithmetic genus g.
struct BpsVector {
  int genus = 0;
  std::vector<Rat> values;  // length genus+1

  void validate() const;
};

/// Expansion of q^{1-rr} (1+q)^{2rr-2} on the window [lo, hi]; a
/// Laurent polynomial for rr >= 1, an infinite series truncated at hi
/// for rr = 0.
LaurentSeries<Rat> bps_basis_element(int rr, int genus, long long lo, long long hi);

/// sum_rr n_rr q^{1-rr} (1+q)^{2rr-2} on the window.
LaurentSeries<Rat> bps_to_pt(const BpsVector& v, long long lo, long long hi);

struct BpsExtraction {
  BpsVector bps;
  LaurentSeries<Rat> residual;
  bool residual_zero;
  bool integral;  // all BPS values in Z (reported, not enforced)
};

/// Recovers n_g, .., n_0 by descending triangular elimination: the
/// coefficient at exponent 1-rr determines n_rr once larger indices
/// are subtracted. The window must reach exponent 1 and must not carry
/// terms below 1-g.
BpsExtraction extract_bps(const LaurentSeries<Rat>& z, int genus);

}  // namespace quotdt::bps
