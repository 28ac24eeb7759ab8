#pragma once

#include <string>
#include <vector>

#include "quotdt/numeric.hpp"
#include "quotdt/trunc_series.hpp"

namespace quotdt::dtpt {

enum class Flavor { behrend_weighted, euler };
enum class Direction { dt_to_pt, pt_to_dt };

/// Conversion parameters. sheaf_tag is opaque metadata and is never
/// read by any operation.
struct LocalSeriesLabel {
  int rank = 1;
  int chi = 0;
  Flavor flavor = Flavor::behrend_weighted;
  std::string sheaf_tag;
};

/// The factor M(s q)^{r chi}, with s = (-1)^r in the Behrend-weighted
/// flavor and s = +1 in the Euler flavor.
TruncSeries<BigInt> conversion_factor(const LocalSeriesLabel& label, int order);

/// Multiplies (pt -> dt) or divides (dt -> pt) by the wall-crossing
/// factor at the series order.
TruncSeries<BigInt> dt_pt_convert(const TruncSeries<BigInt>& series,
                                  const LocalSeriesLabel& label, Direction dir);

/// P*(q) = q^d P(1/q): the coefficient list reversed within [0..d].
std::vector<BigInt> reciprocal_polynomial(const std::vector<BigInt>& p, int d);

/// True iff P equals its reciprocal at its own degree.
bool palindrome_check(const std::vector<BigInt>& p);

/// True iff P has degree exactly ell (nonzero coefficient there).
bool reflexive_degree_check(const std::vector<BigInt>& p, int ell);

}  // namespace quotdt::dtpt
