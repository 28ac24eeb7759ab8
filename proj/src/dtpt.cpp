#include "quotdt/dtpt.hpp"

#include <algorithm>
#include <stdexcept>

#include "quotdt/macmahon.hpp"

namespace quotdt::dtpt {

TruncSeries<BigInt> conversion_factor(const LocalSeriesLabel& label, int order) {
  if (label.rank < 1) throw std::invalid_argument("conversion_factor: rank must be >= 1");
  int sign = 1;
  if (label.flavor == Flavor::behrend_weighted && label.rank % 2 != 0) sign = -1;
  return macmahon::macmahon_series(order)
      .substitute_sign(sign)
      .pow(static_cast<long long>(label.rank) * label.chi);
}

TruncSeries<BigInt> dt_pt_convert(const TruncSeries<BigInt>& series,
                                  const LocalSeriesLabel& label, Direction dir) {
  auto factor = conversion_factor(label, series.order());
  if (dir == Direction::dt_to_pt) factor = factor.inverse();
  return series * factor;
}

std::vector<BigInt> reciprocal_polynomial(const std::vector<BigInt>& p, int d) {
  int deg = -1;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (!p[i].is_zero()) deg = i;
  if (d < deg)
    throw std::invalid_argument("reciprocal_polynomial: window degree below actual degree");
  std::vector<BigInt> out(d + 1);
  for (int i = 0; i <= d; ++i)
    if (i < static_cast<int>(p.size())) out[d - i] = p[i];
  return out;
}

bool palindrome_check(const std::vector<BigInt>& p) {
  int deg = 0;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (!p[i].is_zero()) deg = i;
  auto rev = reciprocal_polynomial(p, deg);
  for (int i = 0; i <= deg; ++i) {
    BigInt orig = i < static_cast<int>(p.size()) ? p[i] : BigInt(0);
    if (orig != rev[i]) return false;
  }
  return true;
}

bool reflexive_degree_check(const std::vector<BigInt>& p, int ell) {
  if (ell < 0) throw std::invalid_argument("reflexive_degree_check: ell must be >= 0");
  int deg = -1;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (!p[i].is_zero()) deg = i;
  if (deg < 0) deg = 0;  // zero polynomial: degree 0 with zero coefficient
  if (deg != ell) return false;
  return ell < static_cast<int>(p.size()) && !p[ell].is_zero();
}

}  // namespace quotdt::dtpt
