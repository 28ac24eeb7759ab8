#include "quotdt/bps.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace quotdt::bps {

void BpsVector::validate() const {
  if (genus < 0) throw std::invalid_argument("BpsVector: negative genus");
  if (static_cast<int>(values.size()) != genus + 1)
    throw std::invalid_argument("BpsVector: expected genus+1 values");
}

LaurentSeries<Rat> bps_basis_element(int rr, int genus, long long lo, long long hi) {
  if (rr < 0 || rr > genus)
    throw std::invalid_argument("bps_basis_element: index must lie in [0, genus]");
  if (lo > 1 - rr)
    throw std::invalid_argument("bps_basis_element: window must reach exponent 1-rr");
  LaurentSeries<Rat> s(lo, hi);
  // q^{1-rr} (1+q)^{2rr-2} = sum_k C(2rr-2, k) q^{1-rr+k}
  for (long long k = 0;; ++k) {
    long long e = 1 - rr + k;
    if (e > hi) break;
    if (rr >= 1 && k > 2 * rr - 2) break;
    s.at(e) = Rat(binomial(2LL * rr - 2, k));
  }
  return s;
}

LaurentSeries<Rat> bps_to_pt(const BpsVector& v, long long lo, long long hi) {
  v.validate();
  if (lo > 1 - v.genus)
    throw std::invalid_argument("bps_to_pt: window must reach exponent 1-genus");
  LaurentSeries<Rat> s(lo, hi);
  for (int rr = 0; rr <= v.genus; ++rr) {
    if (v.values[rr].is_zero()) continue;
    s += bps_basis_element(rr, v.genus, lo, hi).scaled(v.values[rr]);
  }
  return s;
}

BpsExtraction extract_bps(const LaurentSeries<Rat>& z, int genus) {
  if (genus < 0) throw std::invalid_argument("extract_bps: negative genus");
  for (long long e = z.lo(); e < 1 - genus && e <= z.hi(); ++e)
    if (!z.coeff(e).is_zero())
      throw std::invalid_argument("extract_bps: nonzero term below exponent 1-genus");
  if (z.hi() < 1)
    throw std::invalid_argument(
        "extract_bps: window too short, need exponents up to 1 (minimal window [" +
        std::to_string(1 - genus) + ", 1])");

  long long lo = std::min<long long>(z.lo(), 1 - genus);
  LaurentSeries<Rat> residual(lo, z.hi());
  for (long long e = z.lo(); e <= z.hi(); ++e) residual.at(e) = z.coeff(e);

  BpsVector out;
  out.genus = genus;
  out.values.assign(genus + 1, Rat(0));
  for (int rr = genus; rr >= 0; --rr) {
    Rat n_rr = residual.coeff(1 - rr);
    out.values[rr] = n_rr;
    if (!n_rr.is_zero())
      residual -= bps_basis_element(rr, genus, lo, z.hi()).scaled(n_rr);
  }

  bool integral = std::all_of(out.values.begin(), out.values.end(),
                              [](const Rat& x) { return is_integral(x); });
  bool rz = residual.is_zero_series();
  return {std::move(out), std::move(residual), rz, integral};
}

}  // namespace quotdt::bps
