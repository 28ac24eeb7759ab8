#pragma once

#include <compare>
#include <vector>

#include "quotdt/numeric.hpp"
#include "quotdt/trunc_series.hpp"

namespace quotdt::macmahon {

inline constexpr int kDefaultEnumerationBound = 12;

struct Box {
  int i, j, k;
  auto operator<=>(const Box&) const = default;
};

/// Finite downward-closed set of boxes in N^3, stored sorted.
class PlanePartition {
 public:
  PlanePartition() = default;
  explicit PlanePartition(std::vector<Box> boxes);

  /// Builds the box set from horizontal layers: layers[k] is the Young
  /// diagram at height k as a weakly decreasing list of row lengths.
  static PlanePartition from_layers(const std::vector<std::vector<int>>& layers);

  const std::vector<Box>& boxes() const { return boxes_; }
  int size() const { return static_cast<int>(boxes_.size()); }
  bool is_downward_closed() const;

  bool operator==(const PlanePartition&) const = default;

 private:
  std::vector<Box> boxes_;
};

/// M(q) = prod_{m>=1} (1-q^m)^{-m} truncated at the given order.
TruncSeries<BigInt> macmahon_series(int order);

/// Exact plane-partition count by layered enumeration, independent of
/// the product formula. Rejects n above the bound (cost guard).
BigInt plane_partition_count(int n, int bound = kDefaultEnumerationBound);

/// All plane partitions of size n as explicit box sets (small n only).
std::vector<PlanePartition> enumerate_plane_partitions(int n, int bound = kDefaultEnumerationBound);

/// Number of r-tuples of plane partitions with total size n, by r-fold
/// convolution of the enumeration counts.
BigInt colored_count(int rank, int n, int bound = kDefaultEnumerationBound);

/// M((-1)^r q)^{r*chi} truncated at the given order.
TruncSeries<BigInt> wall_crossing_factor(int rank, int chi, int order);

/// N_{m,0} for m = 1..order, defined through the rank-one identity
/// exp(sum_m (-1)^{m-1} m N_m q^m) = M(-q)^chi.
std::vector<Rat> n_invariants(int chi, int order);

/// exp(sum_m (-1)^{rm-1} r m N_m q^m); equals wall_crossing_factor.
TruncSeries<Rat> n_invariant_factor(int rank, int chi, int order);

}  // namespace quotdt::macmahon
