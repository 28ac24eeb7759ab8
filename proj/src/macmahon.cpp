#include "quotdt/macmahon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace quotdt::macmahon {

PlanePartition::PlanePartition(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
  std::sort(boxes_.begin(), boxes_.end());
  boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
}

PlanePartition PlanePartition::from_layers(const std::vector<std::vector<int>>& layers) {
  std::vector<Box> boxes;
  for (int k = 0; k < static_cast<int>(layers.size()); ++k)
    for (int i = 0; i < static_cast<int>(layers[k].size()); ++i)
      for (int j = 0; j < layers[k][i]; ++j) boxes.push_back({i, j, k});
  return PlanePartition(std::move(boxes));
}

bool PlanePartition::is_downward_closed() const {
  auto has = [&](const Box& b) {
    return std::binary_search(boxes_.begin(), boxes_.end(), b);
  };
  for (const Box& b : boxes_) {
    if (b.i < 0 || b.j < 0 || b.k < 0) return false;
    if (b.i > 0 && !has({b.i - 1, b.j, b.k})) return false;
    if (b.j > 0 && !has({b.i, b.j - 1, b.k})) return false;
    if (b.k > 0 && !has({b.i, b.j, b.k - 1})) return false;
  }
  return true;
}

TruncSeries<BigInt> macmahon_series(int order) {
  if (order < 0) throw std::invalid_argument("macmahon_series: negative order");
  auto result = TruncSeries<BigInt>::one(order);
  for (int m = 1; m <= order; ++m) {
    // (1 - q^m)^{-m}
    TruncSeries<BigInt> factor = TruncSeries<BigInt>::one(order);
    if (m <= order) factor.at(m) = -1;
    result = result * factor.inverse().pow(m);
  }
  return result;
}

namespace {

using Shape = std::vector<int>;  // weakly decreasing positive parts

// Number of ways to stack further layers, each a subshape of `cap`,
// with total size exactly `rem`.
BigInt stack_count(int rem, const Shape& cap,
                   std::map<std::pair<int, Shape>, BigInt>& memo) {
  if (rem == 0) return 1;
  auto key = std::make_pair(rem, cap);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  BigInt total = 0;
  Shape layer;
  // Enumerate nonempty subshapes of cap with size <= rem, row by row.
  auto rec = [&](auto&& self, int row, int prev, int used) -> void {
    if (used > 0) total += stack_count(rem - used, layer, memo);
    if (row >= static_cast<int>(cap.size())) return;
    int maxLen = std::min({cap[row], prev, rem - used});
    for (int len = 1; len <= maxLen; ++len) {
      layer.push_back(len);
      self(self, row + 1, len, used + len);
      layer.pop_back();
    }
  };
  rec(rec, 0, rem, 0);
  memo[key] = total;
  return total;
}

void check_bound(int n, int bound, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative size");
  if (n > bound)
    throw std::invalid_argument(std::string(what) + ": size " + std::to_string(n) +
                                " exceeds enumeration bound " + std::to_string(bound));
}

}  // namespace

BigInt plane_partition_count(int n, int bound) {
  check_bound(n, bound, "plane_partition_count");
  if (n == 0) return 1;
  std::map<std::pair<int, Shape>, BigInt> memo;
  Shape square(n, n);
  return stack_count(n, square, memo);
}

std::vector<PlanePartition> enumerate_plane_partitions(int n, int bound) {
  check_bound(n, bound, "enumerate_plane_partitions");
  std::vector<PlanePartition> out;
  std::vector<Shape> layers;

  // Enumerate subshapes of `cap` of size in [0, rem]; a nonempty layer
  // recurses into the next height, an empty one terminates the stack.
  auto stack = [&](auto&& self, int rem, const Shape& cap) -> void {
    if (rem == 0) {
      out.push_back(PlanePartition::from_layers(
          std::vector<std::vector<int>>(layers.begin(), layers.end())));
      return;
    }
    Shape layer;
    auto rows = [&](auto&& rself, int row, int prev, int used) -> void {
      if (used > 0) {
        layers.push_back(layer);
        self(self, rem - used, layer);
        layers.pop_back();
      }
      if (row >= static_cast<int>(cap.size())) return;
      int maxLen = std::min({cap[row], prev, rem - used});
      for (int len = 1; len <= maxLen; ++len) {
        layer.push_back(len);
        rself(rself, row + 1, len, used + len);
        layer.pop_back();
      }
    };
    rows(rows, 0, rem, 0);
  };

  Shape square(std::max(n, 1), std::max(n, 1));
  stack(stack, n, square);
  return out;
}

BigInt colored_count(int rank, int n, int bound) {
  if (rank < 1) throw std::invalid_argument("colored_count: rank must be >= 1");
  check_bound(n, bound, "colored_count");
  std::vector<BigInt> counts(n + 1);
  for (int m = 0; m <= n; ++m) counts[m] = plane_partition_count(m, bound);
  std::vector<BigInt> conv(n + 1);
  conv[0] = 1;
  for (int step = 0; step < rank; ++step) {
    std::vector<BigInt> next(n + 1);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) next[a + b] += conv[a] * counts[b];
    conv = std::move(next);
  }
  return conv[n];
}

TruncSeries<BigInt> wall_crossing_factor(int rank, int chi, int order) {
  if (rank < 1) throw std::invalid_argument("wall_crossing_factor: rank must be >= 1");
  int sign = (rank % 2 == 0) ? 1 : -1;
  return macmahon_series(order).substitute_sign(sign).pow(static_cast<long long>(rank) * chi);
}

std::vector<Rat> n_invariants(int chi, int order) {
  auto m_neg = to_rational(macmahon_series(order).substitute_sign(-1).pow(chi));
  auto lg = log_series(m_neg);
  std::vector<Rat> ns;
  ns.reserve(order);
  for (int m = 1; m <= order; ++m) {
    Rat v = lg[m] / Rat(m);
    if (m % 2 == 0) v = -v;  // (-1)^{m-1}
    ns.push_back(v);
  }
  return ns;
}

TruncSeries<Rat> n_invariant_factor(int rank, int chi, int order) {
  if (rank < 1) throw std::invalid_argument("n_invariant_factor: rank must be >= 1");
  auto ns = n_invariants(chi, order);
  TruncSeries<Rat> expo(order);
  for (int m = 1; m <= order; ++m) {
    Rat v = Rat(rank) * Rat(m) * ns[m - 1];
    if ((static_cast<long long>(rank) * m) % 2 == 0) v = -v;  // (-1)^{rm-1}
    expo.at(m) = v;
  }
  return exp_series(expo);
}

}  // namespace quotdt::macmahon
