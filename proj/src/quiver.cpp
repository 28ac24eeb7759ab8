#include "quotdt/quiver.hpp"

#include <algorithm>

namespace quotdt::quiver {

namespace {

// Enumerate reduced row echelon forms of full rank d inside F_p^n:
// choose pivot columns, then fill the free entries (right of each
// pivot, excluding pivot columns) with all field values.
void emit_rrefs(int n, int p, int d, std::vector<std::vector<std::vector<Fp>>>& out) {
  std::vector<int> pivots(d);
  auto choose = [&](auto&& self, int idx, int start) -> void {
    if (idx == d) {
      std::vector<std::pair<int, int>> free_slots;  // (row, col)
      for (int i = 0; i < d; ++i)
        for (int j = pivots[i] + 1; j < n; ++j)
          if (!std::binary_search(pivots.begin(), pivots.end(), j))
            free_slots.emplace_back(i, j);
      std::vector<int> vals(free_slots.size(), 0);
      for (;;) {
        std::vector<std::vector<Fp>> basis(d, std::vector<Fp>(n));
        for (int i = 0; i < d; ++i) basis[i][pivots[i]] = Fp(1, p);
        for (size_t s = 0; s < free_slots.size(); ++s)
          basis[free_slots[s].first][free_slots[s].second] = Fp(vals[s], p);
        out.push_back(std::move(basis));
        size_t s = 0;
        while (s < vals.size() && ++vals[s] == p) vals[s++] = 0;
        if (s == vals.size()) break;
        if (vals.empty()) break;
      }
      if (free_slots.empty() && d > 0) return;  // single RREF already emitted
      return;
    }
    for (int c = start; c <= n - (d - idx); ++c) {
      pivots[idx] = c;
      self(self, idx + 1, c + 1);
    }
  };
  if (d == 0) {
    out.push_back({});
    return;
  }
  choose(choose, 0, 0);
}

}  // namespace

std::vector<std::vector<std::vector<Fp>>> enumerate_subspaces(int n, int p) {
  std::vector<std::vector<std::vector<Fp>>> out;
  for (int d = 0; d <= n; ++d) emit_rrefs(n, p, d, out);
  return out;
}

Verdict brute_force_stability(const FramedRep<Fp>& rep, const Theta& theta,
                              bool allow_large) {
  rep.validate();
  int p = 0;
  auto scan = [&](const Fp& x) {
    if (x.modulus() != 0) p = x.modulus();
  };
  for (int i = 0; i < rep.n; ++i)
    for (int j = 0; j < rep.n; ++j) {
      scan(rep.A(i, j));
      scan(rep.B(i, j));
      scan(rep.C(i, j));
    }
  for (const auto& v : rep.framing)
    for (const auto& x : v) scan(x);
  if (p == 0) throw std::invalid_argument("brute_force_stability: modulus not determined");
  if (!allow_large && (rep.n > 3 || p > 7))
    throw std::invalid_argument("brute_force_stability: size guard n <= 3, p <= 7 exceeded");

  const Rat mu_total = slope(theta, 1, rep.n);
  bool saw_equal = false;

  for (const auto& basis : enumerate_subspaces(rep.n, p)) {
    int d = static_cast<int>(basis.size());
    RowSpace<Fp> space(rep.n);
    for (const auto& row : basis) space.insert(row);

    bool invariant = true;
    for (const auto& row : basis)
      for (const Matrix<Fp>* op : {&rep.A, &rep.B, &rep.C})
        if (!space.contains(op->apply(row))) {
          invariant = false;
          break;
        }
    if (!invariant) continue;

    bool framing_inside = true;
    for (const auto& v : rep.framing)
      if (!space.contains(v)) {
        framing_inside = false;
        break;
      }

    // Subrepresentations (d1, d) of the framed rep (1, n): d1 = 0 needs
    // d > 0; d1 = 1 needs the framing vectors inside W and (1,d) proper.
    for (int d1 : {0, 1}) {
      if (d1 == 0 && d == 0) continue;
      if (d1 == 1 && (!framing_inside || d == rep.n)) continue;
      Rat mu = slope(theta, d1, d);
      if (mu > mu_total) return Verdict::unstable;
      if (mu == mu_total) saw_equal = true;
    }
  }
  return saw_equal ? Verdict::strictly_semistable : Verdict::stable;
}

}  // namespace quotdt::quiver
