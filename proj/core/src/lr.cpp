#include "grassmoduli/lr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace grassmoduli {

SkewShape::SkewShape(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
  if (!outer.contains(inner))
    throw std::invalid_argument("SkewShape: inner shape not contained in outer");
}

int LRTableau::entries_in_row(int entry, int row) const {
  if (entry < 1 || row < 1) return 0;
  std::size_t e = static_cast<std::size_t>(entry - 1);
  std::size_t r = static_cast<std::size_t>(row - 1);
  if (e >= entry_row_counts.size() || r >= entry_row_counts[e].size()) return 0;
  return entry_row_counts[e][r];
}

namespace {

// Backtracking over the cells of ν/λ in reverse reading order (top row
// first, right to left within a row). Placing entry e keeps the filling
// semistandard and the running prefix a ballot word:
//   - rows weakly increase left to right,
//   - columns strictly increase downwards,
//   - #placed(e) stays below #placed(e-1) before each placement of e >= 2,
//   - #placed(e) stays below μ_e.
template <typename OnComplete>
void enumerate_lr(const Partition& nu, const Partition& lambda,
                  const Partition& mu, OnComplete&& on_complete) {
  if (!nu.contains(lambda)) return;
  if (nu.sum() != lambda.sum() + mu.sum()) return;

  const int nrows = static_cast<int>(nu.length());
  const int m = static_cast<int>(mu.length());
  if (nu == lambda) {  // empty skew shape: one (empty) filling iff μ = ∅
    if (mu.empty()) {
      std::vector<std::vector<int>> empty_fill(
          static_cast<std::size_t>(nrows));
      on_complete(empty_fill);
    }
    return;
  }
  if (m == 0) return;

  struct Cell {
    int row;  // 0-based
    int col;  // 0-based column within ν
  };
  std::vector<Cell> cells;
  for (int r = 0; r < nrows; ++r) {
    int lo = lambda.part(static_cast<std::size_t>(r));
    int hi = nu.parts()[static_cast<std::size_t>(r)];
    for (int c = hi - 1; c >= lo; --c) cells.push_back({r, c});
  }

  // fill[r][c] over the full ν grid; 0 marks inner/unfilled cells.
  std::vector<std::vector<int>> fill(static_cast<std::size_t>(nrows));
  for (int r = 0; r < nrows; ++r)
    fill[static_cast<std::size_t>(r)].assign(
        static_cast<std::size_t>(nu.parts()[static_cast<std::size_t>(r)]), 0);
  std::vector<int> placed(static_cast<std::size_t>(m), 0);

  std::function<void(std::size_t)> step = [&](std::size_t idx) {
    if (idx == cells.size()) {
      on_complete(fill);
      return;
    }
    const auto [r, c] = cells[idx];
    auto ur = static_cast<std::size_t>(r);
    auto uc = static_cast<std::size_t>(c);
    int right = (uc + 1 < fill[ur].size()) ? fill[ur][uc + 1] : m;
    int above = 0;
    if (r > 0 && c < nu.parts()[ur - 1] &&
        c >= lambda.part(ur - 1))
      above = fill[ur - 1][uc];
    for (int e = above + 1; e <= right; ++e) {
      std::size_t ue = static_cast<std::size_t>(e - 1);
      if (placed[ue] >= mu.parts()[ue]) continue;
      if (e >= 2 && placed[ue] >= placed[ue - 1]) continue;
      ++placed[ue];
      fill[ur][uc] = e;
      step(idx + 1);
      fill[ur][uc] = 0;
      --placed[ue];
    }
  };
  step(0);
}

}  // namespace

std::vector<LRTableau> lr_tableaux(const Partition& nu, const Partition& lambda,
                                   const Partition& mu) {
  std::vector<LRTableau> out;
  enumerate_lr(nu, lambda, mu,
               [&](const std::vector<std::vector<int>>& fill) {
                 LRTableau t{SkewShape(nu, lambda), {}, {}};
                 t.rows.resize(fill.size());
                 t.entry_row_counts.assign(
                     mu.length(), std::vector<int>(fill.size(), 0));
                 for (std::size_t r = 0; r < fill.size(); ++r) {
                   int lo = lambda.part(r);
                   for (std::size_t c = static_cast<std::size_t>(lo);
                        c < fill[r].size(); ++c) {
                     int e = fill[r][c];
                     t.rows[r].push_back(e);
                     t.entry_row_counts[static_cast<std::size_t>(e - 1)][r]++;
                   }
                 }
                 out.push_back(std::move(t));
               });
  return out;
}

BigInt lr_coefficient(const Partition& lambda, const Partition& mu,
                      const Partition& nu) {
  BigInt count = 0;
  enumerate_lr(nu, lambda, mu,
               [&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

namespace {

// Candidate outer shapes for s_λ·s_μ: partitions ν ⊇ λ with |ν| = |λ| + |μ|,
// ν_1 ≤ λ_1 + μ_1 and at most max_rows rows. A superset of the support;
// the tableau count decides membership.
void candidate_outers(const Partition& lambda, const Partition& mu,
                      int max_rows, std::vector<Partition>& out) {
  const long long target = lambda.sum() + mu.sum();
  const int cap = lambda.part(0) + mu.part(0);
  std::vector<int> current;
  std::function<void(int, long long)> build = [&](int row, long long placed) {
    if (placed == target) {
      // Built rows already dominate λ row by row; the tail must be covered too.
      if (lambda.length() <= current.size()) out.push_back(Partition(current));
      return;
    }
    if (row >= max_rows) return;
    int hi = row == 0 ? cap : current.back();
    long long remaining = target - placed;
    if (remaining > static_cast<long long>(hi) * (max_rows - row)) return;
    int lo = std::max(lambda.part(static_cast<std::size_t>(row)), 1);
    for (int next = hi; next >= lo; --next) {
      if (next > remaining) continue;
      current.push_back(next);
      build(row + 1, placed + next);
      current.pop_back();
    }
  };
  if (target == 0) {
    out.push_back(Partition{});
    return;
  }
  build(0, 0);
}

}  // namespace

SchurExpansion lr_product(const Partition& lambda, const Partition& mu,
                          int max_rows) {
  if (max_rows < 1) throw std::invalid_argument("lr_product: max_rows >= 1");
  SchurExpansion out;
  if (lambda.length() > static_cast<std::size_t>(max_rows)) return out;
  std::vector<Partition> candidates;
  candidate_outers(lambda, mu, max_rows, candidates);
  for (const Partition& nu : candidates) {
    BigInt c = lr_coefficient(lambda, mu, nu);
    if (c != 0) out.add(nu, c);
  }
  return out;
}

}  // namespace grassmoduli
