#pragma once

#include <vector>

#include "grassmoduli/partition.hpp"
#include "grassmoduli/schur.hpp"

namespace grassmoduli {

/// Skew shape ν/λ with λ ⊆ ν.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape(Partition out, Partition in);
  long long size() const { return outer.sum() - inner.sum(); }
};

/// A Littlewood–Richardson filling of a skew shape: semistandard, with the
/// reverse reading word a ballot sequence. entry_row_counts[e-1][r-1] records
/// how many entries equal to e sit in row r of the outer shape.
struct LRTableau {
  SkewShape shape;
  std::vector<std::vector<int>> rows;  // rows[r] holds the skew cells of row r
  std::vector<std::vector<int>> entry_row_counts;

  int entries_in_row(int entry, int row) const;  // both 1-based
};

/// All LR tableaux of shape ν/λ with content μ, enumerated deterministically
/// (cells in reverse reading order, smallest admissible entry first).
std::vector<LRTableau> lr_tableaux(const Partition& nu, const Partition& lambda,
                                   const Partition& mu);

/// c^ν_{λμ}: the number of LR tableaux of shape ν/λ and content μ. Zero when
/// |λ| + |μ| ≠ |ν|.
BigInt lr_coefficient(const Partition& lambda, const Partition& mu,
                      const Partition& nu);

/// s_λ·s_μ = Σ_ν c^ν_{λμ} s_ν restricted to partitions with at most max_rows
/// rows, by enumerating candidate outer shapes and counting tableaux.
SchurExpansion lr_product(const Partition& lambda, const Partition& mu,
                          int max_rows);

}  // namespace grassmoduli
