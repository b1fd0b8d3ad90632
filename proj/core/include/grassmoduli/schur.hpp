#pragma once

#include <map>
#include <string>

#include "grassmoduli/partition.hpp"

namespace grassmoduli {

/// Formal integer-linear combination of Schur-basis elements. Coefficients
/// are never zero in storage; terms iterate in decreasing lexicographic
/// order of their partitions.
class SchurExpansion {
 public:
  using TermMap = std::map<Partition, BigInt, DecreasingLex>;

  SchurExpansion() = default;

  /// The multiplicative unit s_∅.
  static SchurExpansion unit();

  /// Accumulates coeff·s_λ, erasing the term when it cancels to zero.
  void add(const Partition& lambda, const BigInt& coeff);

  BigInt coeff(const Partition& lambda) const;
  bool contains(const Partition& lambda) const {
    return terms_.count(lambda) > 0;
  }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Drops every term whose partition has more than max_rows parts.
  void truncate_rows(int max_rows);

  /// Σ coeff(μ)·dim_gl(μ, n).
  BigInt dimension(int n) const;

  SchurExpansion& operator+=(const SchurExpansion& other);

  /// Terms rendered as "±c·[λ]" joined by spaces, e.g.
  /// "1·[2,2] -1·[2,1,1] 1·[1,1,1,1]"; the zero expansion renders as "0".
  std::string to_text() const;

  friend bool operator==(const SchurExpansion&,
                         const SchurExpansion&) = default;

 private:
  TermMap terms_;
};

/// Bilinear Schur product via Littlewood–Richardson enumeration; partitions
/// with more than max_rows rows are discarded (they vanish for GL(max_rows)).
SchurExpansion multiply(const SchurExpansion& a, const SchurExpansion& b,
                        int max_rows);

/// Degree-2 Adams operation: the signed expansion E with
/// Σ_μ E[μ]·s_μ(x_1,...,x_n) = s_λ(x_1²,...,x_n²) at n = max_rows.
/// Computed through the power-sum basis with exact rational intermediates.
SchurExpansion adams2(const Partition& lambda, int max_rows);

/// (s_λ·s_λ + adams2(λ))/2; throws std::logic_error if any coefficient
/// fails to halve to a nonnegative integer.
SchurExpansion sym_square(const Partition& lambda, int max_rows);

/// (s_λ·s_λ - adams2(λ))/2, the exterior-square complement of sym_square.
SchurExpansion alt_square(const Partition& lambda, int max_rows);

}  // namespace grassmoduli
