#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "grassmoduli/numeric.hpp"

namespace grassmoduli {

/// Integer partition λ = (λ_1 ≥ λ_2 ≥ ... ≥ λ_ℓ > 0), the highest weight of
/// an irreducible GL(n) representation. Trailing zeros are trimmed on
/// construction; the empty partition is the trivial representation.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Rectangle with `rows` rows of length `width`, e.g. kϖ_q as q rows of k.
  static Partition rectangle(int rows, int width);

  /// Parses "2,1,1"; "" and "0" both denote the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Part at 0-based row index; zero beyond the last nonzero part.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Number of boxes |λ|.
  long long sum() const;

  Partition conjugate() const;

  /// True when `inner` fits inside this shape row by row.
  bool contains(const Partition& inner) const;

  /// "2,1,1"; the empty partition renders as "0".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

  /// Lexicographic comparison with implicit zero padding, so e.g.
  /// (2,2) > (2,1,1) > (1,1,1,1).
  std::strong_ordering operator<=>(const Partition& other) const;

 private:
  std::vector<int> parts_;
};

/// Orders partitions by decreasing lexicographic order (largest first); the
/// canonical term order of Schur expansions.
struct DecreasingLex {
  bool operator()(const Partition& a, const Partition& b) const {
    return a > b;
  }
};

/// Coefficients (k_1,...,k_{n-1}) of the SU(n) dominant weight Σ k_i ϖ_i.
struct FundamentalCoeffs {
  int n = 2;
  std::vector<int> coeffs;  // size n-1, all entries >= 0

  FundamentalCoeffs() = default;
  FundamentalCoeffs(int rank, std::vector<int> ks);

  int coeff(int i) const;  // 1-based, k_i
  std::string to_string() const;

  friend bool operator==(const FundamentalCoeffs&,
                         const FundamentalCoeffs&) = default;
};

/// F(Σ k_i ϖ_i) as the GL highest weight (Σ_{i≥1} k_i, Σ_{i≥2} k_i, ..., k_{n-1}, 0).
Partition fund_to_partition(const FundamentalCoeffs& c);

/// Inverse conversion: normalizes so the last weight entry becomes zero, then
/// takes successive differences. Throws if λ has more than n parts.
FundamentalCoeffs partition_to_fund(const Partition& lambda, int n);

/// dim V(λ) for GL(n) by the hook-content product
/// ∏_{(i,j)} (n + j - i) / hook(i,j); exact.
BigInt dim_gl(const Partition& lambda, int n);

/// Rectangle dimension d_a(bϖ_c) = ∏_{i=1}^{c} ∏_{j=1}^{b} (a-i+j)/(1+(c-i)+(b-j)).
BigInt dim_rect(int a, int b, int c);

/// All partitions with at most `max_boxes` boxes, `max_rows` rows and parts
/// bounded by `max_part` (unbounded when negative), in decreasing lex order.
std::vector<Partition> partitions_up_to(int max_boxes, int max_rows,
                                        int max_part = -1);

}  // namespace grassmoduli
