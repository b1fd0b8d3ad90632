#pragma once

#include <string>
#include <vector>

#include "grassmoduli/partition.hpp"

namespace grassmoduli {

/// One irreducible summand of the square of the q-row, k-column rectangle
/// for SU(p+q), carried with both of its parameterizations: the enumeration
/// vector i = (i_1,...,i_q) with Σ i_α ≤ k, and its reversal j with
/// j_α = i_{q-α} (α = 0,...,q-1).
struct RectSquareComponent {
  int p = 0, q = 0, k = 0;
  std::vector<int> i;
  std::vector<int> j;
  Partition partition;
  FundamentalCoeffs fund;
};

/// Closed-form decomposition of the rectangle square: one multiplicity-one
/// component per vector (i_1,...,i_q) with Σ i_α ≤ k, highest weight
/// (2k-i_q, 2k-(i_q+i_{q-1}), ..., 2k-Σi_α, Σi_α, ..., i_{q-1}+i_q, i_q).
/// i-vectors are enumerated lexicographically. Requires p ≥ q ≥ 1, k ≥ 0.
std::vector<RectSquareComponent> rect_square_closed_form(int p, int q, int k);

/// Expected component count: binomial(k+q, q).
BigInt rect_square_component_count(int q, int k);

/// Outcome of checking one decomposition against direct LR-tableau
/// enumeration: every surviving filling must collapse onto the i-vector
/// parameterization (diagonal box-count families equal, diagonal counts
/// determined by the row-q family, nothing off-diagonal in the top rows).
struct LRWitnessReport {
  int p = 0, q = 0, k = 0;
  long long tableaux_checked = 0;
  long long component_count = 0;
  bool components_match_closed_form = false;
  std::vector<std::string> violations;

  bool collapse_holds() const {
    return violations.empty() && components_match_closed_form;
  }
};

/// Enumerates every LR tableau of the rectangle square directly and checks
/// the collapsed parameterization. Intended for small instances
/// (q ≤ 4, k ≤ 3); larger inputs are rejected.
LRWitnessReport verify_lr_rules_witness(int p, int q, int k);

}  // namespace grassmoduli
