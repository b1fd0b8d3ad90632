#pragma once

#include <map>
#include <vector>

#include "grassmoduli/center_weight.hpp"
#include "grassmoduli/partition.hpp"
#include "grassmoduli/schur.hpp"

namespace grassmoduli::oracle {

/// Exponent vectors compared lex-greatest first, so the leading monomial of
/// a symmetric polynomial sits at begin().
struct ExponentGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    return a > b;
  }
};

/// Explicit multivariate polynomial with exact integer coefficients. The
/// brute-force carrier of this layer: everything here is monomial-by-monomial
/// and shares no algorithm with the Littlewood–Richardson or power-sum paths.
class MonomialPoly {
 public:
  using TermMap = std::map<std::vector<int>, BigInt, ExponentGreater>;

  explicit MonomialPoly(int nvars);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const std::vector<int>& exponents, const BigInt& coeff);
  BigInt coeff(const std::vector<int>& exponents) const;

  MonomialPoly operator*(const MonomialPoly& other) const;
  MonomialPoly& operator-=(const MonomialPoly& other);

  /// Value at x_1 = ... = x_n = 1, i.e. the coefficient sum.
  BigInt eval_ones() const;

  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;

 private:
  int nvars_;
  TermMap terms_;
};

/// Term-count cap for oracle expansions, from GRASSMODULI_MAX_CELLS
/// (default 5'000'000). Exceeding it throws std::runtime_error.
std::size_t max_cells();

/// s_λ(x_1,...,x_n) as the generating function of semistandard tableaux of
/// shape λ with entries in {1..nvars}; the zero polynomial when λ has more
/// than nvars rows.
MonomialPoly schur_poly(const Partition& lambda, int nvars);

/// Substitutes x_i -> x_i² by doubling every exponent vector.
MonomialPoly square_vars(const MonomialPoly& poly);

/// Re-expands a symmetric polynomial in the Schur basis by greedy
/// leading-monomial subtraction; throws std::invalid_argument when the input
/// is not symmetric.
SchurExpansion to_schur_basis(const MonomialPoly& poly);

/// Direct center-weight route: pad λ to p+q entries, reverse, and pair with
/// Y = diag(1/p,...,1/p, -1/q,...,-1/q).
CenterWeight lowest_weight_pairing(const Partition& lambda, int p, int q);

}  // namespace grassmoduli::oracle
