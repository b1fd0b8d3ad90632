#include "grassmoduli/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace grassmoduli::oracle {

MonomialPoly::MonomialPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("MonomialPoly: negative nvars");
}

void MonomialPoly::add(const std::vector<int>& exponents,
                       const BigInt& coeff) {
  if (exponents.size() != static_cast<std::size_t>(nvars_))
    throw std::invalid_argument("MonomialPoly::add: exponent arity mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  if (terms_.size() > max_cells())
    throw std::runtime_error(
        "oracle expansion exceeds GRASSMODULI_MAX_CELLS (" +
        std::to_string(max_cells()) + " terms)");
}

BigInt MonomialPoly::coeff(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

MonomialPoly MonomialPoly::operator*(const MonomialPoly& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("MonomialPoly: arity mismatch in product");
  MonomialPoly out(nvars_);
  std::vector<int> exps(static_cast<std::size_t>(nvars_), 0);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (int v = 0; v < nvars_; ++v)
        exps[static_cast<std::size_t>(v)] =
            ea[static_cast<std::size_t>(v)] + eb[static_cast<std::size_t>(v)];
      out.add(exps, ca * cb);
    }
  }
  return out;
}

MonomialPoly& MonomialPoly::operator-=(const MonomialPoly& other) {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("MonomialPoly: arity mismatch in subtraction");
  for (const auto& [e, c] : other.terms_) add(e, -c);
  return *this;
}

BigInt MonomialPoly::eval_ones() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::size_t max_cells() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("GRASSMODULI_MAX_CELLS")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && parsed > 0)
        return static_cast<std::size_t>(parsed);
    }
    return static_cast<std::size_t>(5'000'000);
  }();
  return cap;
}

MonomialPoly schur_poly(const Partition& lambda, int nvars) {
  MonomialPoly out(nvars);
  if (lambda.length() > static_cast<std::size_t>(nvars)) return out;
  if (lambda.empty()) {
    out.add(std::vector<int>(static_cast<std::size_t>(nvars), 0), 1);
    return out;
  }

  // Cell-by-cell backtracking over fillings: weakly increasing along rows,
  // strictly increasing down columns, entries in {1..nvars}.
  const auto& rows = lambda.parts();
  std::vector<std::vector<int>> fill(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    fill[r].assign(static_cast<std::size_t>(rows[r]), 0);
  std::vector<int> content(static_cast<std::size_t>(nvars), 0);

  std::function<void(std::size_t, std::size_t)> place =
      [&](std::size_t r, std::size_t c) {
        if (r == rows.size()) {
          out.add(content, 1);
          return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc == fill[r].size()) {
          ++nr;
          nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);
        if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);
        for (int e = lo; e <= nvars; ++e) {
          fill[r][c] = e;
          ++content[static_cast<std::size_t>(e - 1)];
          place(nr, nc);
          --content[static_cast<std::size_t>(e - 1)];
        }
        fill[r][c] = 0;
      };
  place(0, 0);
  return out;
}

MonomialPoly square_vars(const MonomialPoly& poly) {
  MonomialPoly out(poly.nvars());
  std::vector<int> doubled;
  for (const auto& [e, c] : poly.terms()) {
    doubled = e;
    for (int& x : doubled) x *= 2;
    out.add(doubled, c);
  }
  return out;
}

namespace {

// A polynomial is symmetric iff every orbit of exponent vectors under
// permutation carries one coefficient: check each term against its
// sorted-descending representative and count the orbit's size.
void check_symmetric(const MonomialPoly& poly) {
  std::map<std::vector<int>, std::pair<BigInt, std::size_t>> orbits;
  for (const auto& [e, c] : poly.terms()) {
    std::vector<int> key = e;
    std::sort(key.begin(), key.end(), std::greater<int>{});
    auto [it, inserted] = orbits.try_emplace(key, std::make_pair(c, 1u));
    if (!inserted) {
      if (it->second.first != c)
        throw std::invalid_argument(
            "to_schur_basis: input is not symmetric (coefficient mismatch)");
      ++it->second.second;
    }
  }
  for (const auto& [key, info] : orbits) {
    // Orbit size is the multinomial over exponent multiplicities.
    BigInt expected = 1;
    std::size_t n = key.size();
    for (std::size_t i = 2; i <= n; ++i) expected *= i;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i < n && key[i] == key[i - 1]) {
        ++run;
      } else {
        BigInt fact = 1;
        for (std::size_t j = 2; j <= run; ++j) fact *= j;
        expected = exact_div(expected, fact);
        run = 1;
      }
    }
    if (expected != info.second)
      throw std::invalid_argument(
          "to_schur_basis: input is not symmetric (incomplete orbit)");
  }
}

}  // namespace

SchurExpansion to_schur_basis(const MonomialPoly& poly) {
  check_symmetric(poly);
  MonomialPoly rest = poly;
  SchurExpansion out;
  while (!rest.is_zero()) {
    const auto& [lead, coeff] = *rest.terms().begin();
    for (std::size_t i = 0; i + 1 < lead.size(); ++i)
      if (lead[i] < lead[i + 1])
        throw std::invalid_argument(
            "to_schur_basis: leading exponent is not a partition");
    Partition shape{std::vector<int>(lead.begin(), lead.end())};
    BigInt c = coeff;
    MonomialPoly basis = schur_poly(shape, poly.nvars());
    for (const auto& [e, bc] : basis.terms()) rest.add(e, -c * bc);
    out.add(shape, c);
  }
  return out;
}

CenterWeight lowest_weight_pairing(const Partition& lambda, int p, int q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("lowest_weight_pairing: requires p, q >= 1");
  int n = p + q;
  if (lambda.length() > static_cast<std::size_t>(n))
    throw std::invalid_argument(
        "lowest_weight_pairing: partition has more than p+q parts");
  // λ̌ = reversed zero-padded λ; pair against diag(1/p,...,1/p,-1/q,...,-1/q).
  long long first_block = 0, last_block = 0;
  for (int a = 1; a <= n; ++a) {
    int entry = lambda.part(static_cast<std::size_t>(n - a));
    if (a <= p)
      first_block += entry;
    else
      last_block += entry;
  }
  BigRational value =
      BigRational(first_block, p) - BigRational(last_block, q);
  return CenterWeight(value, p, q);
}

}  // namespace grassmoduli::oracle
