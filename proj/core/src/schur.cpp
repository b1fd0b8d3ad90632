#include "grassmoduli/schur.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grassmoduli/lr.hpp"

namespace grassmoduli {

SchurExpansion SchurExpansion::unit() {
  SchurExpansion e;
  e.add(Partition{}, 1);
  return e;
}

void SchurExpansion::add(const Partition& lambda, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt SchurExpansion::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SchurExpansion::truncate_rows(int max_rows) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.length() > static_cast<std::size_t>(max_rows))
      it = terms_.erase(it);
    else
      ++it;
  }
}

BigInt SchurExpansion::dimension(int n) const {
  BigInt total = 0;
  for (const auto& [lambda, c] : terms_) total += c * dim_gl(lambda, n);
  return total;
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& other) {
  for (const auto& [lambda, c] : other.terms_) add(lambda, c);
  return *this;
}

std::string SchurExpansion::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : terms_) {
    if (!out.empty()) out += ' ';
    out += c.str();
    out += "\xC2\xB7[";  // '·'
    out += lambda.to_string();
    out += ']';
  }
  return out;
}

SchurExpansion multiply(const SchurExpansion& a, const SchurExpansion& b,
                        int max_rows) {
  if (max_rows < 1) throw std::invalid_argument("multiply: max_rows >= 1");
  SchurExpansion out;
  for (const auto& [lambda, ca] : a.terms()) {
    for (const auto& [mu, cb] : b.terms()) {
      SchurExpansion prod = lr_product(lambda, mu, max_rows);
      BigInt scale = ca * cb;
      for (const auto& [nu, c] : prod.terms()) out.add(nu, scale * c);
    }
  }
  return out;
}

namespace {

// Ribbon (border strip) arithmetic through beta numbers: for a partition
// padded to L rows, β_i = μ_i + (L - i) is a strictly decreasing sequence;
// adding an s-ribbon moves one β up by s, and the sign is (-1)^(#β crossed).

std::vector<long long> beta_numbers(const Partition& mu, std::size_t nrows) {
  std::vector<long long> beta(nrows);
  for (std::size_t i = 0; i < nrows; ++i)
    beta[i] = mu.part(i) + static_cast<long long>(nrows - 1 - i);
  return beta;
}

Partition from_beta(std::vector<long long> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<long long>{});
  std::vector<int> parts(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i)
    parts[i] = static_cast<int>(beta[i] -
                                static_cast<long long>(beta.size() - 1 - i));
  return Partition(std::move(parts));
}

std::vector<std::pair<Partition, int>> add_ribbons(const Partition& mu, int s) {
  std::vector<std::pair<Partition, int>> out;
  std::size_t nrows = mu.length() + static_cast<std::size_t>(s);
  std::vector<long long> beta = beta_numbers(mu, nrows);
  for (std::size_t i = 0; i < beta.size(); ++i) {
    long long target = beta[i] + s;
    bool occupied = false;
    int crossed = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (beta[j] == target) occupied = true;
      if (beta[j] > beta[i] && beta[j] < target) ++crossed;
    }
    if (occupied) continue;
    std::vector<long long> next = beta;
    next[i] = target;
    out.emplace_back(from_beta(std::move(next)), crossed % 2 == 0 ? 1 : -1);
  }
  return out;
}

std::vector<std::pair<Partition, int>> remove_ribbons(const Partition& lambda,
                                                      int s) {
  std::vector<std::pair<Partition, int>> out;
  std::size_t nrows = lambda.length();
  if (nrows == 0) return out;
  std::vector<long long> beta = beta_numbers(lambda, nrows);
  for (std::size_t i = 0; i < beta.size(); ++i) {
    long long target = beta[i] - s;
    if (target < 0) continue;
    bool occupied = false;
    int crossed = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++crossed;
    }
    if (occupied) continue;
    std::vector<long long> next = beta;
    next[i] = target;
    out.emplace_back(from_beta(std::move(next)), crossed % 2 == 0 ? 1 : -1);
  }
  return out;
}

// Murnaghan-Nakayama: χ^λ_ρ = Σ_ξ sign(ξ)·χ^{λ∖ξ}_{ρ minus its first part},
// over removable ρ_1-ribbons ξ. Memoized per (shape, remaining class).
BigInt mn_character(const Partition& lambda, const std::vector<int>& rho,
                    std::size_t idx,
                    std::map<std::pair<std::vector<int>, std::size_t>, BigInt>&
                        memo) {
  if (idx == rho.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda.parts(), idx);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt total = 0;
  for (const auto& [shape, sign] :
       remove_ribbons(lambda, rho[idx]))
    total += sign * mn_character(shape, rho, idx + 1, memo);
  memo.emplace(std::move(key), total);
  return total;
}

BigInt centralizer_order(const std::vector<int>& rho) {
  BigInt z = 1;
  std::map<int, int> mult;
  for (int part : rho) ++mult[part];
  for (const auto& [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

void exact_partitions_of(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> current;
  std::function<void(int, int)> build = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
      current.push_back(next);
      build(remaining - next, next);
      current.pop_back();
    }
  };
  build(n, n);
}

// Schur expansion of the power-sum product p_{s_1}·p_{s_2}·… by iterated
// ribbon addition. Shapes that outgrow max_rows are dropped early; ribbon
// addition never shortens a shape, so the pruning is exact for GL(max_rows).
std::map<Partition, BigInt, DecreasingLex> power_product_schur(
    const std::vector<int>& parts, int max_rows) {
  std::map<Partition, BigInt, DecreasingLex> acc;
  acc[Partition{}] = 1;
  for (int s : parts) {
    std::map<Partition, BigInt, DecreasingLex> next;
    for (const auto& [mu, c] : acc) {
      for (const auto& [nu, sign] : add_ribbons(mu, s)) {
        if (nu.length() > static_cast<std::size_t>(max_rows)) continue;
        BigInt& slot = next[nu];
        slot += sign > 0 ? c : -c;
        if (slot == 0) next.erase(nu);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

SchurExpansion adams2(const Partition& lambda, int max_rows) {
  if (max_rows < 1) throw std::invalid_argument("adams2: max_rows >= 1");
  if (lambda.length() > static_cast<std::size_t>(max_rows))
    throw std::invalid_argument("adams2: partition has more than max_rows rows");
  int n = static_cast<int>(lambda.sum());

  // s_λ = Σ_ρ (χ^λ_ρ / z_ρ) p_ρ, hence s_λ(x²) = Σ_ρ (χ^λ_ρ / z_ρ) p_{2ρ}.
  std::vector<std::vector<int>> classes;
  exact_partitions_of(n, classes);
  std::map<Partition, BigRational, DecreasingLex> acc;
  for (const auto& rho : classes) {
    std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo;
    BigInt chi = mn_character(lambda, rho, 0, memo);
    if (chi == 0) continue;
    BigRational weight(chi, centralizer_order(rho));
    std::vector<int> doubled = rho;
    for (int& part : doubled) part *= 2;
    for (const auto& [mu, c] : power_product_schur(doubled, max_rows)) {
      BigRational& slot = acc[mu];
      slot += weight * c;
      if (slot == 0) acc.erase(mu);
    }
  }

  SchurExpansion out;
  for (const auto& [mu, value] : acc) {
    if (boost::multiprecision::denominator(value) != 1)
      throw std::logic_error("adams2: non-integral coefficient");
    out.add(mu, boost::multiprecision::numerator(value));
  }
  return out;
}

namespace {

SchurExpansion half_square(const Partition& lambda, int max_rows, int sign,
                           const char* name) {
  SchurExpansion square = lr_product(lambda, lambda, max_rows);
  SchurExpansion twisted = adams2(lambda, max_rows);
  SchurExpansion combined = square;
  for (const auto& [mu, c] : twisted.terms())
    combined.add(mu, sign > 0 ? c : -c);
  SchurExpansion out;
  for (const auto& [mu, c] : combined.terms()) {
    if (c % 2 != 0 || c < 0)
      throw std::logic_error(std::string(name) +
                             ": coefficient fails to halve to a nonnegative "
                             "integer (inconsistent adams2)");
    out.add(mu, c / 2);
  }
  return out;
}

}  // namespace

SchurExpansion sym_square(const Partition& lambda, int max_rows) {
  return half_square(lambda, max_rows, +1, "sym_square");
}

SchurExpansion alt_square(const Partition& lambda, int max_rows) {
  return half_square(lambda, max_rows, -1, "alt_square");
}

}  // namespace grassmoduli
