#include "grassmoduli/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grassmoduli {

BigInt binomial(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt num = 1, den = 1;
  for (long long i = 0; i < r; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return exact_div(num, den);
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::logic_error("exact_div: zero denominator");
  BigInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw std::logic_error("exact_div: non-exact quotient");
  return quot;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      throw std::invalid_argument("Partition: negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("Partition: parts must weakly decrease");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::rectangle(int rows, int width) {
  if (rows < 0 || width < 0)
    throw std::invalid_argument("Partition::rectangle: negative size");
  if (rows == 0 || width == 0) return Partition{};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), width));
}

Partition Partition::parse(std::string_view text) {
  if (text.empty() || text == "0") return Partition{};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    if (tok.empty()) throw std::invalid_argument("Partition::parse: empty entry");
    int value = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("Partition::parse: invalid character");
      if (value > 100000000)
        throw std::invalid_argument("Partition::parse: entry too large");
      value = value * 10 + (ch - '0');
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

long long Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition{};
  std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
  for (int part : parts_)
    for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  std::size_t n = std::max(length(), other.length());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto cmp = part(i) <=> other.part(i); cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

FundamentalCoeffs::FundamentalCoeffs(int rank, std::vector<int> ks)
    : n(rank), coeffs(std::move(ks)) {
  if (n < 2) throw std::invalid_argument("FundamentalCoeffs: rank must be >= 2");
  if (coeffs.size() != static_cast<std::size_t>(n - 1))
    throw std::invalid_argument("FundamentalCoeffs: expected n-1 coefficients");
  for (int k : coeffs)
    if (k < 0)
      throw std::invalid_argument("FundamentalCoeffs: negative coefficient");
}

int FundamentalCoeffs::coeff(int i) const {
  if (i < 1 || i > n - 1)
    throw std::out_of_range("FundamentalCoeffs::coeff: index out of range");
  return coeffs[static_cast<std::size_t>(i - 1)];
}

std::string FundamentalCoeffs::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs[i]);
  }
  return out;
}

Partition fund_to_partition(const FundamentalCoeffs& c) {
  std::vector<int> parts(static_cast<std::size_t>(c.n - 1), 0);
  int suffix = 0;
  for (int i = c.n - 1; i >= 1; --i) {
    suffix += c.coeff(i);
    parts[static_cast<std::size_t>(i - 1)] = suffix;
  }
  return Partition(std::move(parts));
}

FundamentalCoeffs partition_to_fund(const Partition& lambda, int n) {
  if (n < 2) throw std::invalid_argument("partition_to_fund: rank must be >= 2");
  if (lambda.length() > static_cast<std::size_t>(n))
    throw std::invalid_argument("partition_to_fund: partition has more than n parts");
  // Subtracting λ_n from every entry leaves the successive differences alone.
  std::vector<int> ks(static_cast<std::size_t>(n - 1), 0);
  for (int i = 1; i <= n - 1; ++i)
    ks[static_cast<std::size_t>(i - 1)] =
        lambda.part(static_cast<std::size_t>(i - 1)) -
        lambda.part(static_cast<std::size_t>(i));
  return FundamentalCoeffs(n, std::move(ks));
}

BigInt dim_gl(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("dim_gl: rank must be >= 1");
  if (lambda.length() > static_cast<std::size_t>(n))
    throw std::invalid_argument("dim_gl: partition has more than n parts");
  Partition conj = lambda.conjugate();
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 1; j <= lambda.parts()[i]; ++j) {
      int row = static_cast<int>(i) + 1;
      num *= n + j - row;
      int hook = (lambda.parts()[i] - j) +
                 (conj.part(static_cast<std::size_t>(j - 1)) - row) + 1;
      den *= hook;
    }
  }
  return exact_div(num, den);
}

BigInt dim_rect(int a, int b, int c) {
  if (c < 1 || a < c || b < 0)
    throw std::invalid_argument("dim_rect: requires a >= c >= 1 and b >= 0");
  BigInt num = 1, den = 1;
  for (int i = 1; i <= c; ++i) {
    for (int j = 1; j <= b; ++j) {
      num *= a - i + j;
      den *= 1 + (c - i) + (b - j);
    }
  }
  return exact_div(num, den);
}

namespace {

void enumerate_partitions(int remaining, int max_part, int rows_left,
                          std::vector<int>& current,
                          std::vector<Partition>& out) {
  out.push_back(Partition(current));
  if (rows_left == 0) return;
  int cap = std::min(remaining, max_part);
  for (int next = cap; next >= 1; --next) {
    current.push_back(next);
    enumerate_partitions(remaining - next, next, rows_left - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_up_to(int max_boxes, int max_rows,
                                        int max_part) {
  if (max_boxes < 0 || max_rows < 0)
    throw std::invalid_argument("partitions_up_to: negative bound");
  if (max_part < 0) max_part = max_boxes;
  std::vector<Partition> out;
  std::vector<int> current;
  enumerate_partitions(max_boxes, max_part, max_rows, current, out);
  std::sort(out.begin(), out.end(), DecreasingLex{});
  return out;
}

}  // namespace grassmoduli
