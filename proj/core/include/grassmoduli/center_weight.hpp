#pragma once

#include <compare>
#include <string>

#include "grassmoduli/numeric.hpp"

namespace grassmoduli {

/// Exact rational weight by which the U(1) center of S(U(p)×U(q)) scales a
/// lowest-weight vector. Stored reduced, alongside the canonical numerator
/// over the common denominator pq (every such weight is an integer over pq).
class CenterWeight {
 public:
  CenterWeight() = default;
  CenterWeight(BigRational value, int p, int q);

  /// Builds the weight num/(pq) directly from its canonical numerator.
  static CenterWeight from_pq_numerator(BigInt num, int p, int q);

  const BigRational& value() const { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  const BigInt& canonical_numerator() const { return canonical_num_; }
  long long canonical_denominator() const { return pq_; }

  /// Reduced fraction, e.g. "-7/6"; integers render without the "/1".
  std::string to_string() const;

  friend bool operator==(const CenterWeight& a, const CenterWeight& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<=(const CenterWeight& a, const CenterWeight& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator<(const CenterWeight& a, const CenterWeight& b) {
    return a.value_ < b.value_;
  }

 private:
  BigRational value_;
  BigInt canonical_num_ = 0;
  long long pq_ = 1;
};

}  // namespace grassmoduli
