#include "grassmoduli/center_weight.hpp"

#include <stdexcept>

namespace grassmoduli {

CenterWeight::CenterWeight(BigRational value, int p, int q)
    : value_(std::move(value)), pq_(static_cast<long long>(p) * q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("CenterWeight: requires p, q >= 1");
  BigRational scaled = value_ * pq_;
  if (boost::multiprecision::denominator(scaled) != 1)
    throw std::logic_error("CenterWeight: value is not an integer over pq");
  canonical_num_ = boost::multiprecision::numerator(scaled);
}

CenterWeight CenterWeight::from_pq_numerator(BigInt num, int p, int q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("CenterWeight: requires p, q >= 1");
  return CenterWeight(
      BigRational(std::move(num), BigInt(static_cast<long long>(p) * q)), p, q);
}

std::string CenterWeight::to_string() const {
  BigInt num = numerator();
  BigInt den = denominator();
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace grassmoduli
