#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace grassmoduli {

// Dimensions and multiplicities overflow 64 bits already at moderate
// parameters, so every count in the library is an exact big integer.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial(long long n, long long r);

// Quotient that must be exact; throws std::logic_error on a remainder.
BigInt exact_div(const BigInt& num, const BigInt& den);

}  // namespace grassmoduli
