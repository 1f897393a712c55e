#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gjms {

// Arbitrary-precision rational; the backend keeps values in lowest terms with
// a positive denominator, which is exactly the invariant required here.
using ExactRational = boost::multiprecision::cpp_rational;

ExactRational makeRational(long long num, long long den);

double toDouble(const ExactRational& q);

// "p/q", or just "p" when the denominator is 1.
std::string toString(const ExactRational& q);

}  // namespace gjms
