#include "gjms/rational.hpp"

#include <stdexcept>

namespace gjms {

ExactRational makeRational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  ExactRational r(num);
  r /= ExactRational(den);
  return r;
}

double toDouble(const ExactRational& q) { return q.convert_to<double>(); }

std::string toString(const ExactRational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace gjms
