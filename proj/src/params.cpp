#include "gjms/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gjms {

namespace {

void requireShape(int n, int m) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("n must be an odd integer >= 3, got " + std::to_string(n));
  if (2 * m <= n)
    throw std::invalid_argument("need 2m > n, got m = " + std::to_string(m) +
                                " with n = " + std::to_string(n));
}

}  // namespace

ProblemParams ProblemParams::checked(int n, int m, double alpha, double eps) {
  ProblemParams p{n, m, alpha, eps};
  p.validate();
  return p;
}

ProblemParams ProblemParams::unchecked(int n, int m, double alpha, double eps) {
  requireShape(n, m);
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (!(eps >= 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in [0, 1)");
  return ProblemParams{n, m, alpha, eps};
}

bool ProblemParams::isCritical(double tol) const {
  return std::abs(alpha - criticalAlpha()) <= tol * criticalAlpha();
}

void ProblemParams::validate() const {
  requireShape(n, m);
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (alpha > criticalAlpha() * (1.0 + 1e-12))
    throw std::invalid_argument("alpha exceeds the admissible ceiling (n+2m)/(2m-n) = " +
                                std::to_string(criticalAlpha()));
  if (!(eps >= 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in [0, 1)");
}

}  // namespace gjms
