#include "gjms/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gjms {

namespace {

void requireValid(int n, int m) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("n must be an odd integer >= 3, got " + std::to_string(n));
  if (2 * m <= n)
    throw std::invalid_argument("need 2m > n, got m = " + std::to_string(m) +
                                " with n = " + std::to_string(n));
}

}  // namespace

ExactRational gammaHalfRatio(int n, int m) {
  requireValid(n, m);
  // Gamma(x + 2m)/Gamma(x) at x = n/2 - m telescopes to prod_{j=0}^{2m-1} (x + j),
  // and each factor is the half-integer (n - 2m + 2j)/2.
  ExactRational ratio = 1;
  for (int j = 0; j < 2 * m; ++j) ratio *= makeRational(n - 2 * m + 2 * j, 2);
  return ratio;
}

ExactRational qCurvature(int n, int m) {
  requireValid(n, m);
  return makeRational(2, n - 2 * m) * gammaHalfRatio(n, m);
}

ExactRational gjmsEigenvalue(int n, int m, int ell) {
  requireValid(n, m);
  if (ell < 0) throw std::invalid_argument("ell must be >= 0");
  const long long lam = 1LL * ell * (ell + n - 1);
  ExactRational value = 1;
  for (int i = 0; i < m; ++i) {
    // (i + n/2)(i - n/2 + 1) = (2i + n)(2i - n + 2)/4.
    const long long shift = 1LL * (2 * i + n) * (2 * i - n + 2);
    value *= makeRational(4 * lam - shift, 4);
  }
  return value;
}

std::vector<ExactRational> expandGjmsPolynomial(int n, int m) {
  requireValid(n, m);
  // Multiply out prod_i (X - s_i) with X the positive Laplacian and
  // s_i = (2i+n)(2i-n+2)/4. Coefficients ascend in powers of X.
  std::vector<ExactRational> coeff{ExactRational(1)};
  for (int i = 0; i < m; ++i) {
    const ExactRational s = makeRational(1LL * (2 * i + n) * (2 * i - n + 2), 4);
    std::vector<ExactRational> next(coeff.size() + 1, ExactRational(0));
    for (std::size_t k = 0; k < coeff.size(); ++k) {
      next[k + 1] += coeff[k];
      next[k] -= s * coeff[k];
    }
    coeff = std::move(next);
  }
  return coeff;
}

double cAlpha(int n, int m, double alpha) {
  requireValid(n, m);
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  return alpha * (2.0 * m - n) / 2.0 - (2.0 * m + n) / 2.0;
}

double sharpConstant(int n, int m, double alpha) {
  requireValid(n, m);
  if (n != 2 * m - 1)
    throw std::invalid_argument("sharp constant defined for n = 2m - 1 only");
  if (alpha == 1.0)
    throw std::invalid_argument("alpha = 1 undefined here; the log quotient covers the limit");
  if (!(alpha > 0.0 && alpha <= 2.0 * n + 1.0))
    throw std::invalid_argument("alpha must lie in (0,1) or (1, 2n+1]");
  const double expo = (alpha + 1.0) / (alpha - 1.0);
  return toDouble(gammaHalfRatio(n, m)) * std::pow(sphereSurfaceArea(n), expo);
}

double sphereSurfaceArea(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const double pi = std::numbers::pi;
  return 2.0 * std::pow(pi, (n + 1) / 2.0) / std::tgamma((n + 1) / 2.0);
}

}  // namespace gjms
