#pragma once

#include "gjms/rational.hpp"

#include <vector>

namespace gjms {

// Gamma(n/2 + m) / Gamma(n/2 - m) for odd n: a finite product of half-integers,
// hence exactly rational. Negative when n = 2m - 1.
ExactRational gammaHalfRatio(int n, int m);

// Q-curvature of the round n-sphere for the order-2m operator:
// (2/(n-2m)) * Gamma(n/2+m)/Gamma(n/2-m). Requires n odd >= 3 and 2m > n.
ExactRational qCurvature(int n, int m);

// Eigenvalue of the order-2m operator on degree-ell spherical harmonics:
// prod_{i=0}^{m-1} [ ell(ell+n-1) - (i + n/2)(i - n/2 + 1) ], exact.
ExactRational gjmsEigenvalue(int n, int m, int ell);

// Coefficients of the expanded operator in powers of the positive Laplacian,
// ascending: index k holds the (-Lap)^k coefficient; leading coefficient 1.
std::vector<ExactRational> expandGjmsPolynomial(int n, int m);

// c_alpha = alpha(2m-n)/2 - (2m+n)/2; zero exactly at the critical exponent.
double cAlpha(int n, int m, double alpha);

// Sharp constant of the quotient inequality, n = 2m-1 only:
// [Gamma(n/2+m)/Gamma(n/2-m)] * |S^n|^{(alpha+1)/(alpha-1)}. alpha = 1 rejected.
double sharpConstant(int n, int m, double alpha);

// Surface area 2 pi^{(n+1)/2} / Gamma((n+1)/2), n >= 1.
double sphereSurfaceArea(int n);

}  // namespace gjms
