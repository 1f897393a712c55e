#pragma once

#include "gjms/params.hpp"
#include "gjms/quadrature.hpp"
#include "gjms/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gjms {

// Axially symmetric function on S^n, stored as coefficients a_0..a_L against
// the Gegenbauer basis C_ell^{(n-1)/2}(t), t = cosine of the polar angle.
// The grid-value cache is refreshed lazily per node count; when present it is
// the exact synthesis of the coefficients at the rule's nodes.
struct ZonalFunction {
  int n = 3;
  std::vector<double> a;

  int degree() const { return int(a.size()) - 1; }
  const std::vector<double>& values(const QuadratureRule& rule) const;

  mutable std::vector<double> cache;
  mutable int cacheN = 0;
};

// Basis evaluation by the stable three-term recurrence.
double gegenbauerValue(int n, int ell, double t);
void gegenbauerColumn(int n, int L, double t, std::vector<double>& out);

// Pointwise synthesis at an arbitrary t in [-1, 1].
double synthesizeAt(const ZonalFunction& f, double t);

// Weighted basis norm: int C_ell^2 (1-t^2)^{(n-2)/2} dt = pi * (rational part)
// for odd n; the sphere norm multiplies |S^{n-1}| on top.
ExactRational gegenbauerNormRationalPart(int n, int ell);
double gegenbauerWeightedNorm(int n, int ell);
double zonalBasisNormSq(int n, int ell);

std::vector<double> synthesize(const ZonalFunction& f, const QuadratureRule& rule);

// Coefficients by weighted projection; requires L <= N-1, warns near the cap.
ZonalFunction analyze(const std::vector<double>& values, const QuadratureRule& rule, int L,
                      bool quiet = false);

// Diagonal action: a_ell -> e_ell(n, m) a_ell.
ZonalFunction applyGjms(const ZonalFunction& f, int m);

// Spectral quadratic form sum e_ell ||b_ell||^2 a_ell^2.
double energy(const ZonalFunction& f, int m);

// Integral of f^p over S^n; p < 0 demands grid positivity.
double lebesgueIntegral(const ZonalFunction& f, double p, const QuadratureRule& rule);
double lebesgueIntegralValues(const std::vector<double>& values, double p,
                              const QuadratureRule& rule, int n);

// (int f^{1-alpha})^{2/(alpha-1)} * int [f Pf - eps * e_0 * f^2]; scale-free.
double sobolevQuotient(const ZonalFunction& f, const ProblemParams& params,
                       const QuadratureRule& rule);

// exp(-2 avg log f) * avg(f Pf), the alpha -> 1 limit functional.
double logSobolevQuotient(const ZonalFunction& f, int m, const QuadratureRule& rule);

// 1 + scaled random combination of degrees 1..L; min grid value >= 1 - amplitude.
ZonalFunction randomPositiveZonal(int n, std::uint64_t seed, int L, double amplitude,
                                  const QuadratureRule& rule);

// t -> -t, i.e. a_ell -> (-1)^ell a_ell.
ZonalFunction antipodalReflect(const ZonalFunction& f);

// CSV dump: header t,theta,value; one row per node; 17 significant digits.
std::string zonalCsv(const ZonalFunction& f, const QuadratureRule& rule);

}  // namespace gjms
