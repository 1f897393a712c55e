#pragma once

#include "gjms/params.hpp"
#include "gjms/quadrature.hpp"
#include "gjms/zonal.hpp"

#include <string>
#include <vector>

namespace gjms {

// Radial function on the plane, sampled on strictly increasing radii.
// Beyond the last node the function is described by u(r) ~ tailA * r^{2m-n}.
struct RadialProfile {
  int n = 3;
  int m = 2;
  std::vector<double> r;
  std::vector<double> u;
  double tailA = 0.0;

  int size() const { return static_cast<int>(r.size()); }
};

// tan(theta/2) image of a sphere quadrature rule. Index i walks outward from
// the origin; sphereIndex(i) is the matching sphere node (t descending along
// the ray, so the map is a reversal). Radii come in exact reciprocal pairs:
// r[i] * r[N-1-i] == 1, which turns the Kelvin transform into an index swap.
// W[i] is the full R^n measure weight at node i (angular factor included),
// so sum W[i] g(r[i]) integrates radial g over R^n.
struct PlaneGrid {
  int n = 3;
  QuadratureRule rule;
  std::vector<double> r;
  std::vector<double> f;  // conformal factor 2/(1+r^2), equal to 1 + t at the node
  std::vector<double> W;

  int size() const { return static_cast<int>(r.size()); }
  int sphereIndex(int i) const { return rule.N - 1 - i; }
};

PlaneGrid planeGridFromRule(const QuadratureRule& rule);
PlaneGrid buildPlaneGrid(int n, int N);

// f(x) = 2/(1+|x|^2).
double conformalFactor(double xNorm);

// u(x) = f(x)^{(n-2m)/2} v at the matching sphere point. The zonal axis is
// oriented so t = +1 lands at the origin of the plane; the projection pole
// t = -1 is the point at infinity, so the tail reads off v(-1).
RadialProfile pullbackToPlane(const ZonalFunction& v, const PlaneGrid& grid, int m);

// Inverse of pullbackToPlane on the grid the profile came from.
ZonalFunction pushforwardToSphere(const RadialProfile& u, const PlaneGrid& grid, int L = -1);

// (Ku)(x) = |x|^{2m-n} u(x/|x|^2) on the reciprocal grid, which is the same
// grid reversed. The output tail coefficient is refitted from the output
// values; it reflects the input behavior at r -> 0+.
RadialProfile kelvin(const RadialProfile& u);

// F(x) = eps f^{2m} u + f^{(n+2m)/2 + alpha(n-2m)/2} u^{-alpha}, evaluated on
// the profile's own radii. Throws std::domain_error if u is not positive.
std::vector<double> evalF(const RadialProfile& u, const ProblemParams& params);

// Fitted log-log slope of (1 + r^{2m-n}) |F| over the outer tail of the grid.
// Admissible sources decay like r^{-2n}, so the slope should sit near -2n.
double decaySlope(const std::vector<double>& F, const RadialProfile& u);
double decaySlope(const std::vector<double>& F, const PlaneGrid& grid, int m);

// Conformal dilation family: pulls v back to the plane, rescales x -> delta x
// with the conformal weight matching order m, and pushes forward again.
// delta = 1 is the identity; as delta -> 0 the family concentrates at t = 1
// and its sup grows like delta^{-(2m-n)/2}. Warns on stderr when delta < 0.05
// (the bump is then narrower than typical grid resolution).
ZonalFunction dilate(const ZonalFunction& v, double delta, int m,
                     const QuadratureRule& rule, int L = -1);

// gamma solving 2^{(n-2m)/2} = gamma * int |y|^{2m-n} f(y)^{(n+2m)/2} dy,
// by quadrature at the given resolution, refined by doubling until two
// consecutive values agree to 5e-11 relative. Throws ComputationError if the
// refinement loop fails to settle by N = 4096.
double computeGamma(int n, int m, int resolution);

// Beta-integral evaluation of the same identity: 2^{1-2m} / (|S^{n-1}| B(m, n/2)).
double gammaClosedForm(int n, int m);

// Constant of the fundamental-solution normalization, gamma / ((n-2m)/2 * Q).
// Reported for information only; nothing downstream consumes it.
double infoFundamentalConstant(int n, int m, double gammaValue);

// Off-grid evaluation of a profile that lives on a plane grid: the sphere
// image is held spectrally, so u(s) = f(s)^{(n-2m)/2} v(t(s)) works at any
// radius, including far beyond the last node.
struct RadialEvaluator {
  int n = 3;
  int m = 2;
  ZonalFunction v;

  double operator()(double s) const;
};

RadialEvaluator makeRadialEvaluator(const RadialProfile& u, const PlaneGrid& grid);

// Least-squares fit of A over the last 10% of nodes against A r^{2m-n}.
double fitTailCoefficient(const RadialProfile& u);

// Relative mismatch at the last node between the recorded tail coefficient
// and the value actually stored there. The profile contract keeps this
// within 10%; callers decide whether to warn or fail.
double tailMismatch(const RadialProfile& u);

// Header "r,value", one row per node, and a trailing comment row with the
// fitted tail coefficient.
std::string radialCsv(const RadialProfile& u);

}  // namespace gjms
