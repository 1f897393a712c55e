#include "gjms/stereo.hpp"

#include "gjms/constants.hpp"
#include "gjms/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace gjms {

namespace {

void requireMatchingGrid(const RadialProfile& u, const PlaneGrid& grid) {
  if (u.n != grid.n) throw std::invalid_argument("profile/grid dimension mismatch");
  if (u.size() != grid.size()) throw std::invalid_argument("profile/grid size mismatch");
}

bool reciprocalSymmetric(const std::vector<double>& r) {
  const int N = static_cast<int>(r.size());
  for (int i = 0; i < N; ++i)
    if (std::abs(r[i] * r[N - 1 - i] - 1.0) > 1e-12) return false;
  return true;
}

// Slope of log g against log r by least squares over the given index range.
double logLogSlope(const std::vector<double>& r, const std::vector<double>& g, int lo,
                   int hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int i = lo; i < hi; ++i) {
    if (!(g[i] > 0.0)) continue;
    const double x = std::log(r[i]);
    const double y = std::log(g[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  if (cnt < 2) return -std::numeric_limits<double>::infinity();
  const double denom = cnt * sxx - sx * sx;
  return (cnt * sxy - sx * sy) / denom;
}

double decaySlopeOnRadii(const std::vector<double>& F, const std::vector<double>& r, int n,
                         int m) {
  const int N = static_cast<int>(r.size());
  if (static_cast<int>(F.size()) != N) throw std::invalid_argument("size mismatch");
  const int K = std::max(8, N / 10);
  std::vector<double> g(N, 0.0);
  for (int i = N - K; i < N; ++i)
    g[i] = (1.0 + std::pow(r[i], 2 * m - n)) * std::abs(F[i]);
  return logLogSlope(r, g, N - K, N);
}

}  // namespace

PlaneGrid planeGridFromRule(const QuadratureRule& rule) {
  PlaneGrid g;
  g.n = rule.n;
  g.rule = rule;
  const int N = rule.N;
  g.r.resize(N);
  g.f.resize(N);
  g.W.resize(N);
  const double surf = sphereSurfaceArea(rule.n - 1);
  for (int i = 0; i < N; ++i) {
    const int j = N - 1 - i;
    const double t = rule.t[j];
    g.f[i] = 1.0 + t;  // algebraically 2/(1+r^2) at this node
    g.W[i] = surf * rule.w[j] * std::pow(g.f[i], -rule.n);
  }
  // Inner radii from the node angle, outer radii as exact reciprocals.
  for (int i = 0; i < N / 2; ++i) {
    const double t = rule.t[N - 1 - i];
    g.r[i] = std::sqrt((1.0 - t) / (1.0 + t));
    g.r[N - 1 - i] = 1.0 / g.r[i];
  }
  if (N % 2 == 1) g.r[N / 2] = 1.0;
  return g;
}

PlaneGrid buildPlaneGrid(int n, int N) { return planeGridFromRule(buildQuadrature(n, N)); }

double conformalFactor(double xNorm) {
  if (xNorm < 0.0) throw std::domain_error("negative radius");
  return 2.0 / (1.0 + xNorm * xNorm);
}

RadialProfile pullbackToPlane(const ZonalFunction& v, const PlaneGrid& grid, int m) {
  if (v.n != grid.n) throw std::invalid_argument("dimension mismatch");
  const auto& sphereVals = v.values(grid.rule);
  const double e = 0.5 * (v.n - 2 * m);
  RadialProfile out;
  out.n = v.n;
  out.m = m;
  out.r = grid.r;
  out.u.resize(grid.size());
  for (int i = 0; i < grid.size(); ++i)
    out.u[i] = std::pow(grid.f[i], e) * sphereVals[grid.sphereIndex(i)];
  out.tailA = std::pow(2.0, e) * synthesizeAt(v, -1.0);
  return out;
}

ZonalFunction pushforwardToSphere(const RadialProfile& u, const PlaneGrid& grid, int L) {
  requireMatchingGrid(u, grid);
  if (L < 0) L = grid.rule.N - 1;
  const double e = 0.5 * (2 * u.m - u.n);
  std::vector<double> sphereVals(grid.size());
  for (int i = 0; i < grid.size(); ++i)
    sphereVals[grid.sphereIndex(i)] = std::pow(grid.f[i], e) * u.u[i];
  return analyze(sphereVals, grid.rule, L, true);
}

RadialProfile kelvin(const RadialProfile& u) {
  const int N = u.size();
  const int k = 2 * u.m - u.n;
  RadialProfile out;
  out.n = u.n;
  out.m = u.m;
  out.u.resize(N);
  if (reciprocalSymmetric(u.r)) {
    out.r = u.r;  // the reciprocal grid is the grid itself, reversed
  } else {
    out.r.resize(N);
    for (int i = 0; i < N; ++i) out.r[i] = 1.0 / u.r[N - 1 - i];
  }
  for (int i = 0; i < N; ++i) out.u[i] = std::pow(out.r[i], k) * u.u[N - 1 - i];
  out.tailA = fitTailCoefficient(out);
  return out;
}

std::vector<double> evalF(const RadialProfile& u, const ProblemParams& params) {
  if (u.n != params.n || u.m != params.m)
    throw std::invalid_argument("profile/params shape mismatch");
  const double e2 = 0.5 * (params.n + 2 * params.m) + params.alpha * 0.5 * (params.n - 2 * params.m);
  std::vector<double> F(u.size());
  for (int i = 0; i < u.size(); ++i) {
    if (!(u.u[i] > 0.0)) throw std::domain_error("evalF requires a positive profile");
    const double f = conformalFactor(u.r[i]);
    F[i] = params.eps * std::pow(f, 2 * params.m) * u.u[i] +
           std::pow(f, e2) * std::pow(u.u[i], -params.alpha);
  }
  return F;
}

double decaySlope(const std::vector<double>& F, const RadialProfile& u) {
  return decaySlopeOnRadii(F, u.r, u.n, u.m);
}

double decaySlope(const std::vector<double>& F, const PlaneGrid& grid, int m) {
  return decaySlopeOnRadii(F, grid.r, grid.n, m);
}

ZonalFunction dilate(const ZonalFunction& v, double delta, int m,
                     const QuadratureRule& rule, int L) {
  if (!(delta > 0.0)) throw std::domain_error("delta must be positive");
  if (delta < 0.05)
    std::fprintf(stderr, "dilate: delta = %g concentrates beyond grid resolution\n", delta);
  if (L < 0) L = rule.N - 1;
  const double e = 0.5 * (v.n - 2 * m);
  std::vector<double> vals(rule.N);
  for (int j = 0; j < rule.N; ++j) {
    const double t = rule.t[j];
    const double rho2 = (1.0 - t) / (1.0 + t);
    const double s2 = delta * delta * rho2;
    const double tNew = (1.0 - s2) / (1.0 + s2);
    // delta * f(delta rho) / f(rho) = delta (1 + rho^2) / (1 + s^2)
    const double factor = delta * (1.0 + rho2) / (1.0 + s2);
    vals[j] = std::pow(factor, e) * synthesizeAt(v, tNew);
  }
  return analyze(vals, rule, L, true);
}

double computeGamma(int n, int m, int resolution) {
  if (resolution < 64) throw std::invalid_argument("resolution must be at least 64");
  auto evaluate = [&](int N) {
    const auto grid = buildPlaneGrid(n, N);
    const double e = 0.5 * (n + 2 * m);
    double I = 0.0;
    for (int i = 0; i < grid.size(); ++i)
      I += grid.W[i] * std::pow(grid.r[i], 2 * m - n) * std::pow(grid.f[i], e);
    if (!(I > 0.0)) throw ComputationError("gamma integral not positive");
    return std::pow(2.0, 0.5 * (n - 2 * m)) / I;
  };
  int N = resolution;
  double prev = evaluate(N);
  while (N < 4096) {
    N *= 2;
    const double next = evaluate(N);
    if (std::abs(next - prev) <= 5e-11 * std::abs(next)) return next;
    prev = next;
  }
  throw ComputationError("gamma refinement did not settle by N = 4096");
}

double gammaClosedForm(int n, int m) {
  const double beta =
      std::tgamma(double(m)) * std::tgamma(0.5 * n) / std::tgamma(m + 0.5 * n);
  return std::pow(2.0, 1.0 - 2.0 * m) / (sphereSurfaceArea(n - 1) * beta);
}

double infoFundamentalConstant(int n, int m, double gammaValue) {
  return gammaValue / (0.5 * (n - 2 * m) * toDouble(qCurvature(n, m)));
}

double RadialEvaluator::operator()(double s) const {
  const double f = conformalFactor(s);
  const double t = f - 1.0;  // (1 - s^2)/(1 + s^2)
  return std::pow(f, 0.5 * (n - 2 * m)) * synthesizeAt(v, t);
}

RadialEvaluator makeRadialEvaluator(const RadialProfile& u, const PlaneGrid& grid) {
  RadialEvaluator ev;
  ev.n = u.n;
  ev.m = u.m;
  ev.v = pushforwardToSphere(u, grid);
  return ev;
}

double fitTailCoefficient(const RadialProfile& u) {
  const int N = u.size();
  const int K = std::max(2, N / 10);
  const int k = 2 * u.m - u.n;
  double num = 0.0, den = 0.0;
  for (int i = N - K; i < N; ++i) {
    const double p = std::pow(u.r[i], k);
    num += u.u[i] * p;
    den += p * p;
  }
  if (den == 0.0) throw ComputationError("degenerate tail fit");
  return num / den;
}

double tailMismatch(const RadialProfile& u) {
  const int N = u.size();
  const double pred = u.tailA * std::pow(u.r[N - 1], 2 * u.m - u.n);
  return std::abs(u.u[N - 1] - pred) / std::abs(u.u[N - 1]);
}

std::string radialCsv(const RadialProfile& u) {
  std::string out = "r,value\n";
  char buf[80];
  for (int i = 0; i < u.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", u.r[i], u.u[i]);
    out += buf;
  }
  std::snprintf(buf, sizeof(buf), "# tail %.17g\n", fitTailCoefficient(u));
  out += buf;
  return out;
}

}  // namespace gjms
