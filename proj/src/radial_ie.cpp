#include "gjms/radial_ie.hpp"

#include "gjms/errors.hpp"
#include "gjms/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gjms {

namespace {

double supNorm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}

void requireDecay(const std::vector<double>& F, const IeContext& ctx) {
  const double slope = decaySlope(F, ctx.grid, ctx.params.m);
  const double bound = -2.0 * ctx.params.n + 0.75;
  if (!(slope <= bound)) {
    char msg[128];
    std::snprintf(msg, sizeof(msg),
                  "source tail slope %.3f exceeds the admissible bound %.3f", slope, bound);
    throw ComputationError(msg);
  }
}

}  // namespace

double kernelSphericalMean(int n, int k, double r, double s) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and >= 3");
  if (k % 2 == 0) throw std::invalid_argument("k must be odd");
  if (r < 0.0 || s < 0.0) throw std::invalid_argument("radii must be nonnegative");
  if (r == 0.0 && s == 0.0) throw std::invalid_argument("radii cannot both vanish");
  if (s == 0.0) return std::pow(r, k);
  if (r == 0.0) return std::pow(s, k);

  // In the chord variable w = |x - y| the mean is a ratio of integrals of
  // w^{k+1} and w against the positive measure [(w^2-a^2)(b^2-w^2)]^p dw on
  // [a, b]. Every factor is evaluated as a product of exact node offsets, so
  // there is no cancellation at any radius ratio, and the 24-point rule is
  // exact for the polynomial integrands arising from odd n and k >= -1.
  const int p = (n - 3) / 2;
  const double a = std::abs(r - s);
  const double b = r + s;
  static const QuadratureRule gl = buildQuadrature(2, 24);  // Legendre on (-1, 1)
  const double half = 0.5 * (b - a);
  double num = 0.0, den = 0.0;
  for (int j = 0; j < gl.N; ++j) {
    const double lo = half * (1.0 + gl.t[j]);   // w - a
    const double hi = half * (1.0 - gl.t[j]);   // b - w
    const double w = a + lo;
    double q = w;
    for (int i = 0; i < p; ++i) q *= lo * (w + a) * hi * (b + w);
    num += gl.w[j] * q * std::pow(w, k);
    den += gl.w[j] * q;
  }
  return num / den;
}

IeContext makeIeContext(const ProblemParams& params, int resolution) {
  if (resolution < 16) throw std::invalid_argument("resolution must be at least 16");
  IeContext ctx;
  ctx.params = params;
  ctx.grid = buildPlaneGrid(params.n, resolution);
  ctx.gamma = computeGamma(params.n, params.m, std::max(resolution, 64));
  const int N = ctx.size();
  const int k = 2 * params.m - params.n;
  ctx.kernelW.resize(std::size_t(N) * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      ctx.kernelW[std::size_t(i) * N + j] =
          kernelSphericalMean(params.n, k, ctx.grid.r[i], ctx.grid.r[j]) * ctx.grid.W[j];
  return ctx;
}

RadialProfile applyNewtonianKernel(const std::vector<double>& F, const IeContext& ctx) {
  const int N = ctx.size();
  if (static_cast<int>(F.size()) != N) throw std::invalid_argument("size mismatch");
  requireDecay(F, ctx);
  RadialProfile out;
  out.n = ctx.params.n;
  out.m = ctx.params.m;
  out.r = ctx.grid.r;
  out.u.resize(N);
  double moment = 0.0;
  for (int j = 0; j < N; ++j) moment += F[j] * ctx.grid.W[j];
  for (int i = 0; i < N; ++i) {
    const double* row = ctx.kernelW.data() + std::size_t(i) * N;
    double acc = 0.0;
    for (int j = 0; j < N; ++j) acc += row[j] * F[j];
    out.u[i] = ctx.gamma * acc;
  }
  out.tailA = ctx.gamma * moment;
  return out;
}

double ieResidual(const RadialProfile& u, const IeContext& ctx) {
  const auto Ku = applyNewtonianKernel(evalF(u, ctx.params), ctx);
  double num = 0.0;
  for (int i = 0; i < u.size(); ++i) num = std::max(num, std::abs(u.u[i] - Ku.u[i]));
  return num / supNorm(u.u);
}

PicardResult solvePicard(const IeContext& ctx, const RadialProfile& initial,
                         const PicardOptions& opts) {
  if (!(opts.damping > 0.0) || opts.damping > 1.0)
    throw std::invalid_argument("damping must lie in (0, 1]");
  for (double v : initial.u)
    if (!(v > 0.0)) throw std::invalid_argument("initial profile must be positive");

  PicardResult res;
  res.u = initial;
  double tau = opts.damping;
  double prevResidual = 0.0;
  for (int iter = 0; iter <= opts.maxIter; ++iter) {
    const auto Ku = applyNewtonianKernel(evalF(res.u, ctx.params), ctx);
    double num = 0.0;
    for (int i = 0; i < res.u.size(); ++i)
      num = std::max(num, std::abs(res.u.u[i] - Ku.u[i]));
    const double residual = num / supNorm(res.u.u);
    res.trace.push_back({iter, residual, tau});
    res.finalResidual = residual;
    res.u.tailA = Ku.tailA;  // tail of the fixed-point map at the current iterate
    if (residual <= opts.tol) {
      res.converged = true;
      return res;
    }
    if (iter == opts.maxIter) break;
    if (iter > 0 && residual > prevResidual * (1.0 - 1e-3)) tau = std::max(tau / 2.0, 1.0 / 64.0);
    prevResidual = residual;
    for (int i = 0; i < res.u.size(); ++i) {
      res.u.u[i] = (1.0 - tau) * res.u.u[i] + tau * Ku.u[i];
      if (!(res.u.u[i] > 0.0)) throw ComputationError("iteration lost positivity");
    }
  }
  res.converged = false;
  return res;
}

RadialProfile makeTrivialInitial(const IeContext& ctx) {
  const double c = std::pow(1.0 - ctx.params.eps, -1.0 / (ctx.params.alpha + 1.0));
  return makeBubbleInitial(ctx, c);
}

RadialProfile makeBubbleInitial(const IeContext& ctx, double scale) {
  ZonalFunction v;
  v.n = ctx.params.n;
  v.a = {scale};
  return pullbackToPlane(v, ctx.grid, ctx.params.m);
}

std::string traceCsv(const std::vector<PicardStep>& trace) {
  std::string out = "iter,residual,damping\n";
  char buf[96];
  for (const auto& step : trace) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g\n", step.iter, step.residual,
                  step.damping);
    out += buf;
  }
  return out;
}

}  // namespace gjms
