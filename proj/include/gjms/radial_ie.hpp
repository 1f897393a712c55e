#pragma once

#include "gjms/params.hpp"
#include "gjms/stereo.hpp"

#include <string>
#include <vector>

namespace gjms {

// Shared state for one (params, resolution) pair: the plane grid, gamma, and
// the dense kernel matrix with measure weights folded in. Read-only after
// construction; independent solves may share one context.
struct IeContext {
  ProblemParams params;
  PlaneGrid grid;
  double gamma = 0.0;
  std::vector<double> kernelW;  // row i: mean(r_i, r_j) * W_j

  int size() const { return grid.size(); }
};

IeContext makeIeContext(const ProblemParams& params, int resolution = 128);

// Average of |x - y|^k over the sphere |y| = s, with |x| = r. Odd n >= 3 and
// odd k (k = 2m - n for the equation; k - 2 shows up in the dilation-field
// identity). Degenerate spheres reduce to a point evaluation; otherwise the
// mean is a short Gauss rule in the chord length, where the integrand is a
// positive polynomial, so accuracy is uniform in the radius ratio.
double kernelSphericalMean(int n, int k, double r, double s);

// u(r_i) = gamma * sum_j mean(r_i, r_j) F_j W_j. Requires F to decay like the
// admissible sources: fitted tail slope of (1 + r^{2m-n})|F| at most
// -2n + 0.75 (ComputationError otherwise). The output tail coefficient is the
// moment gamma * sum F_j W_j, the exact r -> infinity limit of u / r^{2m-n}.
RadialProfile applyNewtonianKernel(const std::vector<double>& F, const IeContext& ctx);

// sup |u - gamma K[F_u]| / sup |u| on the grid.
double ieResidual(const RadialProfile& u, const IeContext& ctx);

struct PicardStep {
  int iter = 0;
  double residual = 0.0;
  double damping = 0.0;
};

struct PicardResult {
  RadialProfile u;
  std::vector<PicardStep> trace;
  bool converged = false;
  double finalResidual = 0.0;
};

struct PicardOptions {
  double damping = 0.5;  // halved on residual non-decrease, floor 1/64
  double tol = 1e-8;
  int maxIter = 2000;
};

// Damped fixed-point iteration u <- (1 - tau) u + tau gamma K[F_u]. Loss of
// positivity aborts with ComputationError; running out of iterations returns
// converged = false with the final residual.
PicardResult solvePicard(const IeContext& ctx, const RadialProfile& initial,
                         const PicardOptions& opts = {});

// Pullback of the constant (1 - eps)^{-1/(alpha+1)}, the exact solution on
// the trivial branch and the default initial guess.
RadialProfile makeTrivialInitial(const IeContext& ctx);

// Pullback of v = 1, scaled by c.
RadialProfile makeBubbleInitial(const IeContext& ctx, double scale = 1.0);

// Header iter,residual,damping.
std::string traceCsv(const std::vector<PicardStep>& trace);

}  // namespace gjms
