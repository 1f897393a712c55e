#pragma once

#include "gjms/params.hpp"
#include "gjms/quadrature.hpp"
#include "gjms/zonal.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gjms {

// The perturbed quotient (int phi^{1-alpha})^{2/(alpha-1)} * int [phi P phi
// - eps e_0 phi^2], evaluated through the log parametrization phi = exp(psi).
// psi lives in coefficient space; the grid transform at full degree N-1 is
// exactly unitary, so value and gradient are free of quadrature error.
double quotientFromPsi(const ZonalFunction& psi, const ProblemParams& params,
                       const QuadratureRule& rule);

// d(quotient)/d(psi_ell), ell = 0..psi.degree(). The component along ell = 0
// vanishes identically (the quotient is scale-free).
std::vector<double> quotientGradientFromPsi(const ZonalFunction& psi,
                                            const ProblemParams& params,
                                            const QuadratureRule& rule);

struct MinimizeOptions {
  int maxIter = 5000;
  double gradTol = 1e-9;  // sup-norm of the psi gradient
  double armijoC = 1e-4;
};

struct MinimizeResult {
  ZonalFunction minimizer;  // normalized so int minimizer^{1-alpha} d mu = 1
  double value = 0.0;
  std::vector<double> trace;  // quotient per iteration, non-increasing
  bool converged = false;
  int iterations = 0;
};

// Preconditioned steepest descent with Armijo backtracking on psi of degree L.
// Positivity is structural. A null initialPsi starts at the constant, which
// is a stationary point: descent then returns immediately.
MinimizeResult minimizeQuotient(const ProblemParams& params, int L,
                                const QuadratureRule& rule,
                                const ZonalFunction* initialPsi = nullptr,
                                const MinimizeOptions& opts = {});

// Small seeded non-constant psi, amplitude decaying with the mode number.
ZonalFunction seededInitialPsi(int n, int L, std::uint64_t seed, double amplitude = 0.1);

// sup |P v - eps e_0 v - S v^{-alpha}| / (sup |S v^{-alpha}| + 1e-14).
double eulerLagrangeResidual(const ZonalFunction& v, const ProblemParams& params, double S,
                             const QuadratureRule& rule);

// |(1 - eps) int v - int v^{-alpha}| / int v.
double massBalanceResidual(const ZonalFunction& v, const ProblemParams& params,
                           const QuadratureRule& rule);

// Scales an Euler-Lagrange solution with multiplier S so the multiplier
// becomes e_0, the normalization of the main equation: t = (e_0/S)^{1/(1+alpha)}.
ZonalFunction rescaleToMain(const ZonalFunction& v, const ProblemParams& params, double S);

struct SweepCell {
  double eps = 0.0;
  double alpha = 0.0;
  double constancy = 0.0;  // max over runs of sup |v/avg(v) - 1|
  double value = 0.0;      // best quotient over the runs
  double predicted = 0.0;  // (1 - eps) * sharp constant, n = 2m-1 only
  bool converged = false;
};

// For each (eps, alpha): minimize from `seeds` non-constant initials; record
// the worst constancy and the best value. Cell failures are recorded in the
// converged flag; the sweep continues.
std::vector<SweepCell> liouvilleSweep(const std::vector<double>& epsGrid,
                                      const std::vector<double>& alphaGrid,
                                      const ProblemParams& base, int L,
                                      const QuadratureRule& rule, int seeds = 5);

std::string sweepCsv(const std::vector<SweepCell>& cells);

struct CompactnessCell {
  double eps = 0.0;
  double minV = 0.0;
  double maxV = 0.0;
  bool converged = false;
};

// Min/max of the (rescaled) minimizer across the eps grid; the sup of
// maxV/minV over the grid is the empirical uniform bound.
std::vector<CompactnessCell> compactnessSweep(const std::vector<double>& epsGrid,
                                              const ProblemParams& base, int L,
                                              const QuadratureRule& rule);

std::string compactnessCsv(const std::vector<CompactnessCell>& cells);

struct DilationPoint {
  double delta = 0.0;
  double maxV = 0.0;
  double quotient = 0.0;
};

// Critical-exponent escape route: quotient of the dilated constant stays at
// the sharp value while the sup grows like delta^{-(2m-n)/2}.
std::vector<DilationPoint> dilationFamily(const std::vector<double>& deltas, int n, int m,
                                          const QuadratureRule& rule, int L = -1);

}  // namespace gjms
