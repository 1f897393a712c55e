#pragma once

#include "gjms/params.hpp"
#include "gjms/quadrature.hpp"
#include "gjms/stereo.hpp"
#include "gjms/zonal.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gjms {

// Dilation-field identity int (x . grad Q) u^{1-alpha} dx = c_alpha int Q
// u^{1-alpha} dx, with Q = gamma (eps f^{2m} u^{1+alpha} + f^{-c_alpha}).
// The radial derivative of Q uses the exact derivative of f-powers and the
// spectral derivative of the sphere image of u. Requires alpha != 1 and a
// certified tail (mismatch within 10%).
struct PohozaevResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double mass = 0.0;      // int Q u^{1-alpha} dx, the scale behind rhs
  double residual = 0.0;  // |lhs - rhs| / (|rhs| + 1e-14)
};

PohozaevResult pohozaevResidual(const RadialProfile& u, const ProblemParams& params,
                                const PlaneGrid& grid, double gamma);

// R * (surface integral of Q u^{1-alpha} over |x| = R) for each listed R.
// The sequence must fall toward zero for admissible data; the flags record
// which hypothesis failed when it does not.
struct DecayRow {
  double R = 0.0;
  double value = 0.0;
};

struct DecayCheckResult {
  std::vector<DecayRow> rows;
  bool decaying = false;           // strictly decreasing with small final value
  bool admissibleExponent = false; // c_alpha <= 0
  bool tailCertified = false;      // recorded tail within 10% of the last node

  bool flagged() const { return !(decaying && admissibleExponent && tailCertified); }
};

DecayCheckResult boundaryDecayCheck(const RadialProfile& u, const ProblemParams& params,
                                    const std::vector<double>& Rlist, const PlaneGrid& grid,
                                    double gamma);

// Minimum of w_lambda(x) = u(x) - u(x^lambda) over the half-space samples
// x = (x1, rho), x1 > lambda, with x^lambda the reflection across x1 = lambda.
// The sample grid is log-spaced on [lambda, lambda + extent] x [0, extent]
// with the rho = 0 axis included. The callable form takes (x1, rho).
double movingPlaneMin(const std::function<double(double, double)>& u2d,
                      const std::vector<double>& lambdas, int gridSize = 64,
                      double extent = 10.0);
double movingPlaneMin(const RadialProfile& u, const PlaneGrid& grid,
                      const std::vector<double>& lambdas, int gridSize = 64,
                      double extent = 10.0);

// Minimum of F(x^lambda) - F(x) over the same samples, per lambda. A lambda
// is only checked when the w >= 0 hypothesis holds there; otherwise the row
// is marked skipped.
struct FComparisonRow {
  double lambda = 0.0;
  bool checked = false;
  double minDiff = 0.0;
};

struct FComparisonResult {
  std::vector<FComparisonRow> rows;
  double minOverChecked = 0.0;
  int skipped = 0;
};

FComparisonResult fComparisonCheck(const RadialProfile& u, const ProblemParams& params,
                                   const PlaneGrid& grid, const std::vector<double>& lambdas,
                                   int gridSize = 64, double extent = 10.0);

// Seeded random-trial verification of a sharp inequality. reference is the
// right-hand constant; slack is LHS - RHS, which must stay above
// -1e-10 |RHS| (inequality tolerances are relative with a 1e-14 floor).
struct TrialSuiteReport {
  int trials = 0;
  int violations = 0;
  double reference = 0.0;
  double minSlack = 0.0;
  std::uint64_t worstSeed = 0;
  ZonalFunction worst;
};

// (int phi^{1-alpha})^{2/(alpha-1)} int phi P phi >= sharp constant, on
// positive zonal trials. Needs n = 2m-1 and alpha in (0,1) u (1, 2n+1].
TrialSuiteReport sobolevTrialSuite(int n, int m, double alpha, int trials,
                                   std::uint64_t seedBase, const QuadratureRule& rule,
                                   int L = 24, double amplitude = 0.8);

// exp(-2 avg log phi) avg(phi P phi) >= e_0, the alpha -> 1 limit.
TrialSuiteReport logSobolevTrialSuite(int n, int m, int trials, std::uint64_t seedBase,
                                      const QuadratureRule& rule, int L = 24,
                                      double amplitude = 0.8);

// The implication-chain steps, checked on trials satisfying the sign
// convention int phi P phi < 0; trials that fail it are skipped with a count.
struct ChainStepReport {
  std::string name;
  int violations = 0;
  double minSlack = 0.0;
};

struct ChainReport {
  int trials = 0;
  int checked = 0;
  int skipped = 0;
  std::vector<ChainStepReport> steps;

  int totalViolations() const;
};

// beta > 1 drives the Hoelder arrow, alpha in (0, 1) the reverse-power arrow.
ChainReport chainVerify(int n, int m, double beta, double alpha, int trials,
                        std::uint64_t seedBase, const QuadratureRule& rule, int L = 24,
                        double amplitude = 0.8);

// Double sum of (|x|^2 - |y|^2) |x - y|^{2m-n-2} F(x) F(y) over the grid,
// normalized by the sum of absolute values. Antisymmetry makes the exact
// value zero; the return should sit at roundoff.
double kelvinAntisymmetry(const std::vector<double>& F, const PlaneGrid& grid, int m);

}  // namespace gjms
