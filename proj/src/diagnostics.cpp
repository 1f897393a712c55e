#include "gjms/diagnostics.hpp"

#include "gjms/constants.hpp"
#include "gjms/errors.hpp"
#include "gjms/radial_ie.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gjms {

namespace {

void requireCertifiedTail(const RadialProfile& u) {
  if (tailMismatch(u) > 0.1)
    throw ComputationError("profile tail is not consistent with its growth coefficient");
}

// Derivative of the zonal synthesis: d/dt C_l^lam = 2 lam C_{l-1}^{lam+1},
// so the derivative column lives one dimension up.
double synthesizeDerivativeAt(const ZonalFunction& v, double t) {
  const int L = v.degree();
  if (L < 1) return 0.0;
  const double lam = 0.5 * (v.n - 1);
  std::vector<double> col;
  gegenbauerColumn(v.n + 2, L - 1, t, col);
  double acc = 0.0;
  for (int l = 1; l <= L; ++l) acc += v.a[l] * col[l - 1];
  return 2.0 * lam * acc;
}

std::vector<double> logSamples(double extent, int count) {
  std::vector<double> s(count);
  for (int k = 0; k < count; ++k)
    s[k] = extent * std::pow(10.0, -4.0 + 4.0 * k / (count - 1.0));
  return s;
}

double relTol(double reference) { return 1e-10 * std::max(std::abs(reference), 1e-14); }

}  // namespace

PohozaevResult pohozaevResidual(const RadialProfile& u, const ProblemParams& params,
                                const PlaneGrid& grid, double gamma) {
  if (params.alpha == 1.0) throw std::invalid_argument("alpha = 1 is excluded");
  if (u.size() != grid.size()) throw std::invalid_argument("profile/grid size mismatch");
  requireCertifiedTail(u);

  const auto v = pushforwardToSphere(u, grid);
  const int n = params.n;
  const int m = params.m;
  const double alpha = params.alpha;
  const double eps = params.eps;
  const double cA = cAlpha(n, m, alpha);
  const double e = 0.5 * (n - 2 * m);

  double lhs = 0.0, rhsBase = 0.0;
  for (int i = 0; i < grid.size(); ++i) {
    const double r = grid.r[i];
    const double f = grid.f[i];
    const double t = f - 1.0;
    const double ui = u.u[i];
    if (!(ui > 0.0)) throw std::domain_error("positive profile required");
    const double vval = synthesizeAt(v, t);
    const double vder = synthesizeDerivativeAt(v, t);
    const double rdu = -r * r * std::pow(f, e + 1.0) * (e * vval + f * vder);
    const double Q = gamma * (eps * std::pow(f, 2 * m) * std::pow(ui, 1.0 + alpha) +
                              std::pow(f, -cA));
    const double rdQ =
        gamma * (eps * (-2.0 * m * r * r * std::pow(f, 2 * m + 1) * std::pow(ui, 1.0 + alpha) +
                        (1.0 + alpha) * std::pow(f, 2 * m) * std::pow(ui, alpha) * rdu) +
                 cA * r * r * std::pow(f, 1.0 - cA));
    const double uPow = std::pow(ui, 1.0 - alpha);
    lhs += rdQ * uPow * grid.W[i];
    rhsBase += Q * uPow * grid.W[i];
  }
  PohozaevResult res;
  res.lhs = lhs;
  res.rhs = cA * rhsBase;
  res.mass = rhsBase;
  res.residual = std::abs(res.lhs - res.rhs) / (std::abs(res.rhs) + 1e-14);
  return res;
}

DecayCheckResult boundaryDecayCheck(const RadialProfile& u, const ProblemParams& params,
                                    const std::vector<double>& Rlist, const PlaneGrid& grid,
                                    double gamma) {
  if (Rlist.size() < 2) throw std::invalid_argument("need at least two radii");
  const auto eval = makeRadialEvaluator(u, grid);
  const double cA = cAlpha(params.n, params.m, params.alpha);
  const double surf = sphereSurfaceArea(params.n - 1);

  DecayCheckResult res;
  for (double R : Rlist) {
    const double f = conformalFactor(R);
    const double uR = eval(R);
    if (!(uR > 0.0)) throw ComputationError("profile not positive at a sample radius");
    const double Q = gamma * (params.eps * std::pow(f, 2 * params.m) *
                                  std::pow(uR, 1.0 + params.alpha) +
                              std::pow(f, -cA));
    const double value =
        R * surf * std::pow(R, params.n - 1) * Q * std::pow(uR, 1.0 - params.alpha);
    res.rows.push_back({R, value});
  }
  res.decaying = true;
  for (std::size_t i = 0; i + 1 < res.rows.size(); ++i)
    if (!(res.rows[i + 1].value < res.rows[i].value)) res.decaying = false;
  res.admissibleExponent = cA <= 0.0;
  res.tailCertified = tailMismatch(u) <= 0.1;
  return res;
}

double movingPlaneMin(const std::function<double(double, double)>& u2d,
                      const std::vector<double>& lambdas, int gridSize, double extent) {
  const auto offsets = logSamples(extent, gridSize);
  auto rhos = logSamples(extent, gridSize - 1);
  rhos.insert(rhos.begin(), 0.0);
  double mn = std::numeric_limits<double>::infinity();
  for (double lambda : lambdas) {
    for (double s : offsets) {
      for (double rho : rhos) {
        const double w = u2d(lambda + s, rho) - u2d(lambda - s, rho);
        mn = std::min(mn, w);
      }
    }
  }
  return mn;
}

double movingPlaneMin(const RadialProfile& u, const PlaneGrid& grid,
                      const std::vector<double>& lambdas, int gridSize, double extent) {
  const auto eval = makeRadialEvaluator(u, grid);
  return movingPlaneMin(
      [&eval](double x1, double rho) { return eval(std::hypot(x1, rho)); }, lambdas,
      gridSize, extent);
}

FComparisonResult fComparisonCheck(const RadialProfile& u, const ProblemParams& params,
                                   const PlaneGrid& grid, const std::vector<double>& lambdas,
                                   int gridSize, double extent) {
  const auto eval = makeRadialEvaluator(u, grid);
  const double e2 = 0.5 * (params.n + 2 * params.m) +
                    params.alpha * 0.5 * (params.n - 2 * params.m);
  auto F = [&](double r) {
    const double f = conformalFactor(r);
    const double ur = eval(r);
    if (!(ur > 0.0)) throw ComputationError("profile not positive at a sample radius");
    return params.eps * std::pow(f, 2 * params.m) * ur +
           std::pow(f, e2) * std::pow(ur, -params.alpha);
  };
  const auto offsets = logSamples(extent, gridSize);
  auto rhos = logSamples(extent, gridSize - 1);
  rhos.insert(rhos.begin(), 0.0);

  FComparisonResult res;
  res.minOverChecked = std::numeric_limits<double>::infinity();
  for (double lambda : lambdas) {
    FComparisonRow row;
    row.lambda = lambda;
    double wmin = std::numeric_limits<double>::infinity();
    for (double s : offsets)
      for (double rho : rhos)
        wmin = std::min(wmin, eval(std::hypot(lambda + s, rho)) -
                                  eval(std::hypot(lambda - s, rho)));
    if (wmin < -1e-10) {
      row.checked = false;
      ++res.skipped;
    } else {
      row.checked = true;
      double dmin = std::numeric_limits<double>::infinity();
      for (double s : offsets)
        for (double rho : rhos)
          dmin = std::min(dmin, F(std::hypot(lambda - s, rho)) -
                                    F(std::hypot(lambda + s, rho)));
      row.minDiff = dmin;
      res.minOverChecked = std::min(res.minOverChecked, dmin);
    }
    res.rows.push_back(row);
  }
  return res;
}

TrialSuiteReport sobolevTrialSuite(int n, int m, double alpha, int trials,
                                   std::uint64_t seedBase, const QuadratureRule& rule,
                                   int L, double amplitude) {
  if (n != 2 * m - 1) throw std::invalid_argument("sharp form requires n = 2m - 1");
  TrialSuiteReport rep;
  rep.reference = sharpConstant(n, m, alpha);  // validates alpha as a side effect
  rep.trials = trials;
  rep.minSlack = std::numeric_limits<double>::infinity();
  const auto params = ProblemParams::checked(n, m, alpha, 0.0);
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t seed = seedBase + std::uint64_t(trial);
    const auto phi = randomPositiveZonal(n, seed, L, amplitude, rule);
    const double lhs = sobolevQuotient(phi, params, rule);
    const double slack = lhs - rep.reference;
    if (slack < rep.minSlack) {
      rep.minSlack = slack;
      rep.worstSeed = seed;
      rep.worst = phi;
    }
    if (slack < -relTol(rep.reference)) ++rep.violations;
  }
  return rep;
}

TrialSuiteReport logSobolevTrialSuite(int n, int m, int trials, std::uint64_t seedBase,
                                      const QuadratureRule& rule, int L, double amplitude) {
  if (n != 2 * m - 1) throw std::invalid_argument("sharp form requires n = 2m - 1");
  TrialSuiteReport rep;
  rep.reference = toDouble(gjmsEigenvalue(n, m, 0));
  rep.trials = trials;
  rep.minSlack = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t seed = seedBase + std::uint64_t(trial);
    const auto phi = randomPositiveZonal(n, seed, L, amplitude, rule);
    const double lhs = logSobolevQuotient(phi, m, rule);
    const double slack = lhs - rep.reference;
    if (slack < rep.minSlack) {
      rep.minSlack = slack;
      rep.worstSeed = seed;
      rep.worst = phi;
    }
    if (slack < -relTol(rep.reference)) ++rep.violations;
  }
  return rep;
}

int ChainReport::totalViolations() const {
  int total = 0;
  for (const auto& s : steps) total += s.violations;
  return total;
}

ChainReport chainVerify(int n, int m, double beta, double alpha, int trials,
                        std::uint64_t seedBase, const QuadratureRule& rule, int L,
                        double amplitude) {
  if (n != 2 * m - 1) throw std::invalid_argument("the chain requires n = 2m - 1");
  if (!(beta > 1.0) || beta > 2.0 * n + 1.0)
    throw std::invalid_argument("beta must lie in (1, 2n+1]");
  if (!(alpha > 0.0) || alpha >= 1.0) throw std::invalid_argument("alpha must lie in (0, 1)");

  const double surf = sphereSurfaceArea(n);
  const double e0 = toDouble(gjmsEigenvalue(n, m, 0));
  ChainReport rep;
  rep.trials = trials;
  rep.steps = {{"hoelder", 0, std::numeric_limits<double>::infinity()},
               {"jensen", 0, std::numeric_limits<double>::infinity()},
               {"reverse-jensen", 0, std::numeric_limits<double>::infinity()},
               {"final", 0, std::numeric_limits<double>::infinity()}};
  auto record = [&rep](int step, double slack, double reference) {
    rep.steps[step].minSlack = std::min(rep.steps[step].minSlack, slack);
    if (slack < -relTol(reference)) ++rep.steps[step].violations;
  };

  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t seed = seedBase + std::uint64_t(trial);
    const auto phi = randomPositiveZonal(n, seed, L, amplitude, rule);
    const double E = energy(phi, m);
    if (!(E < 0.0)) {
      ++rep.skipped;  // sign convention not met
      continue;
    }
    ++rep.checked;
    const auto& vals = phi.values(rule);
    double logAvg = 0.0;
    for (int j = 0; j < rule.N; ++j) logAvg += rule.w[j] * std::log(vals[j]);
    logAvg *= sphereSurfaceArea(n - 1) / surf;
    const double geo = std::exp(logAvg);
    const double avgPhiP = E / surf;

    // Hoelder arrow: mass of phi^{1-beta} against the 2n+1 endpoint.
    const double P1 = lebesgueIntegral(phi, 1.0 - beta, rule);
    const double P2n = lebesgueIntegral(phi, -2.0 * n, rule);
    const double lhsH = std::pow(P1, 2.0 / (beta - 1.0));
    const double rhsH = std::pow(surf, (2.0 * n + 1.0 - beta) / (n * (beta - 1.0))) *
                        std::pow(P2n, 1.0 / n);
    record(0, rhsH - lhsH, rhsH);

    // Power mean at gamma = beta - 1 dominates the geometric mean.
    const double Mb = std::pow(lebesgueIntegral(phi, beta - 1.0, rule) / surf,
                               1.0 / (beta - 1.0));
    record(1, Mb - geo, geo);

    // Negative power flips: (avg phi^{1-alpha})^{2/(alpha-1)} <= geo^{-2}.
    const double lhsR = std::pow(lebesgueIntegral(phi, 1.0 - alpha, rule) / surf,
                                 2.0 / (alpha - 1.0));
    const double rhsR = std::exp(-2.0 * logAvg);
    record(2, rhsR - lhsR, rhsR);

    // Endpoint-free form, exercised at the chain's own exponents.
    for (double g : {beta - 1.0, 1.0 - alpha}) {
      const double rhsF = e0 * std::pow(lebesgueIntegral(phi, g, rule) / surf, 2.0 / g);
      record(3, avgPhiP - rhsF, rhsF);
    }
  }
  return rep;
}

double kelvinAntisymmetry(const std::vector<double>& F, const PlaneGrid& grid, int m) {
  const int N = grid.size();
  if (static_cast<int>(F.size()) != N) throw std::invalid_argument("size mismatch");
  const int k2 = 2 * m - grid.n - 2;
  double sum = 0.0, absMass = 0.0;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      const double term = (grid.r[i] * grid.r[i] - grid.r[j] * grid.r[j]) *
                          kernelSphericalMean(grid.n, k2, grid.r[i], grid.r[j]) * F[i] *
                          F[j] * grid.W[i] * grid.W[j];
      sum += term;
      absMass += std::abs(term);
    }
  }
  if (absMass == 0.0) return 0.0;
  return std::abs(sum) / absMass;
}

}  // namespace gjms
