// Command-line driver: every subcommand maps to one library operation and
// emits a Report (JSON) or the module's CSV table. Exit 0 iff all checks
// pass, 1 on a failed check or aborted computation, 2 on usage errors.

#include "CLI11.hpp"

#include "gjms/constants.hpp"
#include "gjms/diagnostics.hpp"
#include "gjms/errors.hpp"
#include "gjms/params.hpp"
#include "gjms/quadrature.hpp"
#include "gjms/radial_ie.hpp"
#include "gjms/report.hpp"
#include "gjms/stereo.hpp"
#include "gjms/variational.hpp"
#include "gjms/zonal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace gjms;

struct Flags {
  int n = 3;
  int m = 2;
  double alpha = 7.0;
  double eps = 0.1;
  int degree = 24;
  int resolution = 64;
  int trials = 1000;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::string out;
  std::string format = "json";
  bool resolutionSet = false;

  double tolOr(double fallback) const { return tol > 0.0 ? tol : fallback; }
  // Kernel-quadrature commands need the denser default grid; an explicit
  // --resolution always wins.
  int resolutionOr(int fallback) const { return resolutionSet ? resolution : fallback; }
};

// (suffix, content) pairs; the first one doubles as the --format csv payload.
using Tables = std::vector<std::pair<std::string, std::string>>;

std::string num(double x) { return formatDouble(x); }

ZonalFunction constantOne(int n) {
  ZonalFunction f;
  f.n = n;
  f.a = {1.0};
  return f;
}

RadialProfile scaledProfile(RadialProfile u, double c) {
  for (auto& x : u.u) x *= c;
  u.tailA *= c;
  return u;
}

std::string cellTag(double eps, double alpha) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "eps%g-alpha%g", eps, alpha);
  return buf;
}

const std::vector<double> kEpsGrid = {0.05, 0.1, 0.2, 0.3, 0.5};
const std::vector<double> kDecayRadii = {1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0};
const std::vector<double> kPlaneOffsets = {0.1, 0.5, 1.0, 2.0};

// ---------------------------------------------------------------------------

void runConstants(const Flags& f, Report& rep, Tables& tables) {
  const auto e0 = gammaHalfRatio(f.n, f.m);
  const auto q = qCurvature(f.n, f.m);

  const double viaTgamma = std::tgamma(f.n / 2.0 + f.m) / std::tgamma(f.n / 2.0 - f.m);
  rep.checks.push_back(
      makeCheck("gamma-half-ratio-vs-tgamma", toDouble(e0), viaTgamma, 1e-12));
  rep.checks.push_back(makeCheck("q-curvature-identity",
                                 toDouble(q) * (0.5 * (f.n - 2 * f.m)), toDouble(e0),
                                 1e-15));

  struct Frozen {
    int n, m;
    double q;
    std::vector<double> poly;
  };
  const Frozen frozen[] = {
      {3, 2, 15.0 / 8.0, {-15.0 / 16.0, -0.5, 1.0}},
      {3, 3, -105.0 / 32.0, {315.0 / 64.0, 27.0 / 16.0, -23.0 / 4.0, 1.0}},
      {5, 3, 945.0 / 32.0, {-945.0 / 64.0, -93.0 / 16.0, 13.0 / 4.0, 1.0}},
  };
  const auto poly = expandGjmsPolynomial(f.n, f.m);
  for (const auto& fr : frozen) {
    if (fr.n != f.n || fr.m != f.m) continue;
    rep.checks.push_back(makeCheck("q-curvature", toDouble(q), fr.q, 0.0));
    for (std::size_t k = 0; k < fr.poly.size(); ++k)
      rep.checks.push_back(makeCheck("poly-coeff-" + std::to_string(k),
                                     toDouble(poly[k]), fr.poly[k], 0.0));
  }
  rep.checks.push_back(
      makeCheck("poly-leading-coeff", toDouble(poly.back()), 1.0, 0.0));

  // The expansion and the eigenvalue product must agree in exact arithmetic.
  int mismatches = 0;
  for (int ell = 0; ell <= 8; ++ell) {
    const ExactRational lam(ell * (ell + f.n - 1));
    ExactRational acc(0), pw(1);
    for (const auto& c : poly) {
      acc += c * pw;
      pw *= lam;
    }
    if (acc != gjmsEigenvalue(f.n, f.m, ell)) ++mismatches;
  }
  rep.checks.push_back(makeCheck("eigenvalues-match-expansion", mismatches, 0.0, 0.0));

  const double crit = rep.params.criticalAlpha();
  rep.checks.push_back(
      makeUpperBoundCheck("c-alpha-at-critical", std::abs(cAlpha(f.n, f.m, crit)), 1e-13));

  // Informational echoes so the report carries the numbers themselves.
  auto echo = [&rep](const std::string& name, double v) {
    rep.checks.push_back(makeCheck(name, v, v, 0.0));
  };
  echo("e0-value", toDouble(e0));
  echo("critical-alpha-value", crit);
  echo("gamma-closed-form-value", gammaClosedForm(f.n, f.m));
  if (f.n == 2 * f.m - 1 && f.alpha != 1.0)
    echo("sharp-constant-value", sharpConstant(f.n, f.m, f.alpha));

  std::string csv = "ell,eigenvalue\n";
  for (int ell = 0; ell <= f.degree; ++ell)
    csv += std::to_string(ell) + ',' + num(toDouble(gjmsEigenvalue(f.n, f.m, ell))) + '\n';
  tables.push_back({"eigenvalues", csv});
}

void runExpand(const Flags& f, Report& rep, Tables& tables) {
  const auto poly = expandGjmsPolynomial(f.n, f.m);
  const std::vector<std::vector<double>> frozenByPair = {
      {-15.0 / 16.0, -0.5, 1.0},
      {315.0 / 64.0, 27.0 / 16.0, -23.0 / 4.0, 1.0},
      {-945.0 / 64.0, -93.0 / 16.0, 13.0 / 4.0, 1.0},
  };
  const int pairIdx = (f.n == 3 && f.m == 2)   ? 0
                      : (f.n == 3 && f.m == 3) ? 1
                      : (f.n == 5 && f.m == 3) ? 2
                                               : -1;
  if (pairIdx >= 0) {
    const auto& fr = frozenByPair[pairIdx];
    for (std::size_t k = 0; k < fr.size(); ++k)
      rep.checks.push_back(
          makeCheck("coeff-" + std::to_string(k), toDouble(poly[k]), fr[k], 0.0));
  }
  rep.checks.push_back(makeCheck("degree", double(poly.size()) - 1.0, f.m, 0.0));
  rep.checks.push_back(makeCheck("leading-coeff", toDouble(poly.back()), 1.0, 0.0));

  int mismatches = 0;
  for (int ell = 0; ell <= std::max(8, f.degree); ++ell) {
    const ExactRational lam(ell * (ell + f.n - 1));
    ExactRational acc(0), pw(1);
    for (const auto& c : poly) {
      acc += c * pw;
      pw *= lam;
    }
    if (acc != gjmsEigenvalue(f.n, f.m, ell)) ++mismatches;
  }
  rep.checks.push_back(makeCheck("eigenvalues-match-expansion", mismatches, 0.0, 0.0));

  std::string csv = "k,coefficient\n";
  for (std::size_t k = 0; k < poly.size(); ++k)
    csv += std::to_string(k) + ',' + num(toDouble(poly[k])) + '\n';
  tables.push_back({"coefficients", csv});
}

void runGamma(const Flags& f, Report& rep, Tables& tables) {
  const int res = f.resolutionOr(128);
  const double g = computeGamma(f.n, f.m, res);
  const double closed = gammaClosedForm(f.n, f.m);
  rep.checks.push_back(makeCheck("gamma-vs-closed-form", g, closed, f.tolOr(1e-8)));

  // Pointwise inversion identity on the standard profile, sampled off-grid.
  const auto grid = buildPlaneGrid(f.n, res);
  const auto u = pullbackToPlane(constantOne(f.n), grid, f.m);
  const auto F = evalF(u, ProblemParams::unchecked(f.n, f.m, f.alpha, 0.0));
  const double e = 0.5 * (f.n - 2 * f.m);
  std::string csv = "r,lhs,rhs,rel_error\n";
  double worst = 0.0;
  for (int q = 1; q <= 20; ++q) {
    const double r = 0.5 * q;
    const double lhs = std::pow(conformalFactor(r), e);
    double rhs = 0.0;
    for (int j = 0; j < grid.size(); ++j)
      rhs += kernelSphericalMean(f.n, 2 * f.m - f.n, r, grid.r[j]) * F[j] * grid.W[j];
    rhs *= g;
    const double rel = std::abs(rhs - lhs) / std::abs(lhs);
    worst = std::max(worst, rel);
    csv += num(r) + ',' + num(lhs) + ',' + num(rhs) + ',' + num(rel) + '\n';
  }
  rep.checks.push_back(makeUpperBoundCheck("identity-max-rel-error", worst, f.tolOr(1e-8)));
  rep.checks.push_back(makeCheck("gamma-value", g, g, 0.0));
  tables.push_back({"identity", csv});
}

PicardResult solveDefault(const ProblemParams& params, const IeContext& ctx) {
  PicardOptions opts;
  opts.tol = 1e-9;
  opts.maxIter = 3000;
  const auto initial = scaledProfile(makeTrivialInitial(ctx), 1.3);
  return solvePicard(ctx, initial, opts);
}

void runSolveIe(const Flags& f, Report& rep, Tables& tables) {
  const auto params = ProblemParams::checked(f.n, f.m, f.alpha, f.eps);
  const auto ctx = makeIeContext(params, f.resolutionOr(128));
  const auto sol = solveDefault(params, ctx);

  rep.checks.push_back(makeCheck("picard-converged", sol.converged ? 1.0 : 0.0, 1.0, 0.0));
  rep.checks.push_back(
      makeUpperBoundCheck("final-ie-residual", sol.finalResidual, f.tolOr(1e-8)));
  const auto v = pushforwardToSphere(sol.u, ctx.grid);
  rep.checks.push_back(makeUpperBoundCheck(
      "mass-balance-residual", massBalanceResidual(v, params, ctx.grid.rule), 1e-8));
  const double mn = *std::min_element(sol.u.u.begin(), sol.u.u.end());
  rep.checks.push_back(makeLowerBoundCheck("profile-min", mn, 0.0));
  rep.checks.push_back(makeUpperBoundCheck("tail-mismatch", tailMismatch(sol.u), 0.1));
  const auto F = evalF(sol.u, params);
  rep.checks.push_back(
      makeUpperBoundCheck("source-decay-slope", decaySlope(F, sol.u), -2.0 * f.n + 0.75));

  tables.push_back({"trace", traceCsv(sol.trace)});
  tables.push_back({"profile", radialCsv(sol.u)});
}

void runMinimize(const Flags& f, Report& rep, Tables& tables) {
  const auto params = ProblemParams::checked(f.n, f.m, f.alpha, f.eps);
  const auto rule = buildQuadrature(f.n, f.resolution);
  const auto psi0 = seededInitialPsi(f.n, f.degree, f.seed);
  const auto res = minimizeQuotient(params, f.degree, rule, &psi0);

  rep.checks.push_back(makeCheck("minimize-converged", res.converged ? 1.0 : 0.0, 1.0, 0.0));
  rep.checks.push_back(makeCheck("value", res.value, res.value, 0.0));
  if (f.n == 2 * f.m - 1 && f.alpha != 1.0) {
    const double predicted = (1.0 - f.eps) * sharpConstant(f.n, f.m, f.alpha);
    rep.checks.push_back(
        makeCheck("value-vs-predicted", res.value, predicted, f.tolOr(1e-6)));
    const auto& vals = res.minimizer.values(rule);
    double dev = 0.0;
    for (double x : vals) dev = std::max(dev, std::abs(x / res.minimizer.a[0] - 1.0));
    rep.checks.push_back(makeUpperBoundCheck("constancy", dev, 1e-5));
  }
  if (res.converged) {
    // Pointwise residual of the stationarity equation amplifies rounding noise
    // by the degree-L operator norm, hence the coarser bound.
    rep.checks.push_back(makeUpperBoundCheck(
        "euler-lagrange-residual",
        eulerLagrangeResidual(res.minimizer, params, res.value, rule), 1e-3));
    const auto scaled = rescaleToMain(res.minimizer, params, res.value);
    rep.checks.push_back(makeUpperBoundCheck(
        "mass-balance-residual", massBalanceResidual(scaled, params, rule), 1e-6));
  }
  const auto& vals = res.minimizer.values(rule);
  rep.checks.push_back(makeLowerBoundCheck(
      "minimizer-min", *std::min_element(vals.begin(), vals.end()), 0.0));

  tables.push_back({"minimizer", zonalCsv(res.minimizer, rule)});
}

void runSweepLiouville(const Flags& f, Report& rep, Tables& tables) {
  const auto base = ProblemParams::unchecked(f.n, f.m, f.alpha, 0.0);
  const double crit = base.criticalAlpha();
  const double mid = 3.0 < crit ? 3.0 : 0.5 * (1.0 + crit);
  const std::vector<double> alphaGrid = {0.5, mid, crit};
  const auto rule = buildQuadrature(f.n, f.resolution);
  const auto cells = liouvilleSweep(kEpsGrid, alphaGrid, base, f.degree, rule, 5);

  for (const auto& cell : cells) {
    const auto tag = cellTag(cell.eps, cell.alpha);
    rep.checks.push_back(
        makeCheck(tag + "-converged", cell.converged ? 1.0 : 0.0, 1.0, 0.0));
    rep.checks.push_back(
        makeUpperBoundCheck(tag + "-constancy", cell.constancy, f.tolOr(1e-5)));
    if (std::isfinite(cell.predicted))
      rep.checks.push_back(makeCheck(tag + "-value", cell.value, cell.predicted, 1e-4));
  }
  tables.push_back({"liouville", sweepCsv(cells)});
}

void runSweepCompactness(const Flags& f, Report& rep, Tables& tables) {
  const auto base = ProblemParams::checked(f.n, f.m, f.alpha, 0.0);
  const auto rule = buildQuadrature(f.n, f.resolution);
  const auto cells = compactnessSweep(kEpsGrid, base, f.degree, rule);

  double ratio = 0.0;
  for (const auto& cell : cells) {
    const auto tag = cellTag(cell.eps, f.alpha);
    rep.checks.push_back(
        makeCheck(tag + "-converged", cell.converged ? 1.0 : 0.0, 1.0, 0.0));
    rep.checks.push_back(makeLowerBoundCheck(tag + "-min-positive", cell.minV, 0.0));
    if (cell.minV > 0.0) ratio = std::max(ratio, cell.maxV / cell.minV);
  }
  rep.checks.push_back(makeUpperBoundCheck("uniform-ratio", ratio, 1.0, f.tolOr(1e-4)));
  tables.push_back({"compactness", compactnessCsv(cells)});
}

void runCheckSobolev(const Flags& f, Report& rep, Tables& tables) {
  const auto rule = buildQuadrature(f.n, f.resolution);
  const auto suite = sobolevTrialSuite(f.n, f.m, f.alpha, f.trials, f.seed, rule, f.degree);
  rep.checks.push_back(makeCheck("violations", suite.violations, 0.0, 0.0));
  rep.checks.push_back(makeLowerBoundCheck(
      "min-slack", suite.minSlack, -f.tolOr(1e-10) * std::abs(suite.reference)));
  rep.checks.push_back(
      makeCheck("sharp-constant", suite.reference, sharpConstant(f.n, f.m, f.alpha), 0.0));
  rep.checks.push_back(
      makeCheck("worst-seed", double(suite.worstSeed), double(suite.worstSeed), 0.0));
  std::string csv = "name,value\ntrials," + std::to_string(suite.trials) +
                    "\nviolations," + std::to_string(suite.violations) + "\nmin_slack," +
                    num(suite.minSlack) + "\nworst_seed," +
                    std::to_string(suite.worstSeed) + '\n';
  tables.push_back({"suite", csv});
}

void runCheckLogSobolev(const Flags& f, Report& rep, Tables& tables) {
  const auto rule = buildQuadrature(f.n, f.resolution);
  const auto suite = logSobolevTrialSuite(f.n, f.m, f.trials, f.seed, rule, f.degree);
  rep.checks.push_back(makeCheck("violations", suite.violations, 0.0, 0.0));
  rep.checks.push_back(makeLowerBoundCheck(
      "min-slack", suite.minSlack, -f.tolOr(1e-10) * std::abs(suite.reference)));
  rep.checks.push_back(makeCheck("reference-e0", suite.reference,
                                 toDouble(gjmsEigenvalue(f.n, f.m, 0)), 0.0));
  std::string csv = "name,value\ntrials," + std::to_string(suite.trials) +
                    "\nviolations," + std::to_string(suite.violations) + "\nmin_slack," +
                    num(suite.minSlack) + "\nworst_seed," +
                    std::to_string(suite.worstSeed) + '\n';
  tables.push_back({"suite", csv});
}

void runCheckPohozaev(const Flags& f, Report& rep, Tables& tables) {
  const auto params = ProblemParams::checked(f.n, f.m, f.alpha, f.eps);
  const auto ctx = makeIeContext(params, f.resolutionOr(128));
  const auto sol = solveDefault(params, ctx);
  rep.checks.push_back(makeCheck("picard-converged", sol.converged ? 1.0 : 0.0, 1.0, 0.0));

  const auto poh = pohozaevResidual(sol.u, params, ctx.grid, ctx.gamma);
  // At the critical exponent the right side vanishes identically, so the
  // mass integral supplies the comparison scale.
  const double denom =
      std::max(std::abs(poh.rhs), 1e-2 * std::abs(poh.mass)) + 1e-14;
  const double residual = std::abs(poh.lhs - poh.rhs) / denom;
  rep.checks.push_back(makeUpperBoundCheck("pohozaev-residual", residual, f.tolOr(1e-6)));

  const auto decay =
      boundaryDecayCheck(sol.u, params, kDecayRadii, ctx.grid, ctx.gamma);
  rep.checks.push_back(makeCheck("boundary-decaying", decay.decaying ? 1.0 : 0.0, 1.0, 0.0));
  rep.checks.push_back(makeUpperBoundCheck(
      "boundary-decay-ratio", decay.rows.back().value / decay.rows.front().value, 1e-4));
  rep.checks.push_back(
      makeCheck("admissible-exponent", decay.admissibleExponent ? 1.0 : 0.0, 1.0, 0.0));
  rep.checks.push_back(
      makeCheck("tail-certified", decay.tailCertified ? 1.0 : 0.0, 1.0, 0.0));

  std::string csv = "R,value\n";
  for (const auto& row : decay.rows) csv += num(row.R) + ',' + num(row.value) + '\n';
  tables.push_back({"decay", csv});
}

void runCheckMovingPlane(const Flags& f, Report& rep, Tables& tables) {
  const auto params = ProblemParams::checked(f.n, f.m, f.alpha, f.eps);
  const auto ctx = makeIeContext(params, f.resolutionOr(128));
  const auto sol = solveDefault(params, ctx);
  rep.checks.push_back(makeCheck("picard-converged", sol.converged ? 1.0 : 0.0, 1.0, 0.0));

  const double wmin = movingPlaneMin(sol.u, ctx.grid, kPlaneOffsets);
  rep.checks.push_back(makeLowerBoundCheck("w-min", wmin, -f.tolOr(1e-10)));

  const auto fc = fComparisonCheck(sol.u, params, ctx.grid, kPlaneOffsets);
  rep.checks.push_back(makeCheck("f-lambdas-skipped", fc.skipped, 0.0, 0.0));
  rep.checks.push_back(makeLowerBoundCheck("f-comparison-min", fc.minOverChecked, -1e-8));

  std::string csv = "lambda,checked,min_diff\n";
  for (const auto& row : fc.rows)
    csv += num(row.lambda) + ',' + (row.checked ? '1' : '0') + ',' +
           num(row.checked ? row.minDiff : 0.0) + '\n';
  tables.push_back({"fcomparison", csv});
}

void runCheckChain(const Flags& f, Report& rep, Tables& tables) {
  const double beta = f.alpha > 1.0 ? f.alpha : 3.0;
  const double a = f.alpha < 1.0 ? f.alpha : 0.5;
  const auto rule = buildQuadrature(f.n, f.resolution);

  const auto eq = chainVerify(f.n, f.m, beta, a, 1, f.seed, rule, f.degree, 0.0);
  double worstEq = 0.0;
  for (const auto& s : eq.steps) worstEq = std::max(worstEq, std::abs(s.minSlack));
  rep.checks.push_back(makeUpperBoundCheck("equality-at-constant", worstEq, 1e-12));

  // The chain hypothesis needs negative energy; high-degree wiggles at large
  // amplitude push the quadratic form positive and every trial gets skipped.
  const int L = std::min(f.degree, 16);
  const auto ch = chainVerify(f.n, f.m, beta, a, f.trials, f.seed, rule, L, 0.1);
  for (const auto& s : ch.steps)
    rep.checks.push_back(makeCheck(s.name + "-violations", s.violations, 0.0, 0.0));
  rep.checks.push_back(makeLowerBoundCheck("checked-trials", ch.checked, 1.0));

  std::string csv = "step,violations,min_slack\n";
  for (const auto& s : ch.steps)
    csv += s.name + ',' + std::to_string(s.violations) + ',' + num(s.minSlack) + '\n';
  tables.push_back({"chain", csv});
}

// Cross-module properties exercised only by `all`.
void runProperties(const Flags& f, Report& rep) {
  const auto rule = buildQuadrature(f.n, 48);
  const auto params = ProblemParams::checked(f.n, f.m, f.alpha, f.eps);

  const int L = 8;
  const auto psi = seededInitialPsi(f.n, L, f.seed + 1, 0.4);
  const auto G = quotientGradientFromPsi(psi, params, rule);
  double gsup = 0.0;
  for (double g : G) gsup = std::max(gsup, std::abs(g));
  double worstFd = 0.0;
  const double h = 1e-5;
  for (int l = 0; l <= L; ++l) {
    auto plus = psi;
    auto minus = psi;
    plus.a[l] += h;
    minus.a[l] -= h;
    plus.cacheN = minus.cacheN = 0;
    const double fd =
        (quotientFromPsi(plus, params, rule) - quotientFromPsi(minus, params, rule)) /
        (2.0 * h);
    worstFd = std::max(worstFd, std::abs(fd - G[l]) / std::max(1.0, gsup));
  }
  rep.checks.push_back(makeUpperBoundCheck("gradient-fd-max-rel", worstFd, 1e-6));

  const auto phi = randomPositiveZonal(f.n, f.seed + 2, 16, 0.8, rule);
  const auto back = analyze(synthesize(phi, rule), rule, phi.degree());
  double rt = 0.0;
  for (std::size_t l = 0; l < phi.a.size(); ++l)
    rt = std::max(rt, std::abs(back.a[l] - phi.a[l]));
  rep.checks.push_back(makeUpperBoundCheck("analyze-synthesize-roundtrip", rt, 1e-12));

  const auto grid = buildPlaneGrid(f.n, 64);
  ZonalFunction wobble;
  wobble.n = f.n;
  wobble.a = {1.0, 0.2};
  const auto u = pullbackToPlane(wobble, grid, f.m);
  const auto ukk = kelvin(kelvin(u));
  double inv = 0.0;
  for (int i = 0; i < grid.size(); ++i)
    inv = std::max(inv, std::abs(ukk.u[i] - u.u[i]) / std::abs(u.u[i]));
  rep.checks.push_back(makeUpperBoundCheck("kelvin-involution", inv, 1e-10));

  double spectral = 0.0;
  for (int l = 0; l <= phi.degree(); ++l)
    spectral += zonalBasisNormSq(f.n, l) * phi.a[l] * phi.a[l];
  const double direct = lebesgueIntegral(phi, 2.0, rule);
  rep.checks.push_back(makeUpperBoundCheck(
      "parseval", std::abs(spectral - direct) / std::abs(direct), 1e-10));
}

using Handler = void (*)(const Flags&, Report&, Tables&);

struct CommandSpec {
  const char* name;
  const char* help;
  Handler handler;
};

void runAll(const Flags& f, Report& rep, Tables& tables);

const CommandSpec kCommands[] = {
    {"constants",
     "Exact operator constants: curvature, eigenvalues, expansion identities",
     runConstants},
    {"expand",
     "Expansion of the order-2m operator in powers of the positive Laplacian",
     runExpand},
    {"gamma",
     "Inversion constant of the flat-space kernel and its pointwise identity",
     runGamma},
    {"solve-ie",
     "Damped fixed-point solve of the radial integral equation",
     runSolveIe},
    {"minimize",
     "Descent on the perturbed quotient over positive axially symmetric functions",
     runMinimize},
    {"sweep-liouville",
     "Minimizer constancy across an (eps, alpha) grid, 5 seeded starts per cell",
     runSweepLiouville},
    {"sweep-compactness",
     "Uniform min/max bounds of rescaled minimizers across the eps grid",
     runSweepCompactness},
    {"check-sobolev",
     "Random-trial verification of the sharp quotient inequality",
     runCheckSobolev},
    {"check-logsobolev",
     "Random-trial verification of the logarithmic limit inequality",
     runCheckLogSobolev},
    {"check-pohozaev",
     "Dilation-field identity and boundary-flux decay on a solved profile",
     runCheckPohozaev},
    {"check-moving-plane",
     "Reflection monotonicity of the solved profile and its source term",
     runCheckMovingPlane},
    {"check-chain",
     "Endpoint-to-endpoint inequality chain on random positive trials",
     runCheckChain},
    {"all",
     "Every check suite in sequence, plus cross-module property checks",
     runAll},
};

void runAll(const Flags& f, Report& rep, Tables& tables) {
  for (const auto& cmdDef : kCommands) {
    const std::string name = cmdDef.name;
    if (name == "all") continue;
    Report sub;
    sub.params = rep.params;
    sub.seed = rep.seed;
    Tables subTables;
    cmdDef.handler(f, sub, subTables);
    for (auto& rec : sub.checks) {
      rec.name = name + "/" + rec.name;
      rep.checks.push_back(std::move(rec));
    }
    for (auto& t : subTables) tables.push_back({name + "-" + t.first, t.second});
  }
  Report props;
  props.params = rep.params;
  runProperties(f, props);
  for (auto& rec : props.checks) {
    rec.name = "properties/" + rec.name;
    rep.checks.push_back(std::move(rec));
  }
}

std::string stemOf(const std::string& path) {
  const auto dot = path.find_last_of('.');
  const auto sep = path.find_last_of('/');
  if (dot == std::string::npos || (sep != std::string::npos && dot < sep)) return path;
  return path.substr(0, dot);
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ComputationError("cannot open output file: " + path);
  out << content;
  if (!out) throw ComputationError("failed writing output file: " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for higher-order conformal operators on odd spheres"};
  app.require_subcommand(1);

  Flags f;
  app.add_option("--n", f.n, "sphere dimension, odd and >= 3")->capture_default_str();
  app.add_option("--m", f.m, "half the operator order, 2m > n")->capture_default_str();
  app.add_option("--alpha", f.alpha, "inverse-power exponent")->capture_default_str();
  app.add_option("--eps", f.eps, "perturbation strength in [0, 1)")->capture_default_str();
  app.add_option("--degree", f.degree, "spectral degree for expansions and descent")
      ->capture_default_str();
  auto* resOpt =
      app.add_option("--resolution", f.resolution,
                     "quadrature nodes (kernel commands default to 128 when unset)");
  resOpt->capture_default_str();
  app.add_option("--trials", f.trials, "random trials per suite")->capture_default_str();
  app.add_option("--seed", f.seed, "base RNG seed")->capture_default_str();
  app.add_option("--tol", f.tol, "override the headline tolerance (0 keeps the default)")
      ->capture_default_str();
  app.add_option("--out", f.out, "write the report here instead of standard output");
  app.add_option("--format", f.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  for (const auto& cmdDef : kCommands) app.add_subcommand(cmdDef.name, cmdDef.help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "Usage: gjms [OPTIONS] SUBCOMMAND (see gjms --help)\n";
    return 2;
  }
  f.resolutionSet = resOpt->count() > 0;

  const std::string cmd = app.get_subcommands().front()->get_name();
  Report rep;
  rep.command = cmd;
  rep.seed = f.seed;
  try {
    rep.params = ProblemParams::unchecked(f.n, f.m, f.alpha, f.eps);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n\n" << app.help();
    return 2;
  }

  Tables tables;
  const Handler handler = [&cmd]() {
    for (const auto& cmdDef : kCommands)
      if (cmd == cmdDef.name) return cmdDef.handler;
    return Handler(nullptr);
  }();

  try {
    handler(f, rep, tables);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    rep.checks.push_back(makeCheck("run-completed", 0.0, 1.0, 0.0));
  }
  rep.stampNow();

  std::string payload;
  if (f.format == "csv") {
    payload = tables.empty() ? rep.toCsv() : tables.front().second;
  } else {
    if (!f.out.empty()) {
      const auto stem = stemOf(f.out);
      for (const auto& t : tables) {
        const auto path = stem + "-" + t.first + ".csv";
        writeFile(path, t.second);
        rep.artifacts.push_back(path);
      }
    }
    payload = rep.toJson();
  }
  try {
    if (f.out.empty())
      std::cout << payload;
    else
      writeFile(f.out, payload);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return rep.allPass() ? 0 : 1;
}
