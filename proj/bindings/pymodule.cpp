// Python bindings for the main operations: exact constants, the kernel
// inversion constant, the quotient minimizer, the radial fixed point, and the
// randomized inequality suites. Results cross the boundary as plain dicts and
// lists so the Python side stays dependency-free.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gjms/constants.hpp"
#include "gjms/diagnostics.hpp"
#include "gjms/params.hpp"
#include "gjms/quadrature.hpp"
#include "gjms/radial_ie.hpp"
#include "gjms/stereo.hpp"
#include "gjms/variational.hpp"
#include "gjms/zonal.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace gjms;

namespace {

std::vector<double> expandNumeric(int n, int m) {
  std::vector<double> out;
  for (const auto& c : expandGjmsPolynomial(n, m)) out.push_back(toDouble(c));
  return out;
}

std::vector<std::string> expandExact(int n, int m) {
  std::vector<std::string> out;
  for (const auto& c : expandGjmsPolynomial(n, m)) out.push_back(toString(c));
  return out;
}

py::dict minimizeDict(int n, int m, double alpha, double eps, int degree,
                      int resolution, std::uint64_t seed) {
  const auto params = ProblemParams::checked(n, m, alpha, eps);
  const auto rule = buildQuadrature(n, resolution);
  const auto psi0 = seededInitialPsi(n, degree, seed);
  const auto res = minimizeQuotient(params, degree, rule, &psi0);

  double constancy = 0.0;
  for (double v : res.minimizer.values(rule))
    constancy = std::max(constancy, std::abs(v / res.minimizer.a[0] - 1.0));

  py::dict out;
  out["value"] = res.value;
  out["converged"] = res.converged;
  out["iterations"] = res.iterations;
  out["constancy"] = constancy;
  out["coefficients"] = res.minimizer.a;
  if (n == 2 * m - 1 && alpha != 1.0)
    out["predicted"] = (1.0 - eps) * sharpConstant(n, m, alpha);
  return out;
}

py::dict solveDict(int n, int m, double alpha, double eps, int resolution,
                   double tol, int maxIter) {
  const auto params = ProblemParams::checked(n, m, alpha, eps);
  const auto ctx = makeIeContext(params, resolution);
  auto initial = makeTrivialInitial(ctx);
  for (double& x : initial.u) x *= 1.3;
  initial.tailA *= 1.3;
  PicardOptions opts;
  opts.tol = tol;
  opts.maxIter = maxIter;
  const auto sol = solvePicard(ctx, initial, opts);

  const auto v = pushforwardToSphere(sol.u, ctx.grid);
  py::dict out;
  out["converged"] = sol.converged;
  out["residual"] = sol.finalResidual;
  out["iterations"] = int(sol.trace.size());
  out["mass_balance"] = massBalanceResidual(v, params, ctx.grid.rule);
  out["r"] = sol.u.r;
  out["u"] = sol.u.u;
  out["tail_a"] = sol.u.tailA;
  return out;
}

py::dict pohozaevDict(int n, int m, double alpha, double eps, int resolution) {
  const auto params = ProblemParams::checked(n, m, alpha, eps);
  const auto ctx = makeIeContext(params, resolution);
  auto initial = makeTrivialInitial(ctx);
  for (double& x : initial.u) x *= 1.3;
  initial.tailA *= 1.3;
  PicardOptions opts;
  opts.tol = 1e-9;
  opts.maxIter = 3000;
  const auto sol = solvePicard(ctx, initial, opts);
  const auto p = pohozaevResidual(sol.u, params, ctx.grid, ctx.gamma);

  py::dict out;
  out["converged"] = sol.converged;
  out["lhs"] = p.lhs;
  out["rhs"] = p.rhs;
  out["mass"] = p.mass;
  out["residual"] = p.residual;
  return out;
}

py::dict suiteDict(const TrialSuiteReport& rep) {
  py::dict out;
  out["trials"] = rep.trials;
  out["violations"] = rep.violations;
  out["reference"] = rep.reference;
  out["min_slack"] = rep.minSlack;
  out["worst_seed"] = rep.worstSeed;
  return out;
}

py::dict chainDict(const ChainReport& rep) {
  py::dict out;
  out["trials"] = rep.trials;
  out["checked"] = rep.checked;
  out["skipped"] = rep.skipped;
  out["violations"] = rep.totalViolations();
  py::list steps;
  for (const auto& s : rep.steps) {
    py::dict step;
    step["name"] = s.name;
    step["violations"] = s.violations;
    step["min_slack"] = s.minSlack;
    steps.append(step);
  }
  out["steps"] = steps;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Numerical checks for higher-order conformal operators on odd spheres";

  mod.def("q_curvature", [](int n, int m) { return toDouble(qCurvature(n, m)); },
          py::arg("n"), py::arg("m"),
          "Curvature constant of the round n-sphere for the order-2m operator.");
  mod.def("q_curvature_exact",
          [](int n, int m) { return toString(qCurvature(n, m)); }, py::arg("n"),
          py::arg("m"), "Same constant as an exact fraction string.");
  mod.def("eigenvalue",
          [](int n, int m, int ell) { return toDouble(gjmsEigenvalue(n, m, ell)); },
          py::arg("n"), py::arg("m"), py::arg("ell"),
          "Operator eigenvalue on degree-ell spherical harmonics.");
  mod.def("expand_polynomial", &expandNumeric, py::arg("n"), py::arg("m"),
          "Coefficients of the operator in ascending powers of the positive "
          "Laplacian; leading coefficient 1.");
  mod.def("expand_polynomial_exact", &expandExact, py::arg("n"), py::arg("m"),
          "Same coefficients as exact fraction strings.");
  mod.def(
      "critical_alpha",
      [](int n, int m) { return ProblemParams::unchecked(n, m, 1.0, 0.0).criticalAlpha(); },
      py::arg("n"), py::arg("m"), "The exponent (n+2m)/(2m-n).");
  mod.def("sharp_constant", &sharpConstant, py::arg("n"), py::arg("m"),
          py::arg("alpha"),
          "Sharp constant of the quotient inequality; requires n = 2m-1.");
  mod.def("sphere_surface_area", &sphereSurfaceArea, py::arg("n"),
          "Surface area of the unit n-sphere.");

  mod.def("gamma_closed_form", &gammaClosedForm, py::arg("n"), py::arg("m"),
          "Inversion constant of the flat-space kernel, closed form.");
  mod.def("compute_gamma", &computeGamma, py::arg("n"), py::arg("m"),
          py::arg("resolution") = 128,
          "Inversion constant recovered numerically from the kernel itself.");

  mod.def("minimize_quotient", &minimizeDict, py::arg("n") = 3, py::arg("m") = 2,
          py::arg("alpha") = 7.0, py::arg("eps") = 0.1, py::arg("degree") = 24,
          py::arg("resolution") = 64, py::arg("seed") = 0,
          "Run the projected descent on the perturbed quotient from a seeded "
          "start; returns value, convergence flag, and minimizer data.");
  mod.def("solve_ie", &solveDict, py::arg("n") = 3, py::arg("m") = 2,
          py::arg("alpha") = 7.0, py::arg("eps") = 0.1, py::arg("resolution") = 128,
          py::arg("tol") = 1e-9, py::arg("max_iter") = 3000,
          "Damped fixed-point solve of the radial integral equation from a "
          "perturbed trivial branch; returns the profile and residuals.");
  mod.def("pohozaev", &pohozaevDict, py::arg("n") = 3, py::arg("m") = 2,
          py::arg("alpha") = 3.0, py::arg("eps") = 0.1, py::arg("resolution") = 128,
          "Solve the integral equation, then evaluate the dilation-field "
          "identity on the solution.");

  mod.def(
      "sobolev_suite",
      [](int n, int m, double alpha, int trials, std::uint64_t seed, int resolution) {
        const auto rule = buildQuadrature(n, resolution);
        return suiteDict(sobolevTrialSuite(n, m, alpha, trials, seed, rule));
      },
      py::arg("n") = 3, py::arg("m") = 2, py::arg("alpha") = 7.0,
      py::arg("trials") = 1000, py::arg("seed") = 0, py::arg("resolution") = 64,
      "Randomized trial suite for the quotient inequality.");
  mod.def(
      "log_sobolev_suite",
      [](int n, int m, int trials, std::uint64_t seed, int resolution) {
        const auto rule = buildQuadrature(n, resolution);
        return suiteDict(logSobolevTrialSuite(n, m, trials, seed, rule));
      },
      py::arg("n") = 3, py::arg("m") = 2, py::arg("trials") = 1000,
      py::arg("seed") = 0, py::arg("resolution") = 64,
      "Randomized trial suite for the logarithmic limit inequality.");
  mod.def(
      "chain_suite",
      [](int n, int m, double beta, double alpha, int trials, std::uint64_t seed,
         int resolution, int degree, double amplitude) {
        const auto rule = buildQuadrature(n, resolution);
        return chainDict(
            chainVerify(n, m, beta, alpha, trials, seed, rule, degree, amplitude));
      },
      py::arg("n") = 3, py::arg("m") = 2, py::arg("beta") = 3.0,
      py::arg("alpha") = 0.5, py::arg("trials") = 500, py::arg("seed") = 0,
      py::arg("resolution") = 64, py::arg("degree") = 16, py::arg("amplitude") = 0.1,
      "Step-by-step verification of the inequality chain between exponents.");
}
