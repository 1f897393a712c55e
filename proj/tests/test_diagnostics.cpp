#include "doctest.h"

#include "gjms/constants.hpp"
#include "gjms/diagnostics.hpp"
#include "gjms/errors.hpp"
#include "gjms/radial_ie.hpp"
#include "gjms/stereo.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace gjms;

namespace {
constexpr double kPi = std::numbers::pi;

RadialProfile bubbleProfile(int n, int m, const PlaneGrid& grid) {
  ZonalFunction one;
  one.n = n;
  one.a = {1.0};
  return pullbackToPlane(one, grid, m);
}

}  // namespace

TEST_CASE("pohozaev: critical exponent makes both sides vanish") {
  const auto grid = buildPlaneGrid(3, 128);
  const auto u = bubbleProfile(3, 2, grid);
  const auto params = ProblemParams::checked(3, 2, 7.0, 0.0);
  const auto res = pohozaevResidual(u, params, grid, gammaClosedForm(3, 2));
  // c_alpha = 0 kills the radial derivative of Q pointwise, not just the sum.
  CHECK(res.lhs == 0.0);
  CHECK(res.rhs == 0.0);
  CHECK(res.residual == 0.0);
}

TEST_CASE("pohozaev: subcritical bubble, closed value on both sides") {
  const auto grid = buildPlaneGrid(3, 128);
  const auto u = bubbleProfile(3, 2, grid);
  const auto params = ProblemParams::checked(3, 2, 3.0, 0.0);
  const auto res = pohozaevResidual(u, params, grid, gammaClosedForm(3, 2));
  const double expect = -15.0 * kPi / 32.0;
  CHECK(res.lhs == doctest::Approx(expect).epsilon(1e-9));
  CHECK(res.rhs == doctest::Approx(expect).epsilon(1e-9));
  CHECK(res.residual < 1e-10);
}

TEST_CASE("pohozaev: solver output satisfies the identity") {
  const auto params = ProblemParams::checked(3, 2, 3.0, 0.2);
  const auto ctx = makeIeContext(params, 128);
  PicardOptions opts;
  opts.tol = 1e-10;
  opts.maxIter = 600;
  const auto sol = solvePicard(ctx, makeBubbleInitial(ctx), opts);
  REQUIRE(sol.converged);
  const auto res = pohozaevResidual(sol.u, params, ctx.grid, ctx.gamma);
  CHECK(res.residual < 1e-6);
}

TEST_CASE("pohozaev rejects alpha = 1 and uncertified tails") {
  const auto grid = buildPlaneGrid(3, 64);
  const auto u = bubbleProfile(3, 2, grid);
  CHECK_THROWS_AS(
      pohozaevResidual(u, ProblemParams::unchecked(3, 2, 1.0, 0.1), grid,
                       gammaClosedForm(3, 2)),
      std::invalid_argument);
  auto bad = u;
  bad.tailA *= 2.0;
  CHECK_THROWS_AS(pohozaevResidual(bad, ProblemParams::checked(3, 2, 3.0, 0.1), grid,
                                   gammaClosedForm(3, 2)),
                  ComputationError);
}

TEST_CASE("boundary decay: bubble flux falls like (2R/(1+R^2))^3") {
  const auto grid = buildPlaneGrid(3, 128);
  const auto u = bubbleProfile(3, 2, grid);
  const auto params = ProblemParams::checked(3, 2, 3.0, 0.0);
  const std::vector<double> Rlist = {1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0};
  const auto res = boundaryDecayCheck(u, params, Rlist, grid, gammaClosedForm(3, 2));
  REQUIRE(res.rows.size() == Rlist.size());
  CHECK(res.rows.front().value == doctest::Approx(15.0 / 32.0).epsilon(1e-9));
  for (std::size_t i = 0; i < Rlist.size(); ++i) {
    const double shape = std::pow(2.0 * Rlist[i] / (1.0 + Rlist[i] * Rlist[i]), 3.0);
    CHECK(res.rows[i].value ==
          doctest::Approx(15.0 / 32.0 * shape).epsilon(1e-8));
  }
  CHECK(res.decaying);
  CHECK(res.admissibleExponent);
  CHECK(res.tailCertified);
  CHECK_FALSE(res.flagged());
  CHECK(res.rows.back().value < 1e-4 * res.rows.front().value);
}

TEST_CASE("boundary decay: exponent beyond critical is flagged") {
  const auto grid = buildPlaneGrid(3, 128);
  const auto u = bubbleProfile(3, 2, grid);
  const auto params = ProblemParams::unchecked(3, 2, 7.5, 0.0);
  const auto res =
      boundaryDecayCheck(u, params, {1.0, 10.0, 100.0}, grid, gammaClosedForm(3, 2));
  CHECK_FALSE(res.admissibleExponent);
  CHECK(res.flagged());
}

TEST_CASE("boundary decay: tampered tail coefficient is flagged") {
  const auto grid = buildPlaneGrid(3, 128);
  auto u = bubbleProfile(3, 2, grid);
  u.tailA *= 3.0;
  const auto params = ProblemParams::checked(3, 2, 3.0, 0.0);
  const auto res =
      boundaryDecayCheck(u, params, {1.0, 10.0, 100.0}, grid, gammaClosedForm(3, 2));
  CHECK_FALSE(res.tailCertified);
  CHECK(res.flagged());
}

TEST_CASE("moving plane: radially increasing bubble keeps w nonnegative") {
  const auto grid = buildPlaneGrid(3, 128);
  const auto u = bubbleProfile(3, 2, grid);
  const double mn = movingPlaneMin(u, grid, {0.1, 0.5, 1.0, 2.0});
  CHECK(mn >= -1e-12);
}

TEST_CASE("moving plane: lambda = 0 is an exact symmetry") {
  const auto grid = buildPlaneGrid(3, 64);
  const auto u = bubbleProfile(3, 2, grid);
  CHECK(movingPlaneMin(u, grid, {0.0}) == 0.0);
}

TEST_CASE("moving plane: off-center bump is detected") {
  auto bump = [](double x1, double rho) {
    const double d2 = (x1 - 1.0) * (x1 - 1.0) + rho * rho;
    return std::exp(-d2);
  };
  CHECK(movingPlaneMin(bump, {2.0}) < -1e-3);
}

TEST_CASE("F-comparison on the bubble and on solver output") {
  const auto grid = buildPlaneGrid(3, 128);
  const auto u = bubbleProfile(3, 2, grid);
  const std::vector<double> lambdas = {0.1, 0.5, 1.0, 2.0};

  const auto free = fComparisonCheck(u, ProblemParams::checked(3, 2, 3.0, 0.0), grid, lambdas);
  CHECK(free.skipped == 0);
  for (const auto& row : free.rows) CHECK(row.checked);
  CHECK(free.minOverChecked >= -1e-12);

  const auto params = ProblemParams::checked(3, 2, 3.0, 0.1);
  const auto ctx = makeIeContext(params, 128);
  PicardOptions opts;
  opts.tol = 1e-10;
  opts.maxIter = 600;
  const auto sol = solvePicard(ctx, makeBubbleInitial(ctx), opts);
  REQUIRE(sol.converged);
  const auto perturbed = fComparisonCheck(sol.u, params, ctx.grid, lambdas);
  CHECK(perturbed.skipped == 0);
  CHECK(perturbed.minOverChecked >= -1e-8);
}

TEST_CASE("sobolev trial suite: zero violations across the exponent range") {
  const auto rule = buildQuadrature(3, 48);
  for (double alpha : {0.5, 3.0, 7.0}) {
    const auto rep = sobolevTrialSuite(3, 2, alpha, 200, 1000, rule, 16);
    CHECK(rep.trials == 200);
    CHECK(rep.violations == 0);
    CHECK(rep.reference == doctest::Approx(sharpConstant(3, 2, alpha)).epsilon(1e-14));
    CHECK(rep.minSlack >= -1e-10 * std::abs(rep.reference));
  }
  CHECK_THROWS_AS(sobolevTrialSuite(4, 2, 3.0, 10, 0, rule), std::invalid_argument);
}

TEST_CASE("log-sobolev trial suite: zero violations") {
  const auto rule = buildQuadrature(3, 48);
  const auto rep = logSobolevTrialSuite(3, 2, 200, 2000, rule, 16);
  CHECK(rep.trials == 200);
  CHECK(rep.violations == 0);
  CHECK(rep.reference == doctest::Approx(-15.0 / 16.0).epsilon(1e-15));
  CHECK(rep.minSlack >= -1e-10);
}

TEST_CASE("chain: equality throughout at the constant") {
  const auto rule = buildQuadrature(3, 48);
  const auto rep = chainVerify(3, 2, 3.0, 0.5, 3, 0, rule, 16, 0.0);
  CHECK(rep.checked == 3);
  CHECK(rep.skipped == 0);
  REQUIRE(rep.steps.size() == 4);
  CHECK(rep.steps[0].name == "hoelder");
  CHECK(rep.steps[1].name == "jensen");
  CHECK(rep.steps[2].name == "reverse-jensen");
  CHECK(rep.steps[3].name == "final");
  for (const auto& step : rep.steps) {
    CHECK(step.violations == 0);
    CHECK(std::abs(step.minSlack) < 1e-10);
  }
}

TEST_CASE("chain: random trials produce no violations") {
  const auto rule = buildQuadrature(3, 48);
  const auto rep = chainVerify(3, 2, 3.0, 0.5, 200, 3000, rule, 16, 0.1);
  CHECK(rep.trials == 200);
  CHECK(rep.checked + rep.skipped == 200);
  CHECK(rep.checked > 100);
  CHECK(rep.totalViolations() == 0);

  // Wilder trials may fail the sign convention; they must be skipped, never
  // counted against the steps.
  const auto wild = chainVerify(3, 2, 7.0, 0.25, 200, 4000, rule, 16, 0.8);
  CHECK(wild.checked + wild.skipped == 200);
  CHECK(wild.totalViolations() == 0);
}

TEST_CASE("chain rejects out-of-range exponents") {
  const auto rule = buildQuadrature(3, 16);
  CHECK_THROWS_AS(chainVerify(3, 2, 1.0, 0.5, 1, 0, rule), std::invalid_argument);
  CHECK_THROWS_AS(chainVerify(3, 2, 8.0, 0.5, 1, 0, rule), std::invalid_argument);
  CHECK_THROWS_AS(chainVerify(3, 2, 3.0, 1.5, 1, 0, rule), std::invalid_argument);
  CHECK_THROWS_AS(chainVerify(4, 2, 3.0, 0.5, 1, 0, rule), std::invalid_argument);
}

TEST_CASE("kelvin antisymmetry sits at roundoff") {
  const auto grid = buildPlaneGrid(3, 64);
  const auto u = bubbleProfile(3, 2, grid);
  const auto F32 = evalF(u, ProblemParams::checked(3, 2, 3.0, 0.0));
  CHECK(kelvinAntisymmetry(F32, grid, 2) < 1e-8);

  const auto u3 = bubbleProfile(3, 3, grid);
  const auto F33 = evalF(u3, ProblemParams::checked(3, 3, 2.0, 0.3));
  CHECK(kelvinAntisymmetry(F33, grid, 3) < 1e-8);
}
