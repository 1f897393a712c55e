#include "doctest.h"

#include "gjms/constants.hpp"
#include "gjms/errors.hpp"
#include "gjms/quadrature.hpp"
#include "gjms/rng.hpp"
#include "gjms/zonal.hpp"

#include <cmath>
#include <numbers>

using namespace gjms;

namespace {
constexpr double kPi = std::numbers::pi;

ZonalFunction randomCoeffs(int n, int L, std::uint64_t seed) {
  DeterministicRng rng(seed);
  ZonalFunction f;
  f.n = n;
  f.a.resize(L + 1);
  for (auto& c : f.a) c = rng.uniformSym();
  return f;
}

}  // namespace

TEST_CASE("quadrature mass reproduces sphere area") {
  for (int N : {4, 8, 64, 128}) {
    const auto rule = buildQuadrature(3, N);
    CHECK(rule.mass() * sphereSurfaceArea(2) ==
          doctest::Approx(sphereSurfaceArea(3)).epsilon(1e-12));
  }
  const auto r5 = buildQuadrature(5, 48);
  CHECK(r5.mass() * sphereSurfaceArea(4) == doctest::Approx(sphereSurfaceArea(5)).epsilon(1e-12));
}

TEST_CASE("quadrature second moment, n = 3") {
  const auto rule = buildQuadrature(3, 8);
  double m2 = 0.0;
  for (int j = 0; j < rule.N; ++j) m2 += rule.w[j] * rule.t[j] * rule.t[j];
  // int t^2 sqrt(1-t^2) dt = pi/8, a Beta-function moment.
  CHECK(m2 == doctest::Approx(kPi / 8.0).epsilon(1e-13));
}

TEST_CASE("quadrature odd moments vanish, n = 5") {
  const auto rule = buildQuadrature(5, 8);
  for (int k : {1, 3, 5}) {
    double mo = 0.0;
    for (int j = 0; j < rule.N; ++j) mo += rule.w[j] * std::pow(rule.t[j], k);
    CHECK(std::abs(mo) < 1e-15);
  }
}

TEST_CASE("quadrature exactness at degree 2N-1 and node structure") {
  const auto rule = buildQuadrature(3, 6);
  double m10 = 0.0;
  for (int j = 0; j < rule.N; ++j) m10 += rule.w[j] * std::pow(rule.t[j], 10);
  const double exact =
      std::tgamma(5.5) * std::tgamma(1.5) / std::tgamma(7.0);  // Beta(11/2, 3/2)
  CHECK(m10 == doctest::Approx(exact).epsilon(1e-13));

  for (int j = 0; j + 1 < rule.N; ++j) CHECK(rule.t[j] < rule.t[j + 1]);
  for (int j = 0; j < rule.N; ++j) {
    CHECK(rule.w[j] > 0.0);
    CHECK(rule.t[j] == -rule.t[rule.N - 1 - j]);
  }
  CHECK_THROWS(buildQuadrature(3, 3));
  CHECK_THROWS(buildQuadrature(1, 8));
}

TEST_CASE("large rules still satisfy the mass invariant") {
  for (int N : {256, 512, 1024}) {
    const auto rule = buildQuadrature(3, N);
    CHECK(rule.mass() * sphereSurfaceArea(2) ==
          doctest::Approx(sphereSurfaceArea(3)).epsilon(1e-12));
  }
}

TEST_CASE("synthesis basics") {
  const auto rule = buildQuadrature(3, 16);
  ZonalFunction one{3, {1.0}};
  for (double v : synthesize(one, rule)) CHECK(v == 1.0);

  ZonalFunction mode1{3, {0.0, 1.0}};
  const auto vals = synthesize(mode1, rule);
  for (int j = 0; j < rule.N; ++j) CHECK(vals[j] == doctest::Approx(2.0 * rule.t[j]).epsilon(1e-15));
}

TEST_CASE("analyze inverts synthesize") {
  const auto rule = buildQuadrature(3, 24);
  ZonalFunction ones{3, {1.0}};
  auto back = analyze(synthesize(ones, rule), rule, 5);
  CHECK(back.a[0] == doctest::Approx(1.0).epsilon(1e-14));
  for (int l = 1; l <= 5; ++l) CHECK(std::abs(back.a[l]) < 1e-14);

  std::vector<double> grid(rule.N);
  for (int j = 0; j < rule.N; ++j) grid[j] = 2.0 * rule.t[j];
  auto mode = analyze(grid, rule, 4);
  CHECK(std::abs(mode.a[0]) < 1e-15);
  CHECK(mode.a[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(mode.a[2]) < 1e-14);

  for (std::uint64_t seed : {7ull, 8ull, 9ull}) {
    const auto f = randomCoeffs(3, rule.N - 1, seed);
    const auto rt = analyze(synthesize(f, rule), rule, rule.N - 1);
    for (int l = 0; l <= f.degree(); ++l)
      CHECK(rt.a[l] == doctest::Approx(f.a[l]).epsilon(1e-12));
  }
  CHECK_THROWS(analyze(std::vector<double>(rule.N, 1.0), rule, rule.N));
}

TEST_CASE("five-sphere round trip") {
  const auto rule = buildQuadrature(5, 20);
  const auto f = randomCoeffs(5, 12, 3);
  const auto rt = analyze(synthesize(f, rule), rule, 12);
  for (int l = 0; l <= 12; ++l) CHECK(rt.a[l] == doctest::Approx(f.a[l]).epsilon(1e-12));
}

TEST_CASE("operator application is diagonal") {
  ZonalFunction one{3, {1.0}};
  CHECK(applyGjms(one, 2).a[0] == doctest::Approx(-15.0 / 16.0).epsilon(1e-16));
  CHECK(applyGjms(one, 3).a[0] == doctest::Approx(315.0 / 64.0).epsilon(1e-16));
  ZonalFunction mode1{3, {0.0, 0.3}};
  CHECK(applyGjms(mode1, 2).a[1] == doctest::Approx(0.3 * 105.0 / 16.0).epsilon(1e-15));
}

TEST_CASE("energy closed values") {
  ZonalFunction one{3, {1.0}};
  CHECK(energy(one, 2) ==
        doctest::Approx(-15.0 / 16.0 * 2.0 * kPi * kPi).epsilon(1e-14));

  // f(theta) = cos(theta) has a_1 = 1/2 against C_1(t) = 2t. Its squared norm
  // is |S^2| * int t^2 sqrt(1-t^2) dt = 4pi * pi/8 = pi^2/2, so the quadratic
  // form evaluates to (105/16) * pi^2/2 = 105 pi^2 / 32.
  ZonalFunction cosTheta{3, {0.0, 0.5}};
  const double normSq = sphereSurfaceArea(2) * (kPi / 8.0);
  CHECK(normSq == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-15));
  CHECK(energy(cosTheta, 2) == doctest::Approx(105.0 / 16.0 * normSq).epsilon(1e-14));
  CHECK(energy(cosTheta, 2) == doctest::Approx(105.0 * kPi * kPi / 32.0).epsilon(1e-14));
}

TEST_CASE("energy shift bilinearity") {
  const auto f = randomCoeffs(3, 9, 11);
  const double c = 0.7;
  ZonalFunction g = f;
  g.a[0] += c;
  const double e0 = -15.0 / 16.0;
  const double s3 = sphereSurfaceArea(3);
  // The difference cancels two much larger energies, so precision is capped
  // by |energy| / |difference| times machine epsilon.
  CHECK(energy(g, 2) - energy(f, 2) ==
        doctest::Approx(e0 * s3 * (c * c + 2.0 * c * f.a[0])).epsilon(1e-9));
}

TEST_CASE("energy is nonnegative on mean-zero functions") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
    auto f = randomCoeffs(3, 15, seed);
    f.a[0] = 0.0;
    CHECK(energy(f, 2) >= 0.0);
    CHECK(energy(f, 3) >= 0.0);
  }
}

TEST_CASE("lebesgue integrals") {
  const auto rule = buildQuadrature(3, 32);
  ZonalFunction c{3, {2.5}};
  CHECK(lebesgueIntegral(c, 3.0, rule) ==
        doctest::Approx(std::pow(2.5, 3.0) * sphereSurfaceArea(3)).epsilon(1e-13));

  ZonalFunction one{3, {1.0}};
  CHECK(lebesgueIntegral(one, -6.0, rule) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-13));

  // (1 + 0.1 cos theta)^2 integrates to |S^3| (1 + 0.01/4): the mean of t^2 is 1/4.
  ZonalFunction near1{3, {1.0, 0.05}};
  CHECK(lebesgueIntegral(near1, 2.0, rule) ==
        doctest::Approx(sphereSurfaceArea(3) * (1.0 + 0.01 / 4.0)).epsilon(1e-13));

  ZonalFunction touchesZero{3, {1.0, 0.5}};  // 1 + t has grid values near 0 but positive
  CHECK_NOTHROW(lebesgueIntegral(touchesZero, -1.0, rule));
  ZonalFunction negative{3, {0.5, 0.5}};  // 0.5 + t dips negative
  CHECK_THROWS_AS(lebesgueIntegral(negative, -2.0, rule), std::domain_error);
}

TEST_CASE("parseval") {
  const auto rule = buildQuadrature(3, 32);
  const auto f = randomCoeffs(3, 16, 21);
  double spectral = 0.0;
  for (int l = 0; l <= f.degree(); ++l)
    spectral += zonalBasisNormSq(3, l) * f.a[l] * f.a[l];
  CHECK(lebesgueIntegral(f, 2.0, rule) == doctest::Approx(spectral).epsilon(1e-10));
}

TEST_CASE("spectral and pointwise energy routes agree") {
  const auto rule = buildQuadrature(3, 48);
  auto f = randomCoeffs(3, 20, 33);
  f.a[0] += 3.0;
  const auto fv = synthesize(f, rule);
  const auto pfv = synthesize(applyGjms(f, 2), rule);
  double viaGrid = 0.0;
  for (int j = 0; j < rule.N; ++j) viaGrid += rule.w[j] * fv[j] * pfv[j];
  viaGrid *= sphereSurfaceArea(2);
  CHECK(energy(f, 2) == doctest::Approx(viaGrid).epsilon(1e-10));
}

TEST_CASE("sobolev quotient at constants and scale invariance") {
  const auto rule = buildQuadrature(3, 64);
  const auto sharp = sharpConstant(3, 2, 7.0);

  ZonalFunction one{3, {1.0}};
  const auto p0 = ProblemParams::checked(3, 2, 7.0, 0.0);
  CHECK(sobolevQuotient(one, p0, rule) == doctest::Approx(sharp).epsilon(1e-13));

  ZonalFunction five{3, {5.0}};
  CHECK(sobolevQuotient(five, p0, rule) == doctest::Approx(sharp).epsilon(1e-13));

  const auto p1 = ProblemParams::checked(3, 2, 7.0, 0.1);
  CHECK(sobolevQuotient(one, p1, rule) == doctest::Approx(0.9 * sharp).epsilon(1e-13));

  auto f = randomPositiveZonal(3, 5, 10, 0.5, rule);
  const double base = sobolevQuotient(f, p1, rule);
  for (double scale : {0.1, 10.0}) {
    ZonalFunction g = f;
    for (auto& cc : g.a) cc *= scale;
    g.cacheN = 0;  // coefficients changed; drop the copied value cache
    CHECK(sobolevQuotient(g, p1, rule) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("sobolev inequality direction on seeded trials") {
  const auto rule = buildQuadrature(3, 64);
  const auto p0 = ProblemParams::checked(3, 2, 7.0, 0.0);
  const double sharp = sharpConstant(3, 2, 7.0);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto f = randomPositiveZonal(3, seed, 24, 0.8, rule);
    CHECK(sobolevQuotient(f, p0, rule) >= sharp - 1e-10 * std::abs(sharp));
  }
}

TEST_CASE("log quotient") {
  const auto rule = buildQuadrature(3, 64);
  ZonalFunction one{3, {1.0}};
  CHECK(logSobolevQuotient(one, 2, rule) == doctest::Approx(-15.0 / 16.0).epsilon(1e-13));
  ZonalFunction c{3, {4.2}};
  CHECK(logSobolevQuotient(c, 2, rule) == doctest::Approx(-15.0 / 16.0).epsilon(1e-13));

  ZonalFunction wobble{3, {1.0, 0.1}};  // 1 + 0.2 cos(theta)
  const double q = logSobolevQuotient(wobble, 2, rule);
  CHECK(q >= -15.0 / 16.0);
  // An independent higher-resolution evaluation must agree.
  const auto fine = buildQuadrature(3, 256);
  CHECK(q == doctest::Approx(logSobolevQuotient(wobble, 2, fine)).epsilon(1e-10));
}

TEST_CASE("random positive zonal sampler") {
  const auto rule = buildQuadrature(3, 48);
  const auto flat = randomPositiveZonal(3, 9, 12, 0.0, rule);
  CHECK(flat.a[0] == 1.0);
  for (int l = 1; l <= flat.degree(); ++l) CHECK(flat.a[l] == 0.0);

  const auto f1 = randomPositiveZonal(3, 1234, 16, 0.6, rule);
  const auto f2 = randomPositiveZonal(3, 1234, 16, 0.6, rule);
  for (int l = 0; l <= f1.degree(); ++l) CHECK(f1.a[l] == f2.a[l]);

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto f = randomPositiveZonal(3, seed, 10, 0.9, rule);
    double mn = 1e300;
    for (double v : synthesize(f, rule)) mn = std::min(mn, v);
    CHECK(mn > 0.0);
    CHECK(mn >= 1.0 - 0.9 - 1e-12);
  }
}

TEST_CASE("antipodal reflection flips odd modes") {
  const auto rule = buildQuadrature(3, 24);
  const auto f = randomCoeffs(3, 7, 77);
  const auto g = antipodalReflect(f);
  for (int j = 0; j < rule.N; ++j) {
    const double left = synthesizeAt(f, -rule.t[j]);
    const double right = synthesizeAt(g, rule.t[j]);
    CHECK(left == doctest::Approx(right).epsilon(1e-13));
  }
}

TEST_CASE("csv dump shape") {
  const auto rule = buildQuadrature(3, 8);
  ZonalFunction one{3, {1.0}};
  const auto csv = zonalCsv(one, rule);
  CHECK(csv.rfind("t,theta,value\n", 0) == 0);
  int rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == 9);
}
