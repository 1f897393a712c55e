#include "gjms/zonal.hpp"

#include "gjms/constants.hpp"
#include "gjms/errors.hpp"
#include "gjms/rng.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace gjms {

namespace {

void requireOddSphere(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("zonal calculus requires odd n >= 3");
}

double lambdaOf(int n) { return (n - 1) / 2.0; }

}  // namespace

const std::vector<double>& ZonalFunction::values(const QuadratureRule& rule) const {
  if (cacheN != rule.N || cache.size() != std::size_t(rule.N)) {
    cache = synthesize(*this, rule);
    cacheN = rule.N;
  }
  return cache;
}

double gegenbauerValue(int n, int ell, double t) {
  const double lam = lambdaOf(n);
  if (ell == 0) return 1.0;
  double cm = 1.0;
  double ck = 2.0 * lam * t;
  for (int l = 2; l <= ell; ++l) {
    const double cn = (2.0 * (l + lam - 1.0) * t * ck - (l + 2.0 * lam - 2.0) * cm) / l;
    cm = ck;
    ck = cn;
  }
  return ck;
}

void gegenbauerColumn(int n, int L, double t, std::vector<double>& out) {
  const double lam = lambdaOf(n);
  out.resize(L + 1);
  out[0] = 1.0;
  if (L == 0) return;
  out[1] = 2.0 * lam * t;
  for (int l = 2; l <= L; ++l)
    out[l] = (2.0 * (l + lam - 1.0) * t * out[l - 1] - (l + 2.0 * lam - 2.0) * out[l - 2]) / l;
}

double synthesizeAt(const ZonalFunction& f, double t) {
  const double lam = lambdaOf(f.n);
  const int L = f.degree();
  double acc = f.a[0];
  if (L == 0) return acc;
  double cm = 1.0;
  double ck = 2.0 * lam * t;
  acc += f.a[1] * ck;
  for (int l = 2; l <= L; ++l) {
    const double cn = (2.0 * (l + lam - 1.0) * t * ck - (l + 2.0 * lam - 2.0) * cm) / l;
    cm = ck;
    ck = cn;
    acc += f.a[l] * ck;
  }
  return acc;
}

ExactRational gegenbauerNormRationalPart(int n, int ell) {
  requireOddSphere(n);
  if (ell < 0) throw std::invalid_argument("ell must be >= 0");
  const int lam = (n - 1) / 2;
  // 2^{1-2 lam} (ell + 2 lam - 1)! / ( ell! (ell + lam) ((lam-1)!)^2 ), the
  // pi-free part of the weighted norm.
  ExactRational q = makeRational(1, 1);
  for (int i = 0; i < 2 * lam - 1; ++i) q /= 2;
  // (ell + 2 lam - 1)! / ell! = prod_{j=ell+1}^{ell+2lam-1} j
  for (int j = ell + 1; j <= ell + 2 * lam - 1; ++j) q *= j;
  q /= (ell + lam);
  ExactRational fact = 1;
  for (int j = 2; j <= lam - 1; ++j) fact *= j;
  q /= fact * fact;
  return q;
}

double gegenbauerWeightedNorm(int n, int ell) {
  return std::numbers::pi * toDouble(gegenbauerNormRationalPart(n, ell));
}

double zonalBasisNormSq(int n, int ell) {
  return sphereSurfaceArea(n - 1) * gegenbauerWeightedNorm(n, ell);
}

std::vector<double> synthesize(const ZonalFunction& f, const QuadratureRule& rule) {
  if (f.n != rule.n) throw std::invalid_argument("dimension mismatch");
  std::vector<double> vals(rule.N);
  for (int j = 0; j < rule.N; ++j) vals[j] = synthesizeAt(f, rule.t[j]);
  return vals;
}

ZonalFunction analyze(const std::vector<double>& values, const QuadratureRule& rule, int L,
                      bool quiet) {
  if (values.size() != std::size_t(rule.N)) throw std::invalid_argument("value count mismatch");
  if (L < 0 || L > rule.N - 1)
    throw std::invalid_argument("analysis degree must satisfy 0 <= L <= N-1");
  if (!quiet && L > 0.9 * (rule.N - 1))
    std::fprintf(stderr, "warning: analysis degree L=%d close to node count N=%d\n", L, rule.N);

  ZonalFunction f;
  f.n = rule.n;
  f.a.assign(L + 1, 0.0);
  std::vector<double> col;
  for (int j = 0; j < rule.N; ++j) {
    gegenbauerColumn(rule.n, L, rule.t[j], col);
    const double wv = rule.w[j] * values[j];
    for (int l = 0; l <= L; ++l) f.a[l] += wv * col[l];
  }
  for (int l = 0; l <= L; ++l) f.a[l] /= gegenbauerWeightedNorm(rule.n, l);
  return f;
}

ZonalFunction applyGjms(const ZonalFunction& f, int m) {
  ZonalFunction g;
  g.n = f.n;
  g.a.resize(f.a.size());
  for (int l = 0; l <= f.degree(); ++l)
    g.a[l] = toDouble(gjmsEigenvalue(f.n, m, l)) * f.a[l];
  return g;
}

double energy(const ZonalFunction& f, int m) {
  const double surf = sphereSurfaceArea(f.n - 1) * std::numbers::pi;
  double acc = 0.0;
  for (int l = 0; l <= f.degree(); ++l) {
    const double factor =
        toDouble(gjmsEigenvalue(f.n, m, l) * gegenbauerNormRationalPart(f.n, l));
    acc += factor * f.a[l] * f.a[l];
  }
  return surf * acc;
}

double lebesgueIntegralValues(const std::vector<double>& values, double p,
                              const QuadratureRule& rule, int n) {
  if (values.size() != std::size_t(rule.N)) throw std::invalid_argument("value count mismatch");
  if (p < 0.0) {
    for (double v : values)
      if (!(v > 0.0)) throw std::domain_error("negative power of a non-positive grid value");
  }
  double acc = 0.0;
  for (int j = 0; j < rule.N; ++j) acc += rule.w[j] * std::pow(values[j], p);
  return sphereSurfaceArea(n - 1) * acc;
}

double lebesgueIntegral(const ZonalFunction& f, double p, const QuadratureRule& rule) {
  return lebesgueIntegralValues(f.values(rule), p, rule, f.n);
}

double sobolevQuotient(const ZonalFunction& f, const ProblemParams& params,
                       const QuadratureRule& rule) {
  if (f.n != params.n || rule.n != params.n) throw std::invalid_argument("dimension mismatch");
  if (params.alpha == 1.0)
    throw std::invalid_argument("alpha = 1 excluded; use the log quotient");
  const auto& vals = f.values(rule);
  for (double v : vals)
    if (!(v > 0.0)) throw std::domain_error("quotient requires grid positivity");

  const double mass = lebesgueIntegralValues(vals, 1.0 - params.alpha, rule, params.n);
  const double fsq = lebesgueIntegralValues(vals, 2.0, rule, params.n);
  const double e0 = toDouble(gjmsEigenvalue(params.n, params.m, 0));
  const double total = energy(f, params.m) - params.eps * e0 * fsq;
  return std::pow(mass, 2.0 / (params.alpha - 1.0)) * total;
}

double logSobolevQuotient(const ZonalFunction& f, int m, const QuadratureRule& rule) {
  const auto& vals = f.values(rule);
  for (double v : vals)
    if (!(v > 0.0)) throw std::domain_error("log quotient requires grid positivity");
  double logAvg = 0.0;
  for (int j = 0; j < rule.N; ++j) logAvg += rule.w[j] * std::log(vals[j]);
  logAvg /= rule.mass();
  const double sphereVol = sphereSurfaceArea(f.n);
  return std::exp(-2.0 * logAvg) * energy(f, m) / sphereVol;
}

ZonalFunction randomPositiveZonal(int n, std::uint64_t seed, int L, double amplitude,
                                  const QuadratureRule& rule) {
  requireOddSphere(n);
  if (!(amplitude >= 0.0 && amplitude < 1.0))
    throw std::invalid_argument("amplitude must lie in [0, 1)");
  if (L < 1 || L > rule.N - 1) throw std::invalid_argument("need 1 <= L <= N-1");

  DeterministicRng rng(seed);
  ZonalFunction f;
  f.n = n;
  f.a.assign(L + 1, 0.0);
  for (int l = 1; l <= L; ++l) f.a[l] = rng.uniformSym() / (1.0 + l);
  f.a[0] = 0.0;

  double peak = 0.0;
  const auto bump = synthesize(f, rule);
  for (double v : bump) peak = std::max(peak, std::abs(v));
  const double scale = (peak > 0.0 && amplitude > 0.0) ? amplitude / peak : 0.0;
  for (int l = 1; l <= L; ++l) f.a[l] *= scale;
  f.a[0] = 1.0;
  return f;
}

ZonalFunction antipodalReflect(const ZonalFunction& f) {
  ZonalFunction g;
  g.n = f.n;
  g.a = f.a;
  for (int l = 1; l <= g.degree(); l += 2) g.a[l] = -g.a[l];
  return g;
}

std::string zonalCsv(const ZonalFunction& f, const QuadratureRule& rule) {
  const auto vals = synthesize(f, rule);
  std::string out = "t,theta,value\n";
  char line[128];
  for (int j = 0; j < rule.N; ++j) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", rule.t[j], std::acos(rule.t[j]),
                  vals[j]);
    out += line;
  }
  return out;
}

}  // namespace gjms
