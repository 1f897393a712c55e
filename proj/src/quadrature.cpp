#include "gjms/quadrature.hpp"

#include "gjms/constants.hpp"
#include "gjms/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gjms {

namespace {

// Orthonormal recurrence data for the symmetric Jacobi weight (1-t^2)^a:
// p_{k+1} = (t p_k - b_k p_{k-1}) / b_{k+1}, b_k^2 = k(k+2a)/((2k+2a)^2 - 1).
struct Recurrence {
  double a;
  double mu0;              // total mass of the weight
  std::vector<double> b;   // b[k] for k = 1..N

  // Value and derivative of the orthonormal polynomial of degree N.
  void eval(int N, double x, double& p, double& dp) const {
    double pm = 1.0 / std::sqrt(mu0), dpm = 0.0;
    if (N == 0) { p = pm; dp = 0.0; return; }
    double pk = x * pm / b[1], dpk = pm / b[1];
    for (int k = 1; k < N; ++k) {
      const double pn = (x * pk - b[k] * pm) / b[k + 1];
      const double dpn = (pk + x * dpk - b[k] * dpm) / b[k + 1];
      pm = pk; dpm = dpk;
      pk = pn; dpk = dpn;
    }
    p = pk; dp = dpk;
  }

  // Christoffel sum over degrees 0..N-1 at a node; the Gauss weight is its
  // reciprocal.
  double christoffel(int N, double x) const {
    double pm = 1.0 / std::sqrt(mu0);
    double sum = pm * pm;
    if (N == 1) return sum;
    double pk = x * pm / b[1];
    sum += pk * pk;
    for (int k = 1; k + 1 < N; ++k) {
      const double pn = (x * pk - b[k] * pm) / b[k + 1];
      pm = pk; pk = pn;
      sum += pk * pk;
    }
    return sum;
  }
};

Recurrence makeRecurrence(int n, int N) {
  Recurrence rec;
  rec.a = (n - 2) / 2.0;
  rec.mu0 = std::sqrt(std::numbers::pi) * std::tgamma(rec.a + 1.0) / std::tgamma(rec.a + 1.5);
  rec.b.assign(N + 1, 0.0);
  for (int k = 1; k <= N; ++k) {
    const double num = k * (k + 2.0 * rec.a);
    const double den = (2.0 * k + 2.0 * rec.a) * (2.0 * k + 2.0 * rec.a) - 1.0;
    rec.b[k] = std::sqrt(num / den);
  }
  return rec;
}

}  // namespace

double QuadratureRule::mass() const {
  double s = 0.0;
  for (double x : w) s += x;
  return s;
}

QuadratureRule buildQuadrature(int n, int N) {
  if (n < 2) throw std::invalid_argument("quadrature needs n >= 2");
  if (N < 4) throw std::invalid_argument("quadrature needs N >= 4");

  const Recurrence rec = makeRecurrence(n, N);

  // Bracket every root by a sign scan in the angle variable, then polish by
  // Newton with the bracket as a safety rail.
  const int scan = 8 * N;
  std::vector<double> roots;
  roots.reserve(N);
  double xPrev = std::cos(std::numbers::pi * (1.0 - 0.5 / scan));
  double pPrev, dJunk;
  rec.eval(N, xPrev, pPrev, dJunk);
  for (int i = 1; i < scan; ++i) {
    const double theta = std::numbers::pi * (1.0 - (i + 0.5) / scan);
    const double x = std::cos(theta);
    double p, dp;
    rec.eval(N, x, p, dp);
    if (std::signbit(p) != std::signbit(pPrev)) {
      double lo = xPrev, hi = x;
      double root = 0.5 * (lo + hi);
      for (int it = 0; it < 100; ++it) {
        double pr, dpr;
        rec.eval(N, root, pr, dpr);
        double step = pr / dpr;
        double next = root - step;
        if (!(next > lo && next < hi)) {
          // Newton left the bracket: bisect instead and shrink the bracket.
          double plo, dlo;
          rec.eval(N, lo, plo, dlo);
          if (std::signbit(pr) == std::signbit(plo)) lo = root; else hi = root;
          next = 0.5 * (lo + hi);
        }
        if (std::abs(next - root) <= 1e-15 * std::max(1.0, std::abs(next))) {
          root = next;
          break;
        }
        root = next;
      }
      roots.push_back(root);
    }
    xPrev = x; pPrev = p;
    (void)dp;
  }

  if (int(roots.size()) != N)
    throw ComputationError("quadrature node solver found " + std::to_string(roots.size()) +
                           " of " + std::to_string(N) + " nodes");
  std::sort(roots.begin(), roots.end());
  for (int j = 0; j + 1 < N; ++j)
    if (!(roots[j] < roots[j + 1]))
      throw ComputationError("quadrature node solver produced non-distinct nodes");

  // Enforce exact antisymmetry; the weight is even, so nodes come in pairs.
  for (int j = 0; j < N / 2; ++j) {
    const double s = 0.5 * (roots[N - 1 - j] - roots[j]);
    roots[j] = -s;
    roots[N - 1 - j] = s;
  }
  if (N % 2 == 1) roots[N / 2] = 0.0;

  QuadratureRule rule;
  rule.n = n;
  rule.N = N;
  rule.t = roots;
  rule.w.resize(N);
  for (int j = 0; j < N; ++j) rule.w[j] = 1.0 / rec.christoffel(N, roots[j]);
  for (int j = 0; j < N / 2; ++j) {
    const double wj = 0.5 * (rule.w[j] + rule.w[N - 1 - j]);
    rule.w[j] = wj;
    rule.w[N - 1 - j] = wj;
  }

  // Mass sanity: sum(w) must reproduce the weight integral to 1e-12 relative.
  if (std::abs(rule.mass() - rec.mu0) > 1e-12 * rec.mu0)
    throw ComputationError("quadrature mass check failed");
  return rule;
}

}  // namespace gjms
