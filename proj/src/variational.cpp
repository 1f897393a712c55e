#include "gjms/variational.hpp"

#include "gjms/constants.hpp"
#include "gjms/errors.hpp"
#include "gjms/rng.hpp"
#include "gjms/stereo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace gjms {

namespace {

// Flat-array workspace for one (params, rule) pair: basis matrix, eigenvalues
// and norms cached so inner-loop evaluations touch no rational arithmetic.
struct Workspace {
  const ProblemParams* p = nullptr;
  const QuadratureRule* rule = nullptr;
  int N = 0;
  double surf = 0.0;
  double e0 = 0.0;
  double pexp = 0.0;
  std::vector<double> B;       // B[l * N + j] = C_l(t_j), l = 0..N-1
  std::vector<double> ev;      // operator eigenvalues
  std::vector<double> h;       // weighted basis norms (t-integral)
  std::vector<double> normSq;  // sphere basis norms surf * h
  std::vector<double> omega;   // surf * w_j

  Workspace(const ProblemParams& params, const QuadratureRule& r) {
    p = &params;
    rule = &r;
    N = r.N;
    surf = sphereSurfaceArea(params.n - 1);
    e0 = toDouble(gjmsEigenvalue(params.n, params.m, 0));
    pexp = 2.0 / (params.alpha - 1.0);
    B.resize(std::size_t(N) * N);
    std::vector<double> col;
    for (int j = 0; j < N; ++j) {
      gegenbauerColumn(params.n, N - 1, r.t[j], col);
      for (int l = 0; l < N; ++l) B[std::size_t(l) * N + j] = col[l];
    }
    ev.resize(N);
    h.resize(N);
    normSq.resize(N);
    for (int l = 0; l < N; ++l) {
      ev[l] = toDouble(gjmsEigenvalue(params.n, params.m, l));
      h[l] = gegenbauerWeightedNorm(params.n, l);
      normSq[l] = surf * h[l];
    }
    omega.resize(N);
    for (int j = 0; j < N; ++j) omega[j] = surf * r.w[j];
  }
};

struct Evaluation {
  double value = 0.0;
  double I = 0.0;  // int phi^{1-alpha}
  double E = 0.0;  // int [phi P phi - eps e0 phi^2]
  std::vector<double> phi;
  std::vector<double> a;    // full-degree coefficients of phi
  std::vector<double> Pphi;
};

void synthPsi(const Workspace& ws, const std::vector<double>& psi, std::vector<double>& s) {
  s.assign(ws.N, 0.0);
  for (int l = 0; l < static_cast<int>(psi.size()); ++l) {
    const double c = psi[l];
    if (c == 0.0) continue;
    const double* row = ws.B.data() + std::size_t(l) * ws.N;
    for (int j = 0; j < ws.N; ++j) s[j] += c * row[j];
  }
}

Evaluation evaluate(const Workspace& ws, const std::vector<double>& psi) {
  Evaluation ev;
  synthPsi(ws, psi, ev.phi);
  for (auto& v : ev.phi) v = std::exp(v);

  ev.a.assign(ws.N, 0.0);
  for (int l = 0; l < ws.N; ++l) {
    const double* row = ws.B.data() + std::size_t(l) * ws.N;
    double acc = 0.0;
    for (int j = 0; j < ws.N; ++j) acc += ws.rule->w[j] * ev.phi[j] * row[j];
    ev.a[l] = acc / ws.h[l];
  }
  ev.Pphi.assign(ws.N, 0.0);
  for (int l = 0; l < ws.N; ++l) {
    const double c = ws.ev[l] * ev.a[l];
    const double* row = ws.B.data() + std::size_t(l) * ws.N;
    for (int j = 0; j < ws.N; ++j) ev.Pphi[j] += c * row[j];
  }

  double energySpec = 0.0;
  for (int l = 0; l < ws.N; ++l) energySpec += ws.ev[l] * ws.normSq[l] * ev.a[l] * ev.a[l];
  double mass2 = 0.0, massI = 0.0;
  const double alpha = ws.p->alpha;
  for (int j = 0; j < ws.N; ++j) {
    mass2 += ws.omega[j] * ev.phi[j] * ev.phi[j];
    massI += ws.omega[j] * std::pow(ev.phi[j], 1.0 - alpha);
  }
  ev.I = massI;
  ev.E = energySpec - ws.p->eps * ws.e0 * mass2;
  ev.value = std::pow(ev.I, ws.pexp) * ev.E;
  return ev;
}

// d(value)/d(psi_l). The phi-space factor phi_j rides along from the log
// parametrization; the l = 0 component cancels to roundoff by scale freedom.
std::vector<double> gradient(const Workspace& ws, const Evaluation& ev, int L) {
  const double alpha = ws.p->alpha;
  const double Ip = std::pow(ev.I, ws.pexp);
  const double Ipm1 = std::pow(ev.I, ws.pexp - 1.0);
  std::vector<double> gphi(ws.N);
  for (int j = 0; j < ws.N; ++j) {
    const double dI = (1.0 - alpha) * ws.omega[j] * std::pow(ev.phi[j], -alpha);
    const double dE = 2.0 * ws.omega[j] * (ev.Pphi[j] - ws.p->eps * ws.e0 * ev.phi[j]);
    gphi[j] = ws.pexp * Ipm1 * dI * ev.E + Ip * dE;
  }
  std::vector<double> G(L + 1, 0.0);
  for (int l = 0; l <= L; ++l) {
    const double* row = ws.B.data() + std::size_t(l) * ws.N;
    double acc = 0.0;
    for (int j = 0; j < ws.N; ++j) acc += gphi[j] * ev.phi[j] * row[j];
    G[l] = acc;
  }
  return G;
}

std::vector<double> psiVector(const ZonalFunction* initialPsi, int L) {
  std::vector<double> psi(L + 1, 0.0);
  if (initialPsi) {
    if (initialPsi->degree() > L)
      throw std::invalid_argument("initial psi degree exceeds the optimization degree");
    for (int l = 0; l <= initialPsi->degree(); ++l) psi[l] = initialPsi->a[l];
  }
  return psi;
}

}  // namespace

double quotientFromPsi(const ZonalFunction& psi, const ProblemParams& params,
                       const QuadratureRule& rule) {
  if (psi.n != params.n) throw std::invalid_argument("dimension mismatch");
  const Workspace ws(params, rule);
  return evaluate(ws, psi.a).value;
}

std::vector<double> quotientGradientFromPsi(const ZonalFunction& psi,
                                            const ProblemParams& params,
                                            const QuadratureRule& rule) {
  if (psi.n != params.n) throw std::invalid_argument("dimension mismatch");
  const Workspace ws(params, rule);
  return gradient(ws, evaluate(ws, psi.a), psi.degree());
}

MinimizeResult minimizeQuotient(const ProblemParams& params, int L,
                                const QuadratureRule& rule,
                                const ZonalFunction* initialPsi,
                                const MinimizeOptions& opts) {
  if (params.alpha == 1.0) throw std::invalid_argument("alpha = 1 has no quotient form");
  if (L < 0 || L > rule.N - 1) throw std::invalid_argument("degree out of range");
  const Workspace ws(params, rule);
  std::vector<double> psi = psiVector(initialPsi, L);

  std::vector<double> D(L + 1);
  for (int l = 0; l <= L; ++l) D[l] = (std::abs(ws.ev[l]) + 1.0) * ws.normSq[l];

  MinimizeResult res;
  Evaluation cur = evaluate(ws, psi);
  res.trace.push_back(cur.value);

  int iter = 0;
  int stall = 0;
  double etaStart = 1.0;  // warm start; grows when full steps keep landing
  for (; iter < opts.maxIter; ++iter) {
    const auto G = gradient(ws, cur, L);
    double gsup = 0.0;
    for (double g : G) gsup = std::max(gsup, std::abs(g));
    if (gsup < opts.gradTol) {
      res.converged = true;
      break;
    }
    std::vector<double> dir(L + 1);
    double dirDeriv = 0.0;
    for (int l = 0; l <= L; ++l) {
      dir[l] = -G[l] / D[l];
      dirDeriv += G[l] * dir[l];
    }
    // The fixed preconditioner only fixes relative stiffness; the overall
    // step scale is learned by doubling whenever the first trial succeeds.
    double eta = std::min(etaStart * 2.0, 1e12);
    bool accepted = false;
    bool firstTrial = true;
    double drop = 0.0;
    std::vector<double> cand(L + 1);
    while (eta > 1e-20) {
      for (int l = 0; l <= L; ++l) cand[l] = psi[l] + eta * dir[l];
      const Evaluation next = evaluate(ws, cand);
      if (next.value <= cur.value + opts.armijoC * eta * dirDeriv) {
        drop = cur.value - next.value;
        psi = cand;
        cur = next;
        res.trace.push_back(cur.value);
        accepted = true;
        etaStart = firstTrial ? eta : std::max(eta, 1e-12);
        break;
      }
      eta *= 0.5;
      firstTrial = false;
    }
    // Decreases at the rounding level of the value are indistinguishable
    // from noise; several in a row mean the line search is done.
    if (accepted && drop <= 4e-15 * std::abs(cur.value))
      ++stall;
    else
      stall = 0;
    if (!accepted || stall >= 3) {
      // At the numerical floor. Count it as converged when the remaining
      // gradient is small on the scale of the value it could still move.
      res.converged = gsup < 1e-4 * std::max(1.0, std::abs(cur.value));
      break;
    }
  }
  if (iter == opts.maxIter) res.converged = false;
  res.iterations = iter;
  res.value = cur.value;

  // Gauge fixing: scale so int phi^{1-alpha} = 1.
  const double t = std::pow(cur.I, 1.0 / (params.alpha - 1.0));
  res.minimizer.n = params.n;
  res.minimizer.a.resize(ws.N);
  for (int l = 0; l < ws.N; ++l) res.minimizer.a[l] = t * cur.a[l];
  return res;
}

ZonalFunction seededInitialPsi(int n, int L, std::uint64_t seed, double amplitude) {
  DeterministicRng rng(seed * 0x9e3779b97f4a7c15ull + 1);
  ZonalFunction psi;
  psi.n = n;
  psi.a.assign(L + 1, 0.0);
  for (int l = 1; l <= L; ++l) psi.a[l] = amplitude * rng.uniformSym() / (1.0 + l);
  return psi;
}

double eulerLagrangeResidual(const ZonalFunction& v, const ProblemParams& params, double S,
                             const QuadratureRule& rule) {
  const auto& vv = v.values(rule);
  const auto Pv = synthesize(applyGjms(v, params.m), rule);
  const double e0 = toDouble(gjmsEigenvalue(params.n, params.m, 0));
  double num = 0.0, den = 0.0;
  for (int j = 0; j < rule.N; ++j) {
    if (!(vv[j] > 0.0)) throw std::domain_error("residual requires a positive function");
    const double rhs = S * std::pow(vv[j], -params.alpha);
    const double lhs = Pv[j] - params.eps * e0 * vv[j];
    num = std::max(num, std::abs(lhs - rhs));
    den = std::max(den, std::abs(rhs));
  }
  return num / (den + 1e-14);
}

double massBalanceResidual(const ZonalFunction& v, const ProblemParams& params,
                           const QuadratureRule& rule) {
  const double massV = lebesgueIntegral(v, 1.0, rule);
  const double massInv = lebesgueIntegral(v, -params.alpha, rule);
  return std::abs((1.0 - params.eps) * massV - massInv) / massV;
}

ZonalFunction rescaleToMain(const ZonalFunction& v, const ProblemParams& params, double S) {
  const double e0 = toDouble(gjmsEigenvalue(params.n, params.m, 0));
  const double ratio = e0 / S;
  if (!(ratio > 0.0)) throw ComputationError("multiplier sign prevents rescaling");
  const double t = std::pow(ratio, 1.0 / (1.0 + params.alpha));
  ZonalFunction out = v;
  for (auto& c : out.a) c *= t;
  out.cacheN = 0;
  return out;
}

std::vector<SweepCell> liouvilleSweep(const std::vector<double>& epsGrid,
                                      const std::vector<double>& alphaGrid,
                                      const ProblemParams& base, int L,
                                      const QuadratureRule& rule, int seeds) {
  std::vector<SweepCell> cells;
  for (double eps : epsGrid) {
    for (double alpha : alphaGrid) {
      SweepCell cell;
      cell.eps = eps;
      cell.alpha = alpha;
      cell.value = std::numeric_limits<double>::quiet_NaN();
      cell.predicted = std::numeric_limits<double>::quiet_NaN();
      cell.constancy = std::numeric_limits<double>::quiet_NaN();
      try {
        const auto params = ProblemParams::checked(base.n, base.m, alpha, eps);
        if (base.n == 2 * base.m - 1 && alpha != 1.0)
          cell.predicted = (1.0 - eps) * sharpConstant(base.n, base.m, alpha);
        cell.converged = true;
        double worstConstancy = 0.0;
        double best = std::numeric_limits<double>::infinity();
        for (int run = 0; run < seeds; ++run) {
          const auto psi0 = seededInitialPsi(base.n, L, std::uint64_t(run));
          const auto res = minimizeQuotient(params, L, rule, &psi0);
          cell.converged = cell.converged && res.converged;
          best = std::min(best, res.value);
          const auto& vals = res.minimizer.values(rule);
          const double avg = res.minimizer.a[0];
          double dev = 0.0;
          for (double v : vals) dev = std::max(dev, std::abs(v / avg - 1.0));
          worstConstancy = std::max(worstConstancy, dev);
        }
        cell.constancy = worstConstancy;
        cell.value = best;
      } catch (const std::exception&) {
        cell.converged = false;
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

std::string sweepCsv(const std::vector<SweepCell>& cells) {
  std::string out = "eps,alpha,constancy,S_eps,S_eps_predicted,converged\n";
  char buf[160];
  for (const auto& c : cells) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", c.eps, c.alpha,
                  c.constancy, c.value, c.predicted, c.converged ? 1 : 0);
    out += buf;
  }
  return out;
}

std::vector<CompactnessCell> compactnessSweep(const std::vector<double>& epsGrid,
                                              const ProblemParams& base, int L,
                                              const QuadratureRule& rule) {
  std::vector<CompactnessCell> cells;
  for (double eps : epsGrid) {
    CompactnessCell cell;
    cell.eps = eps;
    cell.minV = std::numeric_limits<double>::quiet_NaN();
    cell.maxV = std::numeric_limits<double>::quiet_NaN();
    try {
      const auto params = ProblemParams::checked(base.n, base.m, base.alpha, eps);
      const auto psi0 = seededInitialPsi(base.n, L, 0);
      const auto res = minimizeQuotient(params, L, rule, &psi0);
      const auto scaled = rescaleToMain(res.minimizer, params, res.value);
      const auto& vals = scaled.values(rule);
      double mn = std::numeric_limits<double>::infinity(), mx = 0.0;
      for (double v : vals) {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
      }
      cell.minV = mn;
      cell.maxV = mx;
      cell.converged = res.converged;
    } catch (const std::exception&) {
      cell.converged = false;
    }
    cells.push_back(cell);
  }
  return cells;
}

std::string compactnessCsv(const std::vector<CompactnessCell>& cells) {
  std::string out = "eps,min_v,max_v,converged\n";
  char buf[128];
  for (const auto& c : cells) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%d\n", c.eps, c.minV, c.maxV,
                  c.converged ? 1 : 0);
    out += buf;
  }
  return out;
}

std::vector<DilationPoint> dilationFamily(const std::vector<double>& deltas, int n, int m,
                                          const QuadratureRule& rule, int L) {
  if (L < 0) L = (7 * (rule.N - 1)) / 8;
  const double crit = double(n + 2 * m) / double(2 * m - n);
  const auto params = ProblemParams::checked(n, m, crit, 0.0);
  ZonalFunction one;
  one.n = n;
  one.a = {1.0};
  std::vector<DilationPoint> out;
  for (double delta : deltas) {
    DilationPoint pt;
    pt.delta = delta;
    const auto w = dilate(one, delta, m, rule, L);
    const auto& vals = w.values(rule);
    for (double v : vals) pt.maxV = std::max(pt.maxV, v);
    pt.quotient = sobolevQuotient(w, params, rule);
    out.push_back(pt);
  }
  return out;
}

}  // namespace gjms
