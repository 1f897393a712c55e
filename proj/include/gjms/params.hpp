#pragma once

namespace gjms {

// Problem data (n, m, alpha, eps). Admissible range: n odd >= 3, 2m > n,
// 0 < alpha <= (n+2m)/(2m-n), 0 <= eps < 1. The unchecked factory skips the
// alpha ceiling so exploratory sweeps can probe beyond it; n/m sanity is
// always enforced because every formula divides by 2m-n somewhere.
struct ProblemParams {
  int n = 3;
  int m = 2;
  double alpha = 7.0;
  double eps = 0.1;

  static ProblemParams checked(int n, int m, double alpha, double eps);
  static ProblemParams unchecked(int n, int m, double alpha, double eps);

  double criticalAlpha() const { return double(n + 2 * m) / double(2 * m - n); }
  bool isCritical(double tol = 1e-12) const;

  // Throws std::invalid_argument outside the admissible range.
  void validate() const;
};

}  // namespace gjms
