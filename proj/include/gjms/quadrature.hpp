#pragma once

#include <vector>

namespace gjms {

// Gauss rule for the weight (1-t^2)^{(n-2)/2} on (-1,1), exact through degree
// 2N-1. Nodes are strictly increasing and exactly antisymmetric (mirrored),
// weights positive. sum(w) equals the weight's total mass, so
// |S^{n-1}| * sum(w) = |S^n|.
struct QuadratureRule {
  int n = 0;
  int N = 0;
  std::vector<double> t;
  std::vector<double> w;

  double mass() const;  // sum of weights
};

// n >= 2 (even n serves as the angular oracle for kernel means), N >= 4.
// Nodes found by Newton iteration on the orthonormal recurrence, tolerance
// 1e-15; bracketed bisection backs up any Newton step that leaves its bracket.
QuadratureRule buildQuadrature(int n, int N);

}  // namespace gjms
