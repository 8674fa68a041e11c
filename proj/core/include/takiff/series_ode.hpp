#pragma once

#include <array>
#include <string>
#include <vector>

namespace takiff {

// Power-series solution of Psi''' = C0 Psi'' + Psi^2 + Psi around t = 0.
// a_{n+3} = [(n+1)(n+2) C0 a_{n+2} + a_n + sum_{i=0}^n a_i a_{n-i}]
//           / [(n+1)(n+2)(n+3)]
struct SeriesSolution {
  double c0 = 0.0;
  std::vector<double> a;          // a_0 .. a_N
  bool hypothesis_ok = false;     // a0, a1, a2, C0 all in (-1, 1)
  std::vector<double> bound_margin;  // margin[k] = 2/k^2 - |a_{k+2}|, k = 1..N-2
};

SeriesSolution series_coefficients(double a0, double a1, double a2, double c0, int order);

struct BoundReport {
  bool applicable = false;   // hypothesis satisfied
  bool ok = false;
  int first_violation_k = -1;   // index k of the first failing |a_{k+2}| < 2/k^2
  bool a3_ok = false;           // |a_3| < 1
  bool a4_ok = false;           // |a_4| < 10/24
  bool a5_ok = false;           // |a_5| < 1/6
  std::string detail;
};

BoundReport bound_check(const SeriesSolution& sol);

struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  bool tail_valid = false;  // rigorous only for |t| <= 1 under the hypothesis
};

// Horner evaluation; the tail is majorized by sum_{k>N-2} 2 |t|^{k+2} / k^2,
// convergent for |t| <= 1.
SeriesValue series_eval(const SeriesSolution& sol, double t);

struct GlobalCondition {
  bool ok = false;
  std::array<bool, 4> verdicts{};   // c0, c1, c2/2, 2(c3 - c1^2 - c1)/c2 in (0,1)
  std::array<double, 4> quantities{};
  std::string diagnostic;
};

// The global-solvability condition evaluated verbatim; c2 = 0 leaves the
// fourth quantity undefined and the verdict false.
GlobalCondition global_condition(double c0, double c1, double c2, double c3);

// State derivative of the third-order equation for use with a generic
// integrator: (Psi, Psi', Psi'') -> (Psi', Psi'', C0 Psi'' + Psi^2 + Psi).
std::array<double, 3> ode_rhs(const std::array<double, 3>& state, double c0);

}  // namespace takiff
