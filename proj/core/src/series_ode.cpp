#include "takiff/series_ode.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace takiff {

SeriesSolution series_coefficients(double a0, double a1, double a2, double c0, int order) {
  if (order < 3) throw std::invalid_argument("series_coefficients: order must be >= 3");
  SeriesSolution sol;
  sol.c0 = c0;
  sol.a.resize(order + 1);
  sol.a[0] = a0;
  sol.a[1] = a1;
  sol.a[2] = a2;
  for (int n = 0; n + 3 <= order; ++n) {
    double conv = 0.0;
    for (int i = 0; i <= n; ++i) conv += sol.a[i] * sol.a[n - i];
    double num = (n + 1.0) * (n + 2.0) * c0 * sol.a[n + 2] + sol.a[n] + conv;
    sol.a[n + 3] = num / ((n + 1.0) * (n + 2.0) * (n + 3.0));
  }
  sol.hypothesis_ok = std::abs(a0) < 1.0 && std::abs(a1) < 1.0 && std::abs(a2) < 1.0 &&
                      std::abs(c0) < 1.0;
  sol.bound_margin.clear();
  for (int k = 1; k + 2 <= order; ++k)
    sol.bound_margin.push_back(2.0 / (static_cast<double>(k) * k) - std::abs(sol.a[k + 2]));
  return sol;
}

BoundReport bound_check(const SeriesSolution& sol) {
  BoundReport rep;
  rep.applicable = sol.hypothesis_ok;
  if (!rep.applicable) {
    rep.detail = "hypothesis a0, a1, a2, C0 in (-1,1) not satisfied; bounds not applicable";
    return rep;
  }
  const int order = static_cast<int>(sol.a.size()) - 1;
  rep.a3_ok = order >= 3 && std::abs(sol.a[3]) < 1.0;
  rep.a4_ok = order >= 4 && std::abs(sol.a[4]) < 10.0 / 24.0;
  rep.a5_ok = order >= 5 && std::abs(sol.a[5]) < 1.0 / 6.0;
  rep.ok = rep.a3_ok && rep.a4_ok && rep.a5_ok;
  for (size_t idx = 0; idx < sol.bound_margin.size(); ++idx) {
    if (!(sol.bound_margin[idx] > 0.0)) {
      rep.ok = false;
      rep.first_violation_k = static_cast<int>(idx) + 1;
      std::ostringstream os;
      os << "|a_" << (rep.first_violation_k + 2) << "| >= 2/" << rep.first_violation_k << "^2";
      rep.detail = os.str();
      return rep;
    }
  }
  if (rep.ok) rep.detail = "all bounds hold";
  return rep;
}

SeriesValue series_eval(const SeriesSolution& sol, double t) {
  SeriesValue out;
  double v = 0.0;
  for (auto it = sol.a.rbegin(); it != sol.a.rend(); ++it) v = v * t + *it;
  out.value = v;

  bool zero_solution = true;
  for (double ak : sol.a)
    if (ak != 0.0) { zero_solution = false; break; }
  if (zero_solution) {
    out.tail_bound = 0.0;
    out.tail_valid = true;  // the recurrence propagates the zero solution
    return out;
  }
  if (sol.hypothesis_ok && std::abs(t) <= 1.0) {
    const int order = static_cast<int>(sol.a.size()) - 1;
    double at = std::abs(t);
    double tail = 0.0;
    // sum_{k > order-2} 2 |t|^{k+2} / k^2, split into an explicit chunk and a
    // geometric-free remainder sum_{k>K} 2/k^2 < 2/K valid at |t| <= 1
    int k = order - 1;
    double power = std::pow(at, k + 2);
    const int explicit_terms = 512;
    for (int c = 0; c < explicit_terms; ++c, ++k) {
      tail += 2.0 * power / (static_cast<double>(k) * k);
      power *= at;
      if (power == 0.0) break;
    }
    if (power > 0.0) tail += 2.0 / static_cast<double>(k - 1);
    out.tail_bound = tail;
    out.tail_valid = true;
  }
  return out;
}

GlobalCondition global_condition(double c0, double c1, double c2, double c3) {
  GlobalCondition g;
  auto in_unit = [](double x) { return x > 0.0 && x < 1.0; };
  g.quantities[0] = c0;
  g.quantities[1] = c1;
  g.quantities[2] = c2 / 2.0;
  g.verdicts[0] = in_unit(c0);
  g.verdicts[1] = in_unit(c1);
  g.verdicts[2] = in_unit(c2 / 2.0);
  if (c2 == 0.0) {
    g.quantities[3] = std::numeric_limits<double>::quiet_NaN();
    g.verdicts[3] = false;
    g.diagnostic = "c2 = 0: fourth quantity 2(c3 - c1^2 - c1)/c2 is undefined";
    g.ok = false;
    return g;
  }
  g.quantities[3] = 2.0 * (c3 - c1 * c1 - c1) / c2;
  g.verdicts[3] = in_unit(g.quantities[3]);
  g.ok = g.verdicts[0] && g.verdicts[1] && g.verdicts[2] && g.verdicts[3];
  return g;
}

std::array<double, 3> ode_rhs(const std::array<double, 3>& s, double c0) {
  return {s[1], s[2], c0 * s[2] + s[0] * s[0] + s[0]};
}

}  // namespace takiff
