#include "takiff/ode.hpp"

#include <algorithm>
#include <cmath>

namespace takiff {

std::vector<double> rk4_step(const OdeRhs& f, double t, const std::vector<double>& y, double h) {
  const size_t n = y.size();
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n), out(n);
  f(t, y, k1);
  for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  f(t + 0.5 * h, tmp, k2);
  for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  f(t + 0.5 * h, tmp, k3);
  for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
  f(t + h, tmp, k4);
  for (size_t i = 0; i < n; ++i)
    out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

namespace {

// Dormand-Prince tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

}  // namespace

bool rk45_integrate(const OdeRhs& f, double t, double t_target, std::vector<double> y,
                    const Rk45Options& opt,
                    const std::function<bool(double, const std::vector<double>&)>& observe) {
  const size_t n = y.size();
  const double dir = t_target >= t ? 1.0 : -1.0;
  double h = dir * std::min(std::abs(opt.initial_step), std::abs(t_target - t));
  if (h == 0.0) return true;

  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), y5(n);

  while (dir * (t_target - t) > 0) {
    if (dir * (t + h - t_target) > 0) h = t_target - t;

    f(t, y, k1);
    for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    f(t + c2 * h, tmp, k2);
    for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(t + c3 * h, tmp, k3);
    for (size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + c4 * h, tmp, k4);
    for (size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + c5 * h, tmp, k5);
    for (size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    f(t + h, tmp, k6);
    for (size_t i = 0; i < n; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    f(t + h, y5, k7);

    double err = 0.0;
    for (size_t i = 0; i < n; ++i) {
      double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      double scale = opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(e) / scale);
    }

    if (err <= 1.0 || std::abs(h) <= opt.min_step) {
      t += h;
      y = y5;
      if (!observe(t, y)) return true;  // observer requested stop
    }
    double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
    factor = std::clamp(factor, 0.2, 5.0);
    h *= factor;
    if (std::abs(h) < opt.min_step) {
      if (dir * (t_target - t) > 0) return false;
    }
  }
  return true;
}

bool rk45_integrate_grid(const OdeRhs& f, double t0, double t_end, double dt,
                         std::vector<double> y, const Rk45Options& opt,
                         const std::function<bool(double, const std::vector<double>&)>& observe) {
  double t = t0;
  bool keep_going = true;
  const long steps = std::lround((t_end - t0) / dt);
  for (long k = 1; k <= steps && keep_going; ++k) {
    double target = t0 + static_cast<double>(k) * dt;
    std::vector<double> latest = y;
    bool ok = rk45_integrate(
        f, t, target, y, opt,
        [&](double, const std::vector<double>& cur) {
          latest = cur;
          return true;
        });
    if (!ok) return false;
    y = latest;
    t = target;
    keep_going = observe(t, y);
  }
  return true;
}

}  // namespace takiff
