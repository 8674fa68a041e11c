#pragma once

#include <functional>
#include <vector>

namespace takiff {

using OdeRhs = std::function<void(double t, const std::vector<double>& y, std::vector<double>& dy)>;

// One classical fourth-order Runge-Kutta step.
std::vector<double> rk4_step(const OdeRhs& f, double t, const std::vector<double>& y, double h);

struct Rk45Options {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double initial_step = 1e-3;
  double min_step = 1e-14;
};

// Dormand-Prince 5(4) embedded pair; advances from t to t_target, invoking
// observe(t, y) after every accepted step. Returns false if the step size
// underflows.
bool rk45_integrate(const OdeRhs& f, double t, double t_target, std::vector<double> y,
                    const Rk45Options& opt,
                    const std::function<bool(double, const std::vector<double>&)>& observe);

// Dense fixed-grid rk45 helper: lands exactly on t0 + k*dt grid points.
bool rk45_integrate_grid(const OdeRhs& f, double t0, double t_end, double dt,
                         std::vector<double> y, const Rk45Options& opt,
                         const std::function<bool(double, const std::vector<double>&)>& observe);

}  // namespace takiff
