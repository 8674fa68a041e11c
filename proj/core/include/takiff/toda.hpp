#pragma once

#include <string>
#include <vector>

#include "takiff/invariants.hpp"
#include "takiff/ode.hpp"
#include "takiff/takiff_element.hpp"

namespace takiff {

// Point of the manifold Z = ssf + sum R h_i(j) + sum R+ e_{alpha_i}(j) in
// its global coordinates rho_{i,j}, gamma_{i,j}. For l = 1 the canonical
// chart is gamma_{i,0} = exp(phi_{i,0}), phi_{i,1} = gamma_{i,1}/gamma_{i,0}.
struct TodaState {
  int n = 0;
  int level = 0;
  std::vector<std::vector<double>> rho;    // n x (l+1)
  std::vector<std::vector<double>> gamma;  // n x (l+1), positive

  TodaState() = default;
  TodaState(int n_, int level_)
      : n(n_), level(level_),
        rho(n_, std::vector<double>(level_ + 1, 0.0)),
        gamma(n_, std::vector<double>(level_ + 1, 1.0)) {}

  bool gamma_positive() const;
  bool finite() const;

  double phi0(int i) const;  // l = 1 only
  double phi1(int i) const;
  static TodaState from_canonical(int n, const std::vector<double>& rho0,
                                  const std::vector<double>& rho1,
                                  const std::vector<double>& phi0,
                                  const std::vector<double>& phi1);
};

TakiffElement<double> to_takiff(const LieAlgebraData& data, const TodaState& s);
TodaState state_from_takiff(const LieAlgebraData& data, const TakiffElement<double>& y);

// t'_{j,s} = gamma_{i,j+s-l} for j+s >= l (anti-triangular with constant
// anti-diagonal gamma_{i,0}), T_i its inverse.
struct OmegaBlock {
  int i = 0;
  std::vector<std::vector<double>> t_prime;
  std::vector<std::vector<double>> T;
};

OmegaBlock omega_block(const TodaState& s, int i);

struct OmegaBlockExact {
  std::vector<std::vector<Rational>> t_prime;
  std::vector<std::vector<Rational>> T;
  Rational det;
};

OmegaBlockExact omega_block_exact(const std::vector<Rational>& gamma_row);

// H = 1/2 sum c_{i,r} rho_{i,j} rho_{r,l-j} + sum gamma_{i,j}; equals
// I = Q(y,y)/2 evaluated on Z.
double hamiltonian(const TodaState& s, const CartanMatrix& cartan);

// l = 1 canonical form sum c_{i,r} rho_{i,0} rho_{r,1} + sum (1+phi_1) e^{phi_0}.
double hamiltonian_canonical(const TodaState& s, const CartanMatrix& cartan);

struct CanonicalDerivative {
  std::vector<double> rho0, rho1, phi0, phi1;
};

// Hamilton equations of omega_Z = sum d rho_{i,0} ^ d phi_{i,1}
//                                 + d rho_{i,1} ^ d phi_{i,0}  (l = 1):
//   d phi_{i,1} = dH/d rho_{i,0},  d phi_{i,0} = dH/d rho_{i,1},
//   d rho_{i,0} = -dH/d phi_{i,1}, d rho_{i,1} = -dH/d phi_{i,0}.
CanonicalDerivative canonical_rhs(const TodaState& s, const CartanMatrix& cartan);

// (chi_I)_y = [y, P_bbar(y)] for I = Q(,)/2; requires y in ssf + b_l and
// lands in b_l.
TakiffElement<double> lax_rhs(const LieAlgebraData& data, const TakiffElement<double>& ssf,
                              const TakiffElement<double>& y);

enum class Formulation { canonical, lax };
enum class Method { rk4, rk45 };

enum class TrajectoryStatus { completed, positivity_lost, nonfinite };

struct Trajectory {
  Formulation formulation = Formulation::canonical;
  Method method = Method::rk4;
  int n = 0;
  int level = 0;
  bool reversed = false;
  std::vector<std::string> columns;           // state column names
  std::vector<double> times;
  std::vector<std::vector<double>> states;    // per step, matches columns
  std::vector<double> energy;                 // H per step
  std::vector<InvariantSpec> invariant_specs; // adjoint-invariant family
  std::vector<std::vector<double>> invariants;
  std::vector<double> quartic_residual;       // only for n=1, l=1 canonical
  TrajectoryStatus status = TrajectoryStatus::completed;
  double stop_time = 0.0;
  std::string diagnostic;
};

struct IntegrateOptions {
  Method method = Method::rk4;
  double dt = 1e-3;           // fixed step (rk4) and output grid (rk45)
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double gamma_floor = 1e-300;
  bool record_invariants = true;
  bool reverse_time = false;  // integrate y' = -f(y); times still reported as 0..t_end
};

// Integrates the canonical Hamilton equations (l = 1, phi chart) or the
// Lax vector field (any l, raw chart) from state0 over [0, t_end]. Halts
// with a diagnostic as soon as positivity or finiteness is lost.
Trajectory integrate(const LieAlgebraData& data, const CartanMatrix& cartan,
                     Formulation formulation, const TodaState& state0, double t_end,
                     const IntegrateOptions& options);

// Reconstructs the TodaState of one recorded trajectory row.
TodaState trajectory_state(const Trajectory& traj, std::size_t row);

// Residual of q4'' * q2'' = (q3'')^2 + (1+qbar)(q2'')^3 with the derivatives
// expressed through the state (n = 1, l = 1); identically zero on Z.
double quartic_identity_residual(const TodaState& s);

}  // namespace takiff
