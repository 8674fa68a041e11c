#include "takiff/toda.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace takiff {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

template <class S>
std::vector<std::vector<S>> invert_dense(std::vector<std::vector<S>> m) {
  const int d = static_cast<int>(m.size());
  std::vector<std::vector<S>> inv(d, std::vector<S>(d, ScalarOps<S>::zero()));
  for (int i = 0; i < d; ++i) inv[i][i] = ScalarOps<S>::one();
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r)
      if (!ScalarOps<S>::is_zero(m[r][col])) { pivot = r; break; }
    if (pivot < 0) throw std::invalid_argument("invert_dense: singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    S piv = m[col][col];
    for (int j = 0; j < d; ++j) { m[col][j] /= piv; inv[col][j] /= piv; }
    for (int r = 0; r < d; ++r) {
      if (r == col || ScalarOps<S>::is_zero(m[r][col])) continue;
      S f = m[r][col];
      for (int j = 0; j < d; ++j) { m[r][j] -= f * m[col][j]; inv[r][j] -= f * inv[col][j]; }
    }
  }
  return inv;
}

template <class S>
std::vector<std::vector<S>> build_t_prime(const std::vector<S>& gamma_row) {
  const int l = static_cast<int>(gamma_row.size()) - 1;
  std::vector<std::vector<S>> tp(l + 1, std::vector<S>(l + 1, ScalarOps<S>::zero()));
  for (int j = 0; j <= l; ++j)
    for (int s = 0; s <= l; ++s)
      if (j + s >= l) tp[j][s] = gamma_row[j + s - l];
  return tp;
}

}  // namespace

bool TodaState::gamma_positive() const {
  for (const auto& row : gamma)
    for (double g : row)
      if (!(g > 0.0)) return false;
  return true;
}

bool TodaState::finite() const {
  for (const auto& row : rho)
    for (double x : row)
      if (!std::isfinite(x)) return false;
  for (const auto& row : gamma)
    for (double x : row)
      if (!std::isfinite(x)) return false;
  return true;
}

double TodaState::phi0(int i) const {
  require(level == 1, "phi0: canonical chart requires l = 1");
  return std::log(gamma[i][0]);
}

double TodaState::phi1(int i) const {
  require(level == 1, "phi1: canonical chart requires l = 1");
  return gamma[i][1] / gamma[i][0];
}

TodaState TodaState::from_canonical(int n, const std::vector<double>& rho0,
                                    const std::vector<double>& rho1,
                                    const std::vector<double>& phi0,
                                    const std::vector<double>& phi1) {
  TodaState s(n, 1);
  for (int i = 0; i < n; ++i) {
    s.rho[i][0] = rho0[i];
    s.rho[i][1] = rho1[i];
    s.gamma[i][0] = std::exp(phi0[i]);
    s.gamma[i][1] = phi1[i] * s.gamma[i][0];
  }
  return s;
}

TakiffElement<double> to_takiff(const LieAlgebraData& data, const TodaState& s) {
  require(data.n == s.n, "to_takiff: rank mismatch");
  TakiffElement<double> y = principal_f<double>(data, s.level);
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j <= s.level; ++j) {
      y.add(data.h_index(i), j, s.rho[i][j]);
      y.add(data.e_index(i), j, s.gamma[i][j]);  // simple roots come first
    }
  return y;
}

TodaState state_from_takiff(const LieAlgebraData& data, const TakiffElement<double>& y) {
  TodaState s(data.n, y.level);
  for (int i = 0; i < data.n; ++i)
    for (int j = 0; j <= y.level; ++j) {
      s.rho[i][j] = y.get(data.h_index(i), j);
      s.gamma[i][j] = y.get(data.e_index(i), j);
    }
  return s;
}

OmegaBlock omega_block(const TodaState& s, int i) {
  require(i >= 0 && i < s.n, "omega_block: index out of range");
  require(s.gamma[i][0] > 0.0, "omega_block: gamma_{i,0} must be positive");
  OmegaBlock b;
  b.i = i;
  b.t_prime = build_t_prime(s.gamma[i]);
  b.T = invert_dense(b.t_prime);
  return b;
}

OmegaBlockExact omega_block_exact(const std::vector<Rational>& gamma_row) {
  require(!gamma_row.empty() && gamma_row[0] != 0,
          "omega_block_exact: gamma_{i,0} must be nonzero");
  OmegaBlockExact b;
  b.t_prime = build_t_prime(gamma_row);
  b.T = invert_dense(b.t_prime);
  // anti-triangular: reversing the columns leaves a lower-triangular matrix
  // with constant diagonal gamma_0
  const int l = static_cast<int>(gamma_row.size()) - 1;
  Rational det(1);
  for (int j = 0; j <= l; ++j) det *= gamma_row[0];
  int swaps = ((l + 1) / 2) % 2;
  b.det = swaps ? -det : det;
  return b;
}

double hamiltonian(const TodaState& s, const CartanMatrix& cartan) {
  require(cartan.n == s.n, "hamiltonian: rank mismatch");
  double kin = 0.0;
  for (int i = 0; i < s.n; ++i)
    for (int r = 0; r < s.n; ++r) {
      if (cartan.c[i][r] == 0) continue;
      for (int j = 0; j <= s.level; ++j)
        kin += cartan.c[i][r] * s.rho[i][j] * s.rho[r][s.level - j];
    }
  double pot = 0.0;
  for (const auto& row : s.gamma)
    for (double g : row) pot += g;
  return 0.5 * kin + pot;
}

double hamiltonian_canonical(const TodaState& s, const CartanMatrix& cartan) {
  require(s.level == 1, "hamiltonian_canonical: requires l = 1");
  require(cartan.n == s.n, "hamiltonian_canonical: rank mismatch");
  double kin = 0.0;
  for (int i = 0; i < s.n; ++i)
    for (int r = 0; r < s.n; ++r)
      kin += cartan.c[i][r] * s.rho[i][0] * s.rho[r][1];
  double pot = 0.0;
  for (int i = 0; i < s.n; ++i) pot += (1.0 + s.phi1(i)) * std::exp(s.phi0(i));
  return kin + pot;
}

CanonicalDerivative canonical_rhs(const TodaState& s, const CartanMatrix& cartan) {
  require(s.level == 1, "canonical_rhs: requires l = 1");
  require(cartan.n == s.n, "canonical_rhs: rank mismatch");
  CanonicalDerivative d;
  d.rho0.resize(s.n);
  d.rho1.resize(s.n);
  d.phi0.resize(s.n);
  d.phi1.resize(s.n);
  for (int i = 0; i < s.n; ++i) {
    double g0 = s.gamma[i][0];           // e^{phi_{i,0}}
    double p1 = s.phi1(i);
    d.rho0[i] = -g0;
    d.rho1[i] = -(1.0 + p1) * g0;
    double dphi0 = 0.0, dphi1 = 0.0;
    for (int r = 0; r < s.n; ++r) {
      dphi0 += cartan.c[r][i] * s.rho[r][0];
      dphi1 += cartan.c[i][r] * s.rho[r][1];
    }
    d.phi0[i] = dphi0;
    d.phi1[i] = dphi1;
  }
  return d;
}

TakiffElement<double> lax_rhs(const LieAlgebraData& data, const TakiffElement<double>& ssf,
                              const TakiffElement<double>& y) {
  TakiffElement<double> rel = y - ssf;
  for (const auto& [key, c] : rel.coeffs)
    if (data.basis[key.first].kind == BasisKind::F) {
      std::ostringstream os;
      os << "lax_rhs: y - ssf has a component on " << data.basis[key.first].label
         << "; not supported on b_l";
      throw std::invalid_argument(os.str());
    }
  return bracket(data, y, project_bbar(data, y));
}

namespace {

struct ChartLayout {
  int n = 0, level = 0;
  Formulation formulation = Formulation::canonical;

  int size() const {
    return formulation == Formulation::canonical ? 4 * n : 2 * n * (level + 1);
  }

  std::vector<std::string> column_names() const {
    std::vector<std::string> cols;
    if (formulation == Formulation::canonical) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= 1; ++j)
          cols.push_back("rho_" + std::to_string(i + 1) + "_" + std::to_string(j));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= 1; ++j)
          cols.push_back("phi_" + std::to_string(i + 1) + "_" + std::to_string(j));
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= level; ++j)
          cols.push_back("rho_" + std::to_string(i + 1) + "_" + std::to_string(j));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= level; ++j)
          cols.push_back("gamma_" + std::to_string(i + 1) + "_" + std::to_string(j));
    }
    return cols;
  }

  std::vector<double> pack(const TodaState& s) const {
    std::vector<double> y;
    if (formulation == Formulation::canonical) {
      for (int i = 0; i < n; ++i) { y.push_back(s.rho[i][0]); y.push_back(s.rho[i][1]); }
      for (int i = 0; i < n; ++i) { y.push_back(s.phi0(i)); y.push_back(s.phi1(i)); }
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= level; ++j) y.push_back(s.rho[i][j]);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= level; ++j) y.push_back(s.gamma[i][j]);
    }
    return y;
  }

  TodaState unpack(const std::vector<double>& y) const {
    TodaState s(n, level);
    if (formulation == Formulation::canonical) {
      for (int i = 0; i < n; ++i) { s.rho[i][0] = y[2 * i]; s.rho[i][1] = y[2 * i + 1]; }
      for (int i = 0; i < n; ++i) {
        double p0 = y[2 * n + 2 * i], p1 = y[2 * n + 2 * i + 1];
        s.gamma[i][0] = std::exp(p0);
        s.gamma[i][1] = p1 * s.gamma[i][0];
      }
    } else {
      int idx = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= level; ++j) s.rho[i][j] = y[idx++];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= level; ++j) s.gamma[i][j] = y[idx++];
    }
    return s;
  }
};

}  // namespace

Trajectory integrate(const LieAlgebraData& data, const CartanMatrix& cartan,
                     Formulation formulation, const TodaState& state0, double t_end,
                     const IntegrateOptions& options) {
  require(state0.n == data.n && cartan.n == data.n, "integrate: rank mismatch");
  require(options.dt > 0.0, "integrate: dt must be positive");
  require(state0.gamma_positive() && state0.finite(), "integrate: invalid initial state");
  if (formulation == Formulation::canonical)
    require(state0.level == 1, "integrate: canonical formulation requires l = 1");

  ChartLayout chart{state0.n, state0.level, formulation};
  const int n = state0.n;

  OdeRhs rhs;
  if (formulation == Formulation::canonical) {
    rhs = [&cartan, n](double, const std::vector<double>& y, std::vector<double>& dy) {
      dy.assign(y.size(), 0.0);
      for (int i = 0; i < n; ++i) {
        double g0 = std::exp(y[2 * n + 2 * i]);
        double p1 = y[2 * n + 2 * i + 1];
        dy[2 * i] = -g0;
        dy[2 * i + 1] = -(1.0 + p1) * g0;
        double dphi0 = 0.0, dphi1 = 0.0;
        for (int r = 0; r < n; ++r) {
          dphi0 += cartan.c[r][i] * y[2 * r];
          dphi1 += cartan.c[i][r] * y[2 * r + 1];
        }
        dy[2 * n + 2 * i] = dphi0;
        dy[2 * n + 2 * i + 1] = dphi1;
      }
    };
  } else {
    rhs = [&data, chart](double, const std::vector<double>& y, std::vector<double>& dy) {
      TodaState s = chart.unpack(y);
      TakiffElement<double> el = to_takiff(data, s);
      TakiffElement<double> chi = bracket(data, el, project_bbar(data, el));
      dy.assign(y.size(), 0.0);
      int idx = 0;
      for (int i = 0; i < chart.n; ++i)
        for (int j = 0; j <= chart.level; ++j) dy[idx++] = chi.get(data.h_index(i), j);
      for (int i = 0; i < chart.n; ++i)
        for (int j = 0; j <= chart.level; ++j) dy[idx++] = chi.get(data.e_index(i), j);
    };
  }

  if (options.reverse_time) {
    OdeRhs forward = std::move(rhs);
    rhs = [forward](double t, const std::vector<double>& y, std::vector<double>& dy) {
      forward(t, y, dy);
      for (double& v : dy) v = -v;
    };
  }

  Trajectory traj;
  traj.formulation = formulation;
  traj.method = options.method;
  traj.n = state0.n;
  traj.level = state0.level;
  traj.reversed = options.reverse_time;
  traj.columns = chart.column_names();
  if (options.record_invariants)
    traj.invariant_specs = adjoint_invariant_specs(data.n, state0.level);
  const bool quartic = formulation == Formulation::canonical && n == 1 && state0.level == 1;

  auto record = [&](double t, const std::vector<double>& y) -> bool {
    TodaState s = chart.unpack(y);
    if (!s.finite()) {
      traj.status = TrajectoryStatus::nonfinite;
      traj.stop_time = t;
      traj.diagnostic = "nonfinite state value";
      return false;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= state0.level; ++j)
        if (!(s.gamma[i][j] > options.gamma_floor)) {
          traj.status = TrajectoryStatus::positivity_lost;
          traj.stop_time = t;
          std::ostringstream os;
          os << "gamma_" << (i + 1) << "_" << j << " reached " << s.gamma[i][j] << " at t = " << t;
          traj.diagnostic = os.str();
          return false;
        }
    traj.times.push_back(t);
    traj.states.push_back(y);
    traj.energy.push_back(hamiltonian(s, cartan));
    if (options.record_invariants) {
      TakiffElement<double> el = to_takiff(data, s);
      std::vector<double> vals;
      vals.reserve(traj.invariant_specs.size());
      for (const auto& spec : traj.invariant_specs)
        vals.push_back(evaluate_invariant(data, spec, el));
      traj.invariants.push_back(std::move(vals));
    }
    if (quartic) traj.quartic_residual.push_back(quartic_identity_residual(s));
    return true;
  };

  std::vector<double> y = chart.pack(state0);
  if (!record(0.0, y)) return traj;

  if (options.method == Method::rk4) {
    const long steps = std::lround(t_end / options.dt);
    double t = 0.0;
    for (long k = 1; k <= steps; ++k) {
      y = rk4_step(rhs, t, y, options.dt);
      t = static_cast<double>(k) * options.dt;
      if (!record(t, y)) return traj;
    }
  } else {
    Rk45Options ropt;
    ropt.abs_tol = options.abs_tol;
    ropt.rel_tol = options.rel_tol;
    ropt.initial_step = options.dt;
    bool ok = rk45_integrate_grid(rhs, 0.0, t_end, options.dt, y, ropt, record);
    if (!ok && traj.status == TrajectoryStatus::completed) {
      traj.status = TrajectoryStatus::nonfinite;
      traj.stop_time = traj.times.empty() ? 0.0 : traj.times.back();
      traj.diagnostic = "adaptive step size underflow";
    }
  }
  if (traj.status == TrajectoryStatus::completed)
    traj.stop_time = traj.times.empty() ? 0.0 : traj.times.back();
  return traj;
}

TodaState trajectory_state(const Trajectory& traj, std::size_t row) {
  ChartLayout chart{traj.n, traj.level, traj.formulation};
  return chart.unpack(traj.states.at(row));
}

double quartic_identity_residual(const TodaState& s) {
  require(s.n == 1 && s.level == 1, "quartic_identity_residual: requires n = 1, l = 1");
  const double p = s.rho[0][1];      // p = rho_{1,1}
  const double q = s.phi0(0);        // q = phi_{1,0}
  const double qbar = s.phi1(0);     // qbar = phi_{1,1}
  const double eq = std::exp(q);
  const double d2 = -2.0 * eq;
  const double d3 = -4.0 * p * eq;
  const double d4 = -8.0 * p * p * eq + 4.0 * (1.0 + qbar) * eq * eq;
  return d4 * d2 - d3 * d3 - (1.0 + qbar) * d2 * d2 * d2;
}

}  // namespace takiff
