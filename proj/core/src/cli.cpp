#include "takiff/cli.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "takiff/invariants.hpp"
#include "takiff/json_io.hpp"
#include "takiff/kostant.hpp"
#include "takiff/sampling.hpp"
#include "takiff/series_ode.hpp"

namespace takiff::cli {

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string invariant_column(const InvariantSpec& s) {
  return "I_k" + std::to_string(s.power) + "_j" + std::to_string(s.index);
}

int simulate_cmd(const ExperimentConfig& cfg) {
  if (cfg.series != "A") {
    std::cerr << "simulate: only type A has the exact algebra core\n";
    return 1;
  }
  Formulation form;
  if (cfg.formulation == "canonical") form = Formulation::canonical;
  else if (cfg.formulation == "lax") form = Formulation::lax;
  else {
    std::cerr << "simulate: unknown formulation '" << cfg.formulation << "'\n";
    return 1;
  }
  IntegrateOptions opt;
  if (cfg.method == "rk4") opt.method = Method::rk4;
  else if (cfg.method == "rk45") opt.method = Method::rk45;
  else {
    std::cerr << "simulate: unknown method '" << cfg.method << "'\n";
    return 1;
  }
  opt.dt = cfg.dt;
  opt.abs_tol = cfg.abs_tol;
  opt.rel_tol = cfg.rel_tol;

  LieAlgebraData data = chevalley_basis_sl(cfg.rank);
  // Default initial data sits in a window whose trajectory stays on Z for a
  // long horizon: weak potential, higher-level momenta pointing away from
  // the gamma > 0 boundary (sign depends on the flow direction).
  TodaState defaults(cfg.rank, cfg.level);
  for (int i = 0; i < cfg.rank; ++i) {
    defaults.rho[i][0] = 0.0;
    for (int j = 1; j <= cfg.level; ++j)
      defaults.rho[i][j] = form == Formulation::canonical ? 3.0 : -3.0;
    for (int j = 0; j <= cfg.level; ++j) defaults.gamma[i][j] = 0.05;
  }
  TodaState state0 = cfg.initial ? *cfg.initial : defaults;
  if (state0.n != cfg.rank || state0.level != cfg.level) {
    std::cerr << "simulate: initial state shape does not match --rank/--l\n";
    return 1;
  }
  if (!state0.gamma_positive() || !state0.finite()) {
    std::cerr << "simulate: initial state must have finite values and positive gamma\n";
    return 1;
  }

  Trajectory traj;
  try {
    traj = integrate(data, data.cartan, form, state0, cfg.t_end, opt);
  } catch (const std::exception& e) {
    std::cerr << "simulate: " << e.what() << "\n";
    return 1;
  }
  if (!cfg.out.empty()) {
    try {
      emit_trajectory(traj, cfg.out);
    } catch (const std::exception& e) {
      std::cerr << "simulate: " << e.what() << "\n";
      return 2;
    }
  }
  if (traj.status != TrajectoryStatus::completed) {
    std::cerr << "simulate: integration aborted: " << traj.diagnostic << "\n";
    return 2;
  }
  std::cout << "simulate: " << traj.times.size() << " rows, t final = "
            << fmt17(traj.stop_time) << "\n";
  return 0;
}

int invariants_cmd(int rank, int level, const std::string& point_path, const std::string& out) {
  LieAlgebraData data = chevalley_basis_sl(rank);
  std::ifstream in(point_path);
  if (!in) {
    std::cerr << "invariants: cannot open '" << point_path << "'\n";
    return 1;
  }
  nlohmann::json j;
  TakiffElement<Rational> y(rank, level);
  try {
    in >> j;
    y = element_from_json(data, j);
    if (y.level != level) throw std::invalid_argument("element level does not match --l");
  } catch (const std::exception& e) {
    std::cerr << "invariants: " << e.what() << "\n";
    return 1;
  }

  std::ostringstream csv;
  csv << "power,index,z_degree,adjoint_invariant,value\n";
  for (const auto& spec : all_invariant_specs(rank, level)) {
    Rational v = evaluate_invariant(data, spec, y);
    csv << spec.power << ',' << spec.index << ',' << z_degree(spec, level) << ','
        << (is_adjoint_invariant(spec, level) ? 1 : 0) << ',' << fmt17(to_double(v)) << "\n";
  }
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream os(out);
    if (!os) {
      std::cerr << "invariants: cannot write '" << out << "'\n";
      return 2;
    }
    os << csv.str();
  }
  return 0;
}

int reduce_cmd(int rank, int level, const std::string& in_path, const std::string& out_path) {
  LieAlgebraData data = chevalley_basis_sl(rank);
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "reduce: cannot open '" << in_path << "'\n";
    return 1;
  }
  try {
    nlohmann::json j;
    in >> j;
    TakiffElement<Rational> y = element_from_json(data, j);
    if (y.level != level) throw std::invalid_argument("element level does not match --l");
    TakiffElement<Rational> ssf = principal_f<Rational>(data, level);
    SectionBasis sb = graded_complement(data, level, ssf);
    Reduction red = reduce_to_section(data, ssf, sb, y);
    nlohmann::json result{{"log", element_to_json(data, red.log)},
                          {"section", element_to_json(data, red.section)}};
    if (out_path.empty()) {
      std::cout << result.dump(2) << "\n";
    } else {
      std::ofstream os(out_path);
      if (!os) {
        std::cerr << "reduce: cannot write '" << out_path << "'\n";
        return 2;
      }
      os << result.dump(2) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "reduce: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int series_cmd(double a0, double a1, double a2, double c0, int order, const std::string& out) {
  SeriesSolution sol;
  try {
    sol = series_coefficients(a0, a1, a2, c0, order);
  } catch (const std::exception& e) {
    std::cerr << "series: " << e.what() << "\n";
    return 1;
  }
  std::ostringstream csv;
  csv << "index,coefficient,bound,margin\n";
  for (size_t m = 0; m < sol.a.size(); ++m) {
    csv << m << ',' << fmt17(sol.a[m]) << ',';
    if (m >= 3) {
      double k = static_cast<double>(m) - 2.0;
      csv << fmt17(2.0 / (k * k)) << ',' << fmt17(sol.bound_margin[m - 3]);
    } else {
      csv << ',';
    }
    csv << "\n";
  }
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream os(out);
    if (!os) {
      std::cerr << "series: cannot write '" << out << "'\n";
      return 2;
    }
    os << csv.str();
  }
  return 0;
}

int series_check_global_cmd(double c0, double c1, double c2, double c3) {
  GlobalCondition g = global_condition(c0, c1, c2, c3);
  const char* names[4] = {"c0", "c1", "c2/2", "2(c3-c1^2-c1)/c2"};
  for (int i = 0; i < 4; ++i) {
    std::cout << names[i] << " = " << fmt17(g.quantities[i]) << " in (0,1): "
              << (g.verdicts[i] ? "yes" : "no") << "\n";
  }
  if (!g.diagnostic.empty()) std::cout << "note: " << g.diagnostic << "\n";
  std::cout << "global condition: " << (g.ok ? "satisfied" : "not satisfied") << "\n";
  return 0;
}

int check_cmd(std::uint64_t seed);

}  // namespace

void emit_trajectory(const Trajectory& traj, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("emit_trajectory: cannot write '" + path + "'");
  os << "t";
  for (const auto& c : traj.columns) os << ',' << c;
  os << ",H";
  for (const auto& s : traj.invariant_specs) os << ',' << invariant_column(s);
  if (!traj.quartic_residual.empty()) os << ",quartic_residual";
  os << "\n";
  for (size_t row = 0; row < traj.times.size(); ++row) {
    os << fmt17(traj.times[row]);
    for (double v : traj.states[row]) os << ',' << fmt17(v);
    os << ',' << fmt17(traj.energy[row]);
    if (!traj.invariant_specs.empty())
      for (double v : traj.invariants[row]) os << ',' << fmt17(v);
    if (!traj.quartic_residual.empty()) os << ',' << fmt17(traj.quartic_residual[row]);
    os << "\n";
  }
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Generalized Takiff algebras, hyperbolic Toda lattices, and the reduced series ODE"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string config_path;

  auto* sim = app.add_subcommand("simulate", "Integrate a Toda trajectory and emit CSV");
  std::string type_flag = "A";
  sim->add_option("--config", config_path, "JSON config file");
  auto* f_type = sim->add_option("--type", type_flag, "Cartan series (A)");
  auto* f_rank = sim->add_option("--rank", cfg.rank, "rank n");
  auto* f_level = sim->add_option("--l", cfg.level, "truncation level l");
  auto* f_form = sim->add_option("--formulation", cfg.formulation, "canonical | lax");
  auto* f_tend = sim->add_option("--t-end", cfg.t_end, "integration horizon");
  auto* f_dt = sim->add_option("--dt", cfg.dt, "step size / output grid");
  auto* f_method = sim->add_option("--method", cfg.method, "rk4 | rk45");
  auto* f_out = sim->add_option("--out", cfg.out, "output CSV path");
  auto* f_seed = sim->add_option("--seed", cfg.seed, "random seed");

  auto* inv = app.add_subcommand("invariants", "Print the invariant table at a point as CSV");
  int inv_rank = 1, inv_level = 1;
  std::string inv_point, inv_out;
  inv->add_option("--rank", inv_rank, "rank n")->required();
  inv->add_option("--l", inv_level, "truncation level l")->required();
  inv->add_option("--point", inv_point, "JSON element file")->required();
  inv->add_option("--out", inv_out, "output CSV path (default stdout)");

  auto* red = app.add_subcommand("reduce", "Reduce a point of ssf + b_l to the section");
  int red_rank = 1, red_level = 1;
  std::string red_in, red_out;
  red->add_option("--rank", red_rank, "rank n")->required();
  red->add_option("--l", red_level, "truncation level l")->required();
  red->add_option("--in", red_in, "JSON element file (the point y)")->required();
  red->add_option("--out", red_out, "output JSON path (default stdout)");

  auto* ser = app.add_subcommand("series", "Series solution of the reduced ODE");
  double a0 = 0, a1 = 0, a2 = 0, sc0 = 0;
  int order = 200;
  std::string ser_out;
  ser->add_option("--a0", a0, "Psi(0)");
  ser->add_option("--a1", a1, "Psi'(0)");
  ser->add_option("--a2", a2, "Psi''(0)/2");
  ser->add_option("--c0", sc0, "C0");
  ser->add_option("--order", order, "truncation order N");
  ser->add_option("--out", ser_out, "output CSV path (default stdout)");

  auto* glob = ser->add_subcommand("check-global", "Evaluate the global-solvability condition");
  double g0 = 0, g1 = 0, g2 = 0, g3 = 0;
  glob->add_option("--c0", g0, "qbar(0)")->required();
  glob->add_option("--c1", g1, "qbar'(0)")->required();
  glob->add_option("--c2", g2, "qbar''(0)")->required();
  glob->add_option("--c3", g3, "qbar'''(0)")->required();

  auto* chk = app.add_subcommand("check", "Run the aggregated property suite");
  std::uint64_t check_seed = 20260810;
  chk->add_option("--seed", check_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (sim->parsed()) {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "simulate: cannot open config '" << config_path << "'\n";
        return 1;
      }
      nlohmann::json j;
      try {
        in >> j;
        ExperimentConfig file_cfg = config_from_json(j);
        // explicit flags override the config file
        if (!f_type->count()) type_flag = file_cfg.series;
        if (!f_rank->count()) cfg.rank = file_cfg.rank;
        if (!f_level->count()) cfg.level = file_cfg.level;
        if (!f_form->count()) cfg.formulation = file_cfg.formulation;
        if (!f_tend->count()) cfg.t_end = file_cfg.t_end;
        if (!f_dt->count()) cfg.dt = file_cfg.dt;
        if (!f_method->count()) cfg.method = file_cfg.method;
        if (!f_out->count()) cfg.out = file_cfg.out;
        if (!f_seed->count()) cfg.seed = file_cfg.seed;
        cfg.abs_tol = file_cfg.abs_tol;
        cfg.rel_tol = file_cfg.rel_tol;
        cfg.initial = file_cfg.initial;
      } catch (const std::exception& e) {
        std::cerr << "simulate: bad config: " << e.what() << "\n";
        return 1;
      }
    }
    cfg.series = type_flag;
    if (const char* env = std::getenv("TAKIFF_TODA_SEED")) cfg.seed = std::strtoull(env, nullptr, 10);
    return simulate_cmd(cfg);
  }
  if (inv->parsed()) return invariants_cmd(inv_rank, inv_level, inv_point, inv_out);
  if (red->parsed()) return reduce_cmd(red_rank, red_level, red_in, red_out);
  if (ser->parsed()) {
    if (glob->parsed()) return series_check_global_cmd(g0, g1, g2, g3);
    return series_cmd(a0, a1, a2, sc0, order, ser_out);
  }
  if (chk->parsed()) {
    if (const char* env = std::getenv("TAKIFF_TODA_SEED"))
      check_seed = std::strtoull(env, nullptr, 10);
    return check_cmd(check_seed);
  }
  return 1;
}

int run(const std::vector<std::string>& args) {
  std::vector<std::string> argv_store;
  argv_store.push_back("takiff-toda");
  for (const auto& a : args) argv_store.push_back(a);
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

namespace {

struct CheckHarness {
  int failures = 0;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
      std::cout << "[ok]   " << name << "\n";
    } else {
      std::cout << "[FAIL] " << name << (detail.empty() ? "" : ": " + detail) << "\n";
      ++failures;
    }
  }
  void info(const std::string& name, const std::string& detail) {
    std::cout << "[info] " << name << ": " << detail << "\n";
  }
};

int check_cmd(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckHarness h;
  std::cout << "property suite, seed " << seed << "\n";

  // cartan
  {
    bool ok = true;
    for (char s : {'A', 'B', 'C', 'D'})
      for (int r = (s == 'A' ? 1 : s == 'D' ? 3 : 2); r <= 4; ++r)
        ok = ok && validate_cartan(cartan_matrix(s, r)).ok;
    h.check("cartan: registry matrices validate", ok);
    auto a3 = positive_roots(cartan_matrix('A', 3));
    h.check("cartan: A3 root count and exponents",
            a3.count() == 6 && a3.exponents == std::vector<int>({1, 2, 3}));
    h.check("cartan: affine matrix rejected",
            !validate_cartan(std::vector<std::vector<long long>>{{2, -2}, {-2, 2}}).ok);
  }

  // exact algebra
  {
    LieAlgebraData data = chevalley_basis_sl(2);
    const int l = 1;
    bool jacobi = true, invariance = true;
    std::uniform_int_distribution<int> pick(0, data.dim() - 1), lv(0, l);
    for (int trial = 0; trial < 200; ++trial) {
      TakiffElement<Rational> x(2, l), y(2, l), z(2, l);
      x.add(pick(rng), lv(rng), Rational(1));
      y.add(pick(rng), lv(rng), Rational(1));
      z.add(pick(rng), lv(rng), Rational(1));
      auto j1 = bracket(data, x, bracket(data, y, z)) + bracket(data, y, bracket(data, z, x)) +
                bracket(data, z, bracket(data, x, y));
      jacobi = jacobi && j1.is_zero();
      Rational inv = q_form(data, bracket(data, x, y), z) + q_form(data, y, bracket(data, x, z));
      invariance = invariance && inv == 0;
    }
    h.check("algebra: Jacobi identity on sampled basis triples (exact)", jacobi);
    h.check("algebra: Q invariance on sampled basis triples (exact)", invariance);

    TakiffElement<Rational> x = random_full_element(data, l, rng);
    h.check("algebra: star is an involution", star(data, star(data, x)) == x);
    h.check("algebra: Q_*(x,x) > 0 for nonzero x",
            x.is_zero() || inner_product(data, x, x) > 0);
    auto p = project_bbar(data, x);
    h.check("algebra: projection idempotent", project_bbar(data, p) == p);
    h.check("algebra: x - P(x) orthogonal to b_bar under Q_*",
            inner_product(data, x - p, p) == 0);
    NilpotentGroupElement<Rational> a(data, random_nilpotent_log(data, l, rng));
    h.check("algebra: group inverse round trip",
            group_apply(data, a, group_apply(data, a.inverse(), x)) == x);
    h.check("algebra: group action preserves Q",
            q_form(data, group_apply(data, a, x), group_apply(data, a, star(data, x))) ==
                q_form(data, x, star(data, x)));
  }

  // invariants
  {
    LieAlgebraData data = chevalley_basis_sl(2);
    const int l = 2;
    auto specs = adjoint_invariant_specs(2, l);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      TakiffElement<double> z = to_double_element(random_full_element(data, l, rng));
      for (size_t i = 0; i < specs.size(); ++i)
        for (size_t j = i + 1; j < specs.size(); ++j) {
          double b = poisson_bracket_at<double>(data, specs[i], specs[j], z);
          worst = std::max(worst, std::abs(b));
        }
    }
    h.check("invariants: pairwise Poisson commutation < 1e-9", worst < 1e-9,
            "max residual " + fmt17(worst));

    bool conj = true;
    for (int trial = 0; trial < 10; ++trial) {
      TakiffElement<Rational> y = random_full_element(data, 1, rng);
      NilpotentGroupElement<Rational> a(data, random_nilpotent_log(data, 1, rng));
      TakiffElement<Rational> ay = group_apply(data, a, y);
      for (const auto& spec : adjoint_invariant_specs(2, 1))
        conj = conj && evaluate_invariant(data, spec, y) == evaluate_invariant(data, spec, ay);
    }
    h.check("invariants: exact conjugation invariance under N_l", conj);

    // gradient vs central differences
    TakiffElement<double> y = to_double_element(random_full_element(data, l, rng));
    bool grad_ok = true;
    const double eps = 1e-5;
    for (const auto& spec : specs) {
      TakiffElement<double> g = gradient_invariant(data, spec, y);
      TakiffElement<double> w = to_double_element(random_full_element(data, l, rng));
      TakiffElement<double> yp = y + w * eps, ym = y - (w * eps);
      double fd = (evaluate_invariant(data, spec, yp) - evaluate_invariant(data, spec, ym)) /
                  (2 * eps);
      double qg = q_form(data, g, w);
      double scale = std::max({1.0, std::abs(fd), std::abs(qg)});
      grad_ok = grad_ok && std::abs(fd - qg) / scale < 1e-6;
    }
    h.check("invariants: gradient matches central differences", grad_ok);
  }

  // kostant
  {
    for (int n = 1; n <= 2; ++n)
      for (int l = 0; l <= 2; ++l) {
        LieAlgebraData data = chevalley_basis_sl(n);
        TakiffElement<Rational> ssf = principal_f<Rational>(data, l);
        SectionBasis sb = graded_complement(data, l, ssf);
        bool dims = static_cast<int>(sb.section.size()) == n * (l + 1);
        bool round = true;
        for (int trial = 0; trial < 5; ++trial) {
          TakiffElement<Rational> w = random_nilpotent_log(data, l, rng);
          TakiffElement<Rational> s(data.n, l);
          std::uniform_int_distribution<int> c(-2, 2);
          for (const auto& v : sb.section) s += v * Rational(c(rng));
          NilpotentGroupElement<Rational> a(data, w);
          TakiffElement<Rational> y = group_apply(data, a, ssf + s);
          Reduction red = reduce_to_section(data, ssf, sb, y);
          round = round && red.log == w && red.section == s;
        }
        h.check("kostant: exact round trip n=" + std::to_string(n) + " l=" + std::to_string(l),
                dims && round);
      }
  }

  // toda
  {
    LieAlgebraData data = chevalley_basis_sl(1);
    // omega block display value
    TodaState st(1, 1);
    st.gamma[0][0] = 1.0;
    st.gamma[0][1] = 3.0;
    OmegaBlock b = omega_block(st, 0);
    h.check("toda: T_1 at gamma=(1,3) equals [[-3,1],[1,0]]",
            b.T[0][0] == -3.0 && b.T[0][1] == 1.0 && b.T[1][0] == 1.0 && b.T[1][1] == 0.0);

    bool dets = true;
    for (int l = 0; l <= 3; ++l)
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> g;
        for (int j = 0; j <= l; ++j) g.push_back(random_small_rational(rng) + Rational(4));
        OmegaBlockExact ob = omega_block_exact(g);
        Rational expect(1);
        for (int j = 0; j <= l; ++j) expect *= g[0];
        dets = dets && (ob.det == expect || ob.det == -expect);
      }
    h.check("toda: det(t') = +/- gamma_0^{l+1} exactly", dets);

    TodaState ex(1, 1);
    ex.rho[0] = {0.0, 0.0};
    ex.gamma[0] = {1.0, 1.0};  // phi0 = 0, phi1 = 1
    h.check("toda: H example (0,0,0,1) -> 2",
            std::abs(hamiltonian_canonical(ex, data.cartan) - 2.0) < 1e-14);

    auto d = canonical_rhs(ex, data.cartan);
    h.check("toda: canonical rhs example (0,0,0,1) -> (-1,-2,0,0)",
            d.rho0[0] == -1.0 && d.rho1[0] == -2.0 && d.phi0[0] == 0.0 && d.phi1[0] == 0.0);

    IntegrateOptions opt;
    opt.dt = 1e-3;
    TodaState s0 = random_long_lived_state(1, 1, rng);
    Trajectory canon = integrate(data, data.cartan, Formulation::canonical, s0, 2.0, opt);
    double drift = 0.0;
    for (double e : canon.energy) drift = std::max(drift, std::abs(e - canon.energy.front()));
    h.check("toda: canonical energy drift < 1e-7 over t=2",
            canon.status == TrajectoryStatus::completed &&
                drift / std::abs(canon.energy.front()) < 1e-7);

    // run the Lax field forward from the endpoint of a reversed pass; the
    // forward trajectory retraces the curve and stays on Z
    IntegrateOptions rev = opt;
    rev.reverse_time = true;
    Trajectory back = integrate(data, data.cartan, Formulation::lax, s0, 2.0, rev);
    bool lax_ok = back.status == TrajectoryStatus::completed;
    double idrift = 0.0;
    if (lax_ok) {
      Trajectory lax = integrate(data, data.cartan, Formulation::lax,
                                 trajectory_state(back, back.states.size() - 1), 2.0, opt);
      lax_ok = lax.status == TrajectoryStatus::completed;
      for (const auto& row : lax.invariants)
        for (size_t k = 0; k < row.size(); ++k)
          idrift = std::max(idrift, std::abs(row[k] - lax.invariants.front()[k]) /
                                        std::max(1.0, std::abs(lax.invariants.front()[k])));
    }
    h.check("toda: invariant drift along Lax flow < 1e-7 over t=2", lax_ok && idrift < 1e-7);

    bool quartic = true;
    for (int trial = 0; trial < 50; ++trial) {
      TodaState q = random_toda_state(1, 1, rng);
      quartic = quartic && std::abs(quartic_identity_residual(q)) < 1e-10;
    }
    h.check("toda: quartic identity residual vanishes at random states", quartic);
  }

  // series
  {
    SeriesSolution s = series_coefficients(0.5, 0.0, 0.0, 0.0, 10);
    h.check("series: a3 = 1/8 for (1/2,0,0,0)", std::abs(s.a[3] - 0.125) < 1e-15 && s.a[4] == 0.0);
    bool bounds = true;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      SeriesSolution r = series_coefficients(u(rng), u(rng), u(rng), u(rng), 200);
      bounds = bounds && bound_check(r).ok;
    }
    h.check("series: |a_{k+2}| < 2/k^2 for k <= 198 over 100 samples", bounds);

    GlobalCondition g = global_condition(0.5, 0.5, 1.0, 1.0);
    GlobalCondition gbad = global_condition(2.0, 0.5, 1.0, 1.0);
    GlobalCondition gzero = global_condition(0.5, 0.5, 0.0, 1.0);
    h.check("series: global condition examples",
            g.ok && !gbad.ok && !gzero.ok && !gzero.diagnostic.empty());

    h.info("toda: positivity under the global condition",
           "not asserted; the sufficient condition does not keep qbar positive along the "
           "canonical flow (see the acceptance suite's global smoke test)");

    // informative only: how far the reduced ODE qbar = 2 Psi drifts from the
    // actual canonical qbar when seeded with matched derivatives at t = 0
    {
      LieAlgebraData d1 = chevalley_basis_sl(1);
      TodaState s = TodaState::from_canonical(1, {0.1}, {0.4}, {-2.0}, {0.6});
      double g0 = s.gamma[0][0], p1 = s.phi1(0);
      double c0 = p1;
      double c1 = 2.0 * s.rho[0][1];
      double c2 = -2.0 * (1.0 + p1) * g0;
      double c3 = -2.0 * g0 * (2.0 * s.rho[0][1] + 2.0 * s.rho[0][0] * (1.0 + p1));
      double C0 = (c3 - c0 * c0 / 2.0 - c0) / c2;
      SeriesSolution psi = series_coefficients(c0 / 2.0, c1 / 2.0, c2 / 4.0, C0, 120);
      IntegrateOptions opt;
      opt.dt = 1e-3;
      opt.record_invariants = false;
      Trajectory tr = integrate(d1, d1.cartan, Formulation::canonical, s, 1.0, opt);
      double dev = 0.0;
      if (tr.status == TrajectoryStatus::completed) {
        TodaState end = trajectory_state(tr, tr.states.size() - 1);
        dev = std::abs(end.phi1(0) - 2.0 * series_eval(psi, 1.0).value);
      }
      std::ostringstream os;
      os << "|qbar(1) - 2 Psi(1)| = " << dev << " with matched initial derivatives";
      h.info("toda/series: reduced-equation link", os.str());
    }
  }

  std::cout << (h.failures == 0 ? "all checks passed\n"
                                : std::to_string(h.failures) + " check(s) failed\n");
  return h.failures == 0 ? 0 : 1;
}

}  // namespace

}  // namespace takiff::cli
