#pragma once

#include <random>

#include "takiff/takiff_element.hpp"
#include "takiff/toda.hpp"

namespace takiff {

// Seeded generators for test data; everything downstream of the engine is
// deterministic in the seed.

inline Rational random_small_rational(std::mt19937_64& rng, int max_num = 3, int max_den = 3) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

// Random rational element supported on n_l (strictly positive ad-x0 degree).
inline TakiffElement<Rational> random_nilpotent_log(const LieAlgebraData& data, int level,
                                                    std::mt19937_64& rng) {
  TakiffElement<Rational> w(data.n, level);
  for (int r = 0; r < data.roots.count(); ++r)
    for (int m = 0; m <= level; ++m) w.add(data.e_index(r), m, random_small_rational(rng));
  return w;
}

// Random rational element supported on b_l (h and e components).
inline TakiffElement<Rational> random_b_element(const LieAlgebraData& data, int level,
                                                std::mt19937_64& rng) {
  TakiffElement<Rational> x(data.n, level);
  for (int i = 0; i < data.n; ++i)
    for (int m = 0; m <= level; ++m) x.add(data.h_index(i), m, random_small_rational(rng));
  for (int r = 0; r < data.roots.count(); ++r)
    for (int m = 0; m <= level; ++m) x.add(data.e_index(r), m, random_small_rational(rng));
  return x;
}

// Random rational element of g_l with all components populated.
inline TakiffElement<Rational> random_full_element(const LieAlgebraData& data, int level,
                                                   std::mt19937_64& rng) {
  TakiffElement<Rational> x = random_b_element(data, level, rng);
  for (int r = 0; r < data.roots.count(); ++r)
    for (int m = 0; m <= level; ++m) x.add(data.f_index(r), m, random_small_rational(rng));
  return x;
}

// Random point of Z with gamma in [lo, hi] and rho in [-1, 1].
inline TodaState random_toda_state(int n, int level, std::mt19937_64& rng, double lo = 0.5,
                                   double hi = 2.0) {
  TodaState s(n, level);
  std::uniform_real_distribution<double> g(lo, hi), r(-1.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= level; ++j) {
      s.rho[i][j] = r(rng);
      s.gamma[i][j] = g(rng);
    }
  return s;
}

// Random point of Z in a window that favors trajectories staying on Z for a
// long horizon under the canonical direction: level-0 momenta near zero,
// higher-level momenta strongly positive, small potential coefficients. The
// hyperbolic lattice leaves Z (gamma > 0) in finite time for generic data,
// so long-horizon conservation tests screen their samples from this window.
inline TodaState random_long_lived_state(int n, int level, std::mt19937_64& rng) {
  TodaState s(n, level);
  std::uniform_real_distribution<double> r0(-0.3, 0.3), rhi(2.0, 4.0), g(0.01, 0.08);
  for (int i = 0; i < n; ++i) {
    s.rho[i][0] = r0(rng);
    for (int j = 1; j <= level; ++j) s.rho[i][j] = rhi(rng);
    for (int j = 0; j <= level; ++j) s.gamma[i][j] = g(rng);
  }
  return s;
}

}  // namespace takiff
