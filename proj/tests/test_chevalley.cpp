#include <doctest.h>

#include <stdexcept>

#include "takiff/chevalley.hpp"

using namespace takiff;

namespace {

Rational kappa_of(const LieAlgebraData& d, int a, int b) { return d.kappa[a][b]; }

// trace-form oracle straight from the matrices, bypassing the stored table
Rational trace_pairing(const LieAlgebraData& d, int a, int b) {
  const auto& ma = d.basis[a].matrix;
  const auto& mb = d.basis[b].matrix;
  Rational t(0);
  for (size_t i = 0; i < ma.size(); ++i)
    for (size_t j = 0; j < ma.size(); ++j) t += ma[i][j] * mb[j][i];
  return t;
}

}  // namespace

TEST_CASE("sl2: defining brackets and kappa normalization") {
  auto d = chevalley_basis_sl(1);
  REQUIRE(d.dim() == 3);
  int e = d.e_index(0), h = d.h_index(0), f = d.f_index(0);

  auto expect_single = [&](const std::vector<std::pair<int, Rational>>& expansion, int idx,
                           const Rational& c) {
    REQUIRE(expansion.size() == 1);
    CHECK(expansion[0].first == idx);
    CHECK(expansion[0].second == c);
  };
  expect_single(d.bracket_table[e][f], h, Rational(1));    // [e, f] = h
  expect_single(d.bracket_table[h][e], e, Rational(2));    // [h, e] = 2e
  expect_single(d.bracket_table[h][f], f, Rational(-2));   // [h, f] = -2f
  CHECK(kappa_of(d, h, h) == 2);
  CHECK(kappa_of(d, e, f) == 1);
  CHECK(kappa_of(d, e, e) == 0);
}

TEST_CASE("sl3: eight basis vectors, structure constants +-1") {
  auto d = chevalley_basis_sl(2);
  REQUIRE(d.dim() == 8);
  // [e_{a1}, e_{a2}] = +- e_{a1+a2}
  auto br = d.bracket_table[d.e_index(0)][d.e_index(1)];
  REQUIRE(br.size() == 1);
  CHECK(br[0].first == d.e_index(2));
  CHECK((br[0].second == 1 || br[0].second == -1));

  // kappa(h1, h2) = -1: cross-checked against the raw trace oracle
  CHECK(kappa_of(d, d.h_index(0), d.h_index(1)) == -1);
  CHECK(trace_pairing(d, d.h_index(0), d.h_index(1)) == -1);
}

TEST_CASE("kappa(e_alpha, e_beta) = delta_{alpha,-beta} and Cartan recovery") {
  for (int n = 1; n <= 3; ++n) {
    auto d = chevalley_basis_sl(n);
    const int J = d.roots.count();
    for (int r = 0; r < J; ++r)
      for (int q = 0; q < J; ++q) {
        CHECK(kappa_of(d, d.e_index(r), d.f_index(q)) == (r == q ? 1 : 0));
        CHECK(kappa_of(d, d.e_index(r), d.e_index(q)) == 0);
        CHECK(kappa_of(d, d.f_index(r), d.f_index(q)) == 0);
      }
    // [h_i, e_{alpha_j}] = c_{i,j} e_{alpha_j}
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto br = d.bracket_table[d.h_index(i)][d.e_index(j)];
        Rational c(0);
        for (const auto& [idx, coeff] : br) {
          REQUIRE(idx == d.e_index(j));
          c = coeff;
        }
        CHECK(c == d.cartan.c[i][j]);
      }
  }
}

TEST_CASE("antisymmetry, Jacobi, and kappa invariance on all basis triples") {
  for (int n = 1; n <= 3; ++n) {
    auto d = chevalley_basis_sl(n);
    const int dim = d.dim();

    auto expand_bracket = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
      std::vector<Rational> out(dim, Rational(0));
      for (int a = 0; a < dim; ++a) {
        if (x[a] == 0) continue;
        for (int b = 0; b < dim; ++b) {
          if (y[b] == 0) continue;
          for (const auto& [idx, c] : d.bracket_table[a][b]) out[idx] += x[a] * y[b] * c;
        }
      }
      return out;
    };
    auto unit = [&](int a) {
      std::vector<Rational> v(dim, Rational(0));
      v[a] = 1;
      return v;
    };

    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        auto ab = expand_bracket(unit(a), unit(b));
        auto ba = expand_bracket(unit(b), unit(a));
        for (int k = 0; k < dim; ++k) CHECK(ab[k] == -ba[k]);
        for (int c = 0; c < dim; ++c) {
          auto j1 = expand_bracket(unit(a), expand_bracket(unit(b), unit(c)));
          auto j2 = expand_bracket(unit(b), expand_bracket(unit(c), unit(a)));
          auto j3 = expand_bracket(unit(c), expand_bracket(unit(a), unit(b)));
          for (int k = 0; k < dim; ++k) CHECK(j1[k] + j2[k] + j3[k] == 0);
          // kappa([a,b], c) + kappa(b, [a,c]) = 0
          auto ac = expand_bracket(unit(a), unit(c));
          Rational lhs(0);
          for (int k = 0; k < dim; ++k) lhs += ab[k] * d.kappa[k][c] + ac[k] * d.kappa[b][k];
          CHECK(lhs == 0);
        }
      }
  }
}

TEST_CASE("omega basis: kappa(h_j, omega_i) = delta and x0 grades the roots") {
  for (int n = 1; n <= 3; ++n) {
    auto d = chevalley_basis_sl(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational pair(0);
        for (int k = 0; k < n; ++k)
          pair += d.omega_h_coeffs[i][k] * d.kappa[d.h_index(j)][d.h_index(k)];
        CHECK(pair == (i == j ? 1 : 0));
      }
    // [x0, e_beta] = ht(beta) e_beta via the bracket table
    for (int r = 0; r < d.roots.count(); ++r) {
      std::vector<Rational> out(d.dim(), Rational(0));
      for (int k = 0; k < n; ++k)
        for (const auto& [idx, c] : d.bracket_table[d.h_index(k)][d.e_index(r)])
          out[idx] += d.x0_h_coeffs[k] * c;
      for (int idx = 0; idx < d.dim(); ++idx)
        CHECK(out[idx] == (idx == d.e_index(r) ? Rational(d.roots.height[r]) : Rational(0)));
      CHECK(d.basis[d.e_index(r)].ad_x0_degree == d.roots.height[r]);
      CHECK(d.basis[d.f_index(r)].ad_x0_degree == -d.roots.height[r]);
    }
  }
}

TEST_CASE("labels round-trip through index_of_label") {
  auto d = chevalley_basis_sl(3);
  CHECK(d.index_of_label("h2") == d.h_index(1));
  CHECK(d.index_of_label("e1") == d.e_index(0));
  CHECK(d.index_of_label("f1-3").has_value());
  CHECK_FALSE(d.index_of_label("g7").has_value());
}
