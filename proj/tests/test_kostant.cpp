#include <doctest.h>

#include <stdexcept>

#include <random>

#include "takiff/kostant.hpp"
#include "takiff/sampling.hpp"

using namespace takiff;

using Elem = TakiffElement<Rational>;

namespace {

Elem random_section_point(const SectionBasis& sb, int n, int level, std::mt19937_64& rng) {
  Elem s(n, level);
  for (const auto& v : sb.section) s += v * random_small_rational(rng);
  return s;
}

}  // namespace

TEST_CASE("graded complement: sl2 dimensions and degrees") {
  auto d = chevalley_basis_sl(1);

  SUBCASE("l = 0: the complement of [f, n] in b is the e line") {
    Elem ssf = principal_f<Rational>(d, 0);
    SectionBasis sb = graded_complement(d, 0, ssf);
    REQUIRE(sb.section.size() == 1);
    CHECK(sb.section[0].get(d.e_index(0), 0) == 1);
    CHECK(sb.section_degree[0] == 1);
    CHECK(sb.image.size() == 1);  // [ssf, e(0)] spans h
  }

  SUBCASE("l = 1: two section vectors, both of ad-x0 degree +1") {
    Elem ssf = principal_f<Rational>(d, 1);
    SectionBasis sb = graded_complement(d, 1, ssf);
    REQUIRE(sb.section.size() == 2);
    CHECK(sb.section_degree == std::vector<int>{1, 1});
  }
}

TEST_CASE("graded complement: dimension identity dim s_l = n(l+1)") {
  for (int n = 1; n <= 3; ++n) {
    auto d = chevalley_basis_sl(n);
    for (int l = 0; l <= 2; ++l) {
      Elem ssf = principal_f<Rational>(d, l);
      SectionBasis sb = graded_complement(d, l, ssf);
      CHECK(static_cast<int>(sb.section.size()) == n * (l + 1));
      CHECK(sb.image.size() == sb.image_generator.size());
      // [ssf, n_l] has the dimension of n_l
      CHECK(static_cast<int>(sb.image.size()) == d.roots.count() * (l + 1));
    }
  }
}

TEST_CASE("graded complement: non-principal ssf rejected") {
  auto d = chevalley_basis_sl(2);
  SUBCASE("zero coefficient rejected at construction") {
    std::vector<std::vector<Rational>> coeff{{Rational(1), Rational(1)},
                                             {Rational(1), Rational(0)}};
    CHECK_THROWS_AS(principal_f(d, 1, coeff), std::invalid_argument);
  }
  SUBCASE("hand-built deficient element rejected by the rank check") {
    Elem bad(d.n, 1);
    bad.add(d.f_index(0), 0, Rational(1));  // missing the second simple direction
    bad.add(d.f_index(0), 1, Rational(1));
    bad.add(d.f_index(1), 1, Rational(1));
    CHECK_THROWS_AS(graded_complement(d, 1, bad), std::invalid_argument);
  }
}

TEST_CASE("reduce_to_section: trivial cases") {
  auto d = chevalley_basis_sl(1);
  const int l = 1;
  Elem ssf = principal_f<Rational>(d, l);
  SectionBasis sb = graded_complement(d, l, ssf);

  SUBCASE("y = ssf reduces to (identity, 0)") {
    Reduction r = reduce_to_section(d, ssf, sb, ssf);
    CHECK(r.log.is_zero());
    CHECK(r.section.is_zero());
  }

  SUBCASE("already-reduced points come back unchanged") {
    std::mt19937_64 rng(31);
    Elem s = random_section_point(sb, 1, l, rng);
    Reduction r = reduce_to_section(d, ssf, sb, ssf + s);
    CHECK(r.log.is_zero());
    CHECK(r.section == s);
  }

  SUBCASE("points off ssf + b_l are rejected") {
    Elem y = ssf;
    y.add(d.f_index(0), 0, Rational(1));  // perturbs the f component
    CHECK_THROWS_AS(reduce_to_section(d, ssf, sb, y), std::invalid_argument);
  }
}

TEST_CASE("reduce_to_section: exact round trip recovers (log a, s)") {
  std::mt19937_64 rng(37);
  for (int n = 1; n <= 2; ++n) {
    auto d = chevalley_basis_sl(n);
    for (int l = 0; l <= 2; ++l) {
      Elem ssf = principal_f<Rational>(d, l);
      SectionBasis sb = graded_complement(d, l, ssf);
      for (int trial = 0; trial < 10; ++trial) {
        Elem w = random_nilpotent_log(d, l, rng);
        Elem s = random_section_point(sb, n, l, rng);
        NilpotentGroupElement<Rational> a(d, w);
        Elem y = group_apply(d, a, ssf + s);
        Reduction r = reduce_to_section(d, ssf, sb, y);
        CHECK(r.log == w);
        CHECK(r.section == s);
        // and the reduction reassembles y exactly
        NilpotentGroupElement<Rational> back(d, r.log);
        CHECK(group_apply(d, back, ssf + r.section) == y);
      }
    }
  }
}

TEST_CASE("reduce_to_section: distinct section points stay distinct") {
  std::mt19937_64 rng(41);
  auto d = chevalley_basis_sl(2);
  const int l = 1;
  Elem ssf = principal_f<Rational>(d, l);
  SectionBasis sb = graded_complement(d, l, ssf);
  Elem s1 = random_section_point(sb, 2, l, rng);
  Elem s2 = s1;
  s2 += sb.section[0];  // distinct
  Elem w = random_nilpotent_log(d, l, rng);
  NilpotentGroupElement<Rational> a(d, w);
  Reduction r1 = reduce_to_section(d, ssf, sb, group_apply(d, a, ssf + s1));
  CHECK(r1.section == s1);
  CHECK_FALSE(r1.section == s2);
}

TEST_CASE("orbit invariance: exact zero discrepancy on rational input") {
  std::mt19937_64 rng(43);
  for (int n = 1; n <= 2; ++n) {
    auto d = chevalley_basis_sl(n);
    for (int l = 0; l <= 2; ++l) {
      Elem ssf = principal_f<Rational>(d, l);
      SectionBasis sb = graded_complement(d, l, ssf);
      for (int trial = 0; trial < 4; ++trial) {
        Elem w = random_nilpotent_log(d, l, rng);
        NilpotentGroupElement<Rational> a(d, w);
        Elem y = group_apply(d, a, ssf + random_section_point(sb, n, l, rng));
        OrbitInvarianceReport rep = orbit_invariance_check(d, ssf, sb, y);
        CHECK(rep.exact_zero);
        CHECK(rep.max_abs_discrepancy == 0.0);
      }
    }
  }
}

TEST_CASE("orbit invariance: float evaluation stays below 1e-10") {
  std::mt19937_64 rng(47);
  auto d = chevalley_basis_sl(2);
  const int l = 2;
  Elem ssf = principal_f<Rational>(d, l);
  SectionBasis sb = graded_complement(d, l, ssf);
  for (int trial = 0; trial < 5; ++trial) {
    Elem w = random_nilpotent_log(d, l, rng);
    NilpotentGroupElement<Rational> a(d, w);
    Elem y = group_apply(d, a, ssf + random_section_point(sb, 2, l, rng));
    Reduction r = reduce_to_section(d, ssf, sb, y);
    TakiffElement<double> yd = to_double_element(y);
    TakiffElement<double> sd = to_double_element(ssf + r.section);
    for (const auto& spec : adjoint_invariant_specs(2, l)) {
      double va = evaluate_invariant(d, spec, yd);
      double vb = evaluate_invariant(d, spec, sd);
      CHECK(std::abs(va - vb) < 1e-10 * std::max(1.0, std::abs(va)));
    }
  }
  SUBCASE("point already on the section reports the identity") {
    Elem s = random_section_point(sb, 2, l, rng);
    OrbitInvarianceReport rep = orbit_invariance_check(d, ssf, sb, ssf + s);
    CHECK(rep.log_is_zero);
    CHECK(rep.exact_zero);
  }
}
