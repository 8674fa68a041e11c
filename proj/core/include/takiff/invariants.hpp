#pragma once

#include <variant>
#include <vector>

#include "takiff/takiff_element.hpp"

namespace takiff {

// Coefficient of z^{(k-1)l - j} in tr(M(z)^k), where M(z) = sum_m M_m z^m is
// the matrix polynomial of the level components of an element. k runs over
// exponent+1 = 2..n+1; j over 0..(k-1)l.
struct InvariantSpec {
  int power = 2;  // k
  int index = 0;  // j

  friend bool operator==(const InvariantSpec&, const InvariantSpec&) = default;
};

inline int z_degree(const InvariantSpec& s, int level) {
  return (s.power - 1) * level - s.index;
}

// The z-coefficients of tr(M(z)^k) of degree <= l are exactly the adjoint-
// invariant ones: tr(y^k) is well defined over the truncated polynomial ring,
// so conjugation by exp(n_l) fixes the coefficients of z^0..z^l, while higher
// coefficients see the ring truncation. They form the n(l+1) generating
// family; the rest of the coefficient family is exposed but not conserved.
inline bool is_adjoint_invariant(const InvariantSpec& s, int level) {
  int d = z_degree(s, level);
  return d >= 0 && d <= level;
}

void validate_spec(const InvariantSpec& s, int rank, int level);

std::vector<InvariantSpec> all_invariant_specs(int rank, int level);
std::vector<InvariantSpec> adjoint_invariant_specs(int rank, int level);

namespace detail {

template <class S>
using SmallMat = std::vector<std::vector<S>>;

template <class S>
SmallMat<S> zero_mat(int d) {
  return SmallMat<S>(d, std::vector<S>(d, ScalarOps<S>::zero()));
}

// Per-level matrices of the element in the defining representation.
template <class S>
std::vector<SmallMat<S>> level_matrices(const LieAlgebraData& data, const TakiffElement<S>& y) {
  const int d = data.n + 1;
  std::vector<SmallMat<S>> out(y.level + 1, zero_mat<S>(d));
  for (const auto& [key, c] : y.coeffs) {
    const auto& m = data.basis[key.first].matrix;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (m[i][j] == 0) continue;
        if constexpr (std::is_same_v<S, Rational>) out[key.second][i][j] += c * m[i][j];
        else out[key.second][i][j] += c * to_double(m[i][j]);
      }
  }
  return out;
}

// Polynomial-matrix product, full degree range.
template <class S>
std::vector<SmallMat<S>> matpoly_mul(const std::vector<SmallMat<S>>& a,
                                     const std::vector<SmallMat<S>>& b) {
  const int d = static_cast<int>(a.front().size());
  std::vector<SmallMat<S>> out(a.size() + b.size() - 1, zero_mat<S>(d));
  for (size_t p = 0; p < a.size(); ++p)
    for (size_t q = 0; q < b.size(); ++q)
      for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
          if (ScalarOps<S>::is_zero(a[p][i][k])) continue;
          for (int j = 0; j < d; ++j) out[p + q][i][j] += a[p][i][k] * b[q][k][j];
        }
  return out;
}

// Compensated (Kahan) trace accumulation in the double path keeps the
// Poisson-commutation residuals near machine precision.
template <class S>
S mat_trace(const SmallMat<S>& m) {
  if constexpr (std::is_same_v<S, double>) {
    double sum = 0.0, comp = 0.0;
    for (size_t i = 0; i < m.size(); ++i) {
      double t = m[i][i] - comp;
      double next = sum + t;
      comp = (next - sum) - t;
      sum = next;
    }
    return sum;
  } else {
    S t = ScalarOps<S>::zero();
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
  }
}

// Expand a matrix over the Chevalley basis; the trace part is dropped first
// (it pairs to zero against sl under the trace form).
template <class S>
TakiffElement<S> element_from_matrices(const LieAlgebraData& data,
                                       std::vector<SmallMat<S>> mats, int level) {
  const int d = data.n + 1;
  TakiffElement<S> out(data.n, level);
  for (int lvl = 0; lvl <= level; ++lvl) {
    SmallMat<S>& m = mats[lvl];
    S tr = mat_trace(m);
    S shift = tr / ScalarOps<S>::from_int(d);
    for (int i = 0; i < d; ++i) m[i][i] -= shift;
    for (int r = 0; r < data.roots.count(); ++r) {
      // interval of the A-type root
      int lo = -1, hi = -1;
      const auto& root = data.roots.positive[r];
      for (int i = 0; i < data.n; ++i)
        if (root[i] == 1) { if (lo < 0) lo = i; hi = i; }
      if (!ScalarOps<S>::is_zero(m[lo][hi + 1])) out.add(data.e_index(r), lvl, m[lo][hi + 1]);
      if (!ScalarOps<S>::is_zero(m[hi + 1][lo])) out.add(data.f_index(r), lvl, m[hi + 1][lo]);
    }
    S partial = ScalarOps<S>::zero();
    for (int i = 0; i < data.n; ++i) {
      partial += m[i][i];
      if (!ScalarOps<S>::is_zero(partial)) out.add(data.h_index(i), lvl, partial);
    }
  }
  return out;
}

}  // namespace detail

template <class S>
S evaluate_invariant(const LieAlgebraData& data, const InvariantSpec& spec,
                     const TakiffElement<S>& y) {
  validate_spec(spec, data.n, y.level);
  auto m = detail::level_matrices(data, y);
  auto p = m;
  for (int i = 1; i < spec.power; ++i) p = detail::matpoly_mul(p, m);
  const int deg = z_degree(spec, y.level);
  if (deg < 0 || deg >= static_cast<int>(p.size())) return ScalarOps<S>::zero();
  return detail::mat_trace(p[deg]);
}

// The unique g with Q(g, w) = directional derivative of the invariant at y
// along w. From d/de tr((M + eW)^k) = k tr(M^{k-1} W), the level-j component
// of g is k [z^{D-l+j}] M(z)^{k-1} with D the coefficient's z-degree.
template <class S>
TakiffElement<S> gradient_invariant(const LieAlgebraData& data, const InvariantSpec& spec,
                                    const TakiffElement<S>& y) {
  validate_spec(spec, data.n, y.level);
  const int l = y.level;
  auto m = detail::level_matrices(data, y);
  std::vector<detail::SmallMat<S>> p;
  if (spec.power == 2) {
    p = m;
  } else {
    p = m;
    for (int i = 2; i < spec.power; ++i) p = detail::matpoly_mul(p, m);
  }
  const int deg = z_degree(spec, l);
  std::vector<detail::SmallMat<S>> levels(l + 1, detail::zero_mat<S>(data.n + 1));
  for (int j = 0; j <= l; ++j) {
    int src = deg - l + j;
    if (src < 0 || src >= static_cast<int>(p.size())) continue;
    levels[j] = p[src];
    for (auto& row : levels[j])
      for (auto& x : row) x *= ScalarOps<S>::from_int(spec.power);
  }
  return detail::element_from_matrices(data, std::move(levels), l);
}

// A Poisson-bracket argument: a trace-coefficient invariant, or the linear
// function Q_x represented by the element x (whose differential is x itself).
template <class S>
using PoissonArg = std::variant<InvariantSpec, TakiffElement<S>>;

// [u, v](z) = Q(z, [du(z), dv(z)])
template <class S>
S poisson_bracket_at(const LieAlgebraData& data, const PoissonArg<S>& u, const PoissonArg<S>& v,
                     const TakiffElement<S>& z) {
  auto grad = [&](const PoissonArg<S>& a) {
    if (std::holds_alternative<InvariantSpec>(a))
      return gradient_invariant(data, std::get<InvariantSpec>(a), z);
    const auto& x = std::get<TakiffElement<S>>(a);
    z.check_compatible(x);
    return x;
  };
  TakiffElement<S> gu = grad(u), gv = grad(v);
  return q_form(data, z, bracket(data, gu, gv));
}

// u^ssf(x) = u(ssf + x) for x on b_l (h and e components only).
template <class S>
S restricted_invariant(const LieAlgebraData& data, const InvariantSpec& spec,
                       const TakiffElement<S>& x) {
  for (const auto& [key, c] : x.coeffs)
    if (data.basis[key.first].kind == BasisKind::F)
      throw std::invalid_argument("restricted_invariant: point must be supported on b_l");
  TakiffElement<S> y = principal_f<S>(data, x.level) + x;
  return evaluate_invariant(data, spec, y);
}

}  // namespace takiff
