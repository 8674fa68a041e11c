#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "takiff/chevalley.hpp"
#include "takiff/rational.hpp"

namespace takiff {

// Element of the truncated current algebra g (x) C[t]/(t^{l+1}), stored as a
// sparse map (basis index, level) -> coefficient. S is Rational or double.
template <class S>
struct TakiffElement {
  int rank = 0;
  int level = 0;  // truncation level l; levels run 0..l
  std::map<std::pair<int, int>, S> coeffs;

  TakiffElement() = default;
  TakiffElement(int rank_, int level_) : rank(rank_), level(level_) {}

  void add(int basis_index, int lvl, const S& c) {
    if (lvl < 0 || lvl > level) throw std::out_of_range("TakiffElement: level out of range");
    auto key = std::make_pair(basis_index, lvl);
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
      if (!ScalarOps<S>::is_zero(c)) coeffs.emplace(key, c);
    } else {
      it->second += c;
      if (ScalarOps<S>::is_zero(it->second)) coeffs.erase(it);
    }
  }

  S get(int basis_index, int lvl) const {
    auto it = coeffs.find({basis_index, lvl});
    return it == coeffs.end() ? ScalarOps<S>::zero() : it->second;
  }

  bool is_zero() const { return coeffs.empty(); }

  TakiffElement& operator+=(const TakiffElement& o) {
    check_compatible(o);
    for (const auto& [k, v] : o.coeffs) add(k.first, k.second, v);
    return *this;
  }
  TakiffElement& operator-=(const TakiffElement& o) {
    check_compatible(o);
    for (const auto& [k, v] : o.coeffs) add(k.first, k.second, -v);
    return *this;
  }
  TakiffElement& operator*=(const S& s) {
    if (ScalarOps<S>::is_zero(s)) { coeffs.clear(); return *this; }
    for (auto& [k, v] : coeffs) v *= s;
    return *this;
  }
  friend TakiffElement operator+(TakiffElement a, const TakiffElement& b) { return a += b; }
  friend TakiffElement operator-(TakiffElement a, const TakiffElement& b) { return a -= b; }
  friend TakiffElement operator*(TakiffElement a, const S& s) { return a *= s; }
  friend bool operator==(const TakiffElement& a, const TakiffElement& b) {
    return a.rank == b.rank && a.level == b.level && a.coeffs == b.coeffs;
  }

  void check_compatible(const TakiffElement& o) const {
    if (rank != o.rank || level != o.level)
      throw std::invalid_argument("TakiffElement: rank/level mismatch");
  }
};

inline TakiffElement<double> to_double_element(const TakiffElement<Rational>& x) {
  TakiffElement<double> out(x.rank, x.level);
  for (const auto& [k, v] : x.coeffs) out.add(k.first, k.second, to_double(v));
  return out;
}

// [x(i), y(j)] = [x,y](i+j), components past the truncation level dropped.
template <class S>
TakiffElement<S> bracket(const LieAlgebraData& data, const TakiffElement<S>& x,
                         const TakiffElement<S>& y) {
  x.check_compatible(y);
  TakiffElement<S> out(x.rank, x.level);
  for (const auto& [kx, cx] : x.coeffs)
    for (const auto& [ky, cy] : y.coeffs) {
      int lvl = kx.second + ky.second;
      if (lvl > x.level) continue;
      for (const auto& [idx, sc] : data.bracket_table[kx.first][ky.first]) {
        S c = cx * cy;
        if constexpr (std::is_same_v<S, Rational>) c *= sc;
        else c *= to_double(sc);
        out.add(idx, lvl, c);
      }
    }
  return out;
}

// Q(x(i), y(j)) = delta_{i+j,l} kappa(x, y)
template <class S>
S q_form(const LieAlgebraData& data, const TakiffElement<S>& x, const TakiffElement<S>& y) {
  x.check_compatible(y);
  S total = ScalarOps<S>::zero();
  for (const auto& [kx, cx] : x.coeffs)
    for (const auto& [ky, cy] : y.coeffs) {
      if (kx.second + ky.second != x.level) continue;
      const Rational& k = data.kappa[kx.first][ky.first];
      if (k == 0) continue;
      if constexpr (std::is_same_v<S, Rational>) total += cx * cy * k;
      else total += cx * cy * to_double(k);
    }
  return total;
}

// x(j) -> x*(l-j); in the matrix realization x* is the transpose.
template <class S>
TakiffElement<S> star(const LieAlgebraData& data, const TakiffElement<S>& x) {
  TakiffElement<S> out(x.rank, x.level);
  for (const auto& [k, v] : x.coeffs)
    out.add(data.basis[k.first].star_partner, x.level - k.second, v);
  return out;
}

// Q_*(x, y) = Q(x, y*); positive definite on real coefficients.
template <class S>
S inner_product(const LieAlgebraData& data, const TakiffElement<S>& x, const TakiffElement<S>& y) {
  return q_form(data, x, star(data, y));
}

// Orthogonal projection onto bbar_l = (h + n_bar) (x) C[t]/(t^{l+1}); kills
// every e_beta(j) component since (bbar_l)^perp = n_l.
template <class S>
TakiffElement<S> project_bbar(const LieAlgebraData& data, const TakiffElement<S>& x) {
  TakiffElement<S> out(x.rank, x.level);
  for (const auto& [k, v] : x.coeffs)
    if (data.basis[k.first].kind != BasisKind::E) out.add(k.first, k.second, v);
  return out;
}

// ssf = sum_j f_j(j) with f_j = sum_i coeff(i, j) e_{-alpha_i}; every
// coefficient must be nonzero so each level is principal nilpotent.
template <class S>
TakiffElement<S> principal_f(const LieAlgebraData& data, int l,
                             const std::vector<std::vector<S>>& coeff) {
  TakiffElement<S> out(data.n, l);
  if (static_cast<int>(coeff.size()) != data.n)
    throw std::invalid_argument("principal_f: coefficient rows must match the rank");
  for (int i = 0; i < data.n; ++i) {
    if (static_cast<int>(coeff[i].size()) != l + 1)
      throw std::invalid_argument("principal_f: coefficient columns must match level+1");
    for (int j = 0; j <= l; ++j) {
      if (ScalarOps<S>::is_zero(coeff[i][j])) {
        std::ostringstream os;
        os << "principal_f: zero coefficient at simple root " << (i + 1) << ", level " << j;
        throw std::invalid_argument(os.str());
      }
      out.add(data.f_index(i), j, coeff[i][j]);
    }
  }
  return out;
}

template <class S>
TakiffElement<S> principal_f(const LieAlgebraData& data, int l) {
  std::vector<std::vector<S>> ones(data.n, std::vector<S>(l + 1, ScalarOps<S>::one()));
  return principal_f(data, l, ones);
}

// Group element of the unipotent subgroup N_l (or of the opposite N_bar_l),
// stored through its logarithm. ad(log) is nilpotent, so the exponential
// below is a finite sum and exact over rationals.
template <class S>
struct NilpotentGroupElement {
  TakiffElement<S> log;

  explicit NilpotentGroupElement(const LieAlgebraData& data, TakiffElement<S> log_)
      : log(std::move(log_)) {
    bool any_pos = false, any_neg = false, any_zero = false;
    for (const auto& [k, v] : log.coeffs) {
      int deg = data.basis[k.first].ad_x0_degree;
      if (deg > 0) any_pos = true;
      else if (deg < 0) any_neg = true;
      else any_zero = true;
    }
    if (any_zero || (any_pos && any_neg))
      throw std::invalid_argument(
          "NilpotentGroupElement: log must be supported on n_l or on n_bar_l");
  }

  NilpotentGroupElement inverse() const {
    NilpotentGroupElement a = *this;
    a.log *= ScalarOps<S>::from_int(-1);
    return a;
  }
};

template <class S>
NilpotentGroupElement<S> make_identity_group_element(const LieAlgebraData& data, int rank, int l) {
  return NilpotentGroupElement<S>(data, TakiffElement<S>(rank, l));
}

// exp(ad log a)(x); terminates because ad(log a) raises |ad-x0 degree|.
template <class S>
TakiffElement<S> group_apply(const LieAlgebraData& data, const NilpotentGroupElement<S>& a,
                             const TakiffElement<S>& x) {
  TakiffElement<S> result = x;
  TakiffElement<S> term = x;
  const int cap = 4 * (data.n + 1) * (x.level + 1) + 4;
  for (int k = 1; k <= cap; ++k) {
    term = bracket(data, a.log, term);
    if (term.is_zero()) return result;
    term *= ScalarOps<S>::one() / ScalarOps<S>::from_int(k);
    result += term;
  }
  throw std::logic_error("group_apply: ad series did not terminate (log not nilpotent?)");
}

}  // namespace takiff
