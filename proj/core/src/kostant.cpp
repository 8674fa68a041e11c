#include "takiff/kostant.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace takiff {

namespace {

using Elem = TakiffElement<Rational>;
using Key = std::pair<int, int>;

// Dense coordinates of an element restricted to one ad-x0 degree, over a
// fixed key ordering.
std::vector<Rational> coords_of(const Elem& x, const std::vector<Key>& keys) {
  std::vector<Rational> v(keys.size(), Rational(0));
  for (size_t i = 0; i < keys.size(); ++i) v[i] = x.get(keys[i].first, keys[i].second);
  return v;
}

// Incremental exact row reduction kept in reduced echelon form; try_add
// returns false when the vector is already in the span.
struct RowSpan {
  std::vector<std::vector<Rational>> rows;
  std::vector<int> pivots;

  bool try_add(std::vector<Rational> v) {
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rational f = v[pivots[r]];
      if (f != 0)
        for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    int p = -1;
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) { p = static_cast<int>(j); break; }
    if (p < 0) return false;
    Rational inv = Rational(1) / v[p];
    for (auto& x : v) x *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rational f = rows[r][p];
      if (f != 0)
        for (size_t j = 0; j < v.size(); ++j) rows[r][j] -= f * v[j];
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

// Solve A coef = rhs for A given by columns; throws if inconsistent.
std::vector<Rational> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                    std::vector<Rational> rhs) {
  const int m = static_cast<int>(rhs.size());
  const int k = static_cast<int>(cols.size());
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(k + 1, Rational(0)));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m; ++i) a[i][j] = cols[j][i];
  for (int i = 0; i < m; ++i) a[i][k] = rhs[i];

  int row = 0;
  std::vector<int> where(k, -1);
  for (int col = 0; col < k && row < m; ++col) {
    int pivot = -1;
    for (int r = row; r < m; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[row]);
    Rational inv = Rational(1) / a[row][col];
    for (int j = col; j <= k; ++j) a[row][j] *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = col; j <= k; ++j) a[r][j] -= f * a[row][j];
    }
    where[col] = row;
    ++row;
  }
  for (int r = row; r < m; ++r)
    if (a[r][k] != 0) throw std::logic_error("solve_columns: inconsistent system");
  std::vector<Rational> coef(k, Rational(0));
  for (int col = 0; col < k; ++col)
    if (where[col] >= 0) coef[col] = a[where[col]][k];
  return coef;
}

int max_positive_degree(const LieAlgebraData& data) {
  int d = 0;
  for (const auto& b : data.basis) d = std::max(d, b.ad_x0_degree);
  return d;
}

// Graded coordinate keys of (b_l)_[d]: h_i(m) at degree 0, e_beta(m) at the
// root heights. Root order follows the root system's (height, lex) order,
// levels ascending.
std::vector<Key> b_degree_keys(const LieAlgebraData& data, int level, int d) {
  std::vector<Key> keys;
  if (d == 0) {
    for (int i = 0; i < data.n; ++i)
      for (int m = 0; m <= level; ++m) keys.push_back({data.h_index(i), m});
    return keys;
  }
  for (int r = 0; r < data.roots.count(); ++r)
    if (data.roots.height[r] == d)
      for (int m = 0; m <= level; ++m) keys.push_back({data.e_index(r), m});
  return keys;
}

void check_in_b(const LieAlgebraData& data, const Elem& x, const char* who) {
  for (const auto& [key, c] : x.coeffs)
    if (data.basis[key.first].kind == BasisKind::F) {
      std::ostringstream os;
      os << who << ": element has a component on " << data.basis[key.first].label
         << " outside b_l";
      throw std::invalid_argument(os.str());
    }
}

}  // namespace

SectionBasis graded_complement(const LieAlgebraData& data, int level,
                               const TakiffElement<Rational>& ssf) {
  SectionBasis sb;
  sb.level = level;
  const int maxdeg = max_positive_degree(data);

  for (int d = 0; d <= maxdeg; ++d) {
    auto keys = b_degree_keys(data, level, d);
    RowSpan span;

    // images of the degree-(d+1) slice of n_l
    for (int r = 0; r < data.roots.count(); ++r) {
      if (data.roots.height[r] != d + 1) continue;
      for (int m = 0; m <= level; ++m) {
        Elem gen(data.n, level);
        gen.add(data.e_index(r), m, Rational(1));
        Elem img = bracket(data, ssf, gen);
        if (!span.try_add(coords_of(img, keys))) {
          std::ostringstream os;
          os << "graded_complement: ad(ssf) is rank deficient at ad-x0 degree " << d
             << "; ssf is not principal at every level";
          throw std::invalid_argument(os.str());
        }
        sb.image.push_back(img);
        sb.image_generator.push_back(gen);
        sb.image_degree.push_back(d);
      }
    }

    // extend to all of (b_l)_[d] with unit vectors in deterministic order
    for (const auto& key : keys) {
      std::vector<Rational> unit(keys.size(), Rational(0));
      for (size_t i = 0; i < keys.size(); ++i)
        if (keys[i] == key) unit[i] = 1;
      if (span.try_add(unit)) {
        Elem v(data.n, level);
        v.add(key.first, key.second, Rational(1));
        sb.section.push_back(v);
        sb.section_degree.push_back(d);
      }
    }
  }

  const int expected = data.n * (level + 1);
  if (static_cast<int>(sb.section.size()) != expected)
    throw std::logic_error("graded_complement: section dimension mismatch");
  return sb;
}

Reduction reduce_to_section(const LieAlgebraData& data, const TakiffElement<Rational>& ssf,
                            const SectionBasis& sb, const TakiffElement<Rational>& y) {
  Elem rel = y - ssf;
  check_in_b(data, rel, "reduce_to_section");
  const int level = y.level;
  const int maxdeg = max_positive_degree(data);

  Elem w(data.n, level);  // log of the group element, built degree by degree
  Elem s(data.n, level);  // section point

  for (int pass = 0; pass <= maxdeg + 1; ++pass) {
    NilpotentGroupElement<Rational> a(data, w);
    Elem residual = y - group_apply(data, a, ssf + s);
    if (residual.is_zero()) return {w, s};

    int d = std::numeric_limits<int>::max();
    for (const auto& [key, c] : residual.coeffs)
      d = std::min(d, data.basis[key.first].ad_x0_degree);
    if (d < 0) throw std::logic_error("reduce_to_section: residual left b_l");

    // slice the residual at its minimal degree and split along
    // [ssf, n_l] (+) s_l
    auto keys = b_degree_keys(data, level, d);
    Elem rd(data.n, level);
    for (const auto& [key, c] : residual.coeffs)
      if (data.basis[key.first].ad_x0_degree == d) rd.add(key.first, key.second, c);

    std::vector<std::vector<Rational>> cols;
    std::vector<int> col_image_idx, col_section_idx;
    for (size_t i = 0; i < sb.image.size(); ++i)
      if (sb.image_degree[i] == d) {
        cols.push_back(coords_of(sb.image[i], keys));
        col_image_idx.push_back(static_cast<int>(i));
        col_section_idx.push_back(-1);
      }
    for (size_t i = 0; i < sb.section.size(); ++i)
      if (sb.section_degree[i] == d) {
        cols.push_back(coords_of(sb.section[i], keys));
        col_image_idx.push_back(-1);
        col_section_idx.push_back(static_cast<int>(i));
      }
    auto coef = solve_columns(cols, coords_of(rd, keys));

    // residual = [dw, ssf] + ds + higher order, so dw = -sum a_i gen_i
    for (size_t c = 0; c < cols.size(); ++c) {
      if (coef[c] == 0) continue;
      if (col_image_idx[c] >= 0)
        w += sb.image_generator[col_image_idx[c]] * (-coef[c]);
      else
        s += sb.section[col_section_idx[c]] * coef[c];
    }
  }
  throw std::logic_error("reduce_to_section: elimination did not terminate");
}

OrbitInvarianceReport orbit_invariance_check(const LieAlgebraData& data,
                                             const TakiffElement<Rational>& ssf,
                                             const SectionBasis& sb,
                                             const TakiffElement<Rational>& y) {
  Reduction red = reduce_to_section(data, ssf, sb, y);
  OrbitInvarianceReport rep;
  rep.log_is_zero = red.log.is_zero();
  rep.exact_zero = true;
  rep.specs = adjoint_invariant_specs(data.n, y.level);
  Elem at_section = ssf + red.section;
  for (const auto& spec : rep.specs) {
    Rational a = evaluate_invariant(data, spec, y);
    Rational b = evaluate_invariant(data, spec, at_section);
    rep.value_at_y.push_back(to_double(a));
    rep.value_at_section.push_back(to_double(b));
    if (a != b) rep.exact_zero = false;
    rep.max_abs_discrepancy = std::max(rep.max_abs_discrepancy, std::abs(to_double(a - b)));
  }
  return rep;
}

}  // namespace takiff
