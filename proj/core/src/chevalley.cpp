#include "takiff/chevalley.hpp"

#include <sstream>
#include <stdexcept>

namespace takiff {

namespace {

using Mat = std::vector<std::vector<Rational>>;

Mat zero_matrix(int d) { return Mat(d, std::vector<Rational>(d, Rational(0))); }

Mat mat_mul(const Mat& a, const Mat& b) {
  const int d = static_cast<int>(a.size());
  Mat c = zero_matrix(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Mat mat_commutator(const Mat& a, const Mat& b) {
  Mat ab = mat_mul(a, b), ba = mat_mul(b, a);
  const int d = static_cast<int>(a.size());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) ab[i][j] -= ba[i][j];
  return ab;
}

Rational mat_trace_product(const Mat& a, const Mat& b) {
  const int d = static_cast<int>(a.size());
  Rational t(0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t += a[i][j] * b[j][i];
  return t;
}

// Interval [lo, hi] of simple roots covered by an A-type positive root.
std::pair<int, int> root_interval(const std::vector<int>& root) {
  int lo = -1, hi = -1;
  for (int i = 0; i < static_cast<int>(root.size()); ++i) {
    if (root[i] == 1) {
      if (lo < 0) lo = i;
      hi = i;
    } else if (root[i] != 0) {
      throw std::logic_error("root_interval: not an A-type root");
    }
  }
  return {lo, hi};
}

std::string root_label(char prefix, const std::vector<int>& root) {
  auto [lo, hi] = root_interval(root);
  std::ostringstream os;
  os << prefix << (lo + 1);
  if (hi != lo) os << '-' << (hi + 1);
  return os.str();
}

// Solve M x = rhs exactly (M square nonsingular).
std::vector<Rational> solve_exact(Mat m, std::vector<Rational> rhs) {
  const int d = static_cast<int>(m.size());
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) throw std::logic_error("solve_exact: singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    Rational inv = Rational(1) / m[col][col];
    for (int j = col; j < d; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = col; j < d; ++j) m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

std::optional<int> LieAlgebraData::index_of_label(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (basis[i].label == label) return i;
  return std::nullopt;
}

LieAlgebraData chevalley_basis_sl(int n) {
  if (n < 1) throw std::invalid_argument("chevalley_basis_sl: rank must be >= 1");

  LieAlgebraData data;
  data.n = n;
  data.cartan = cartan_matrix('A', n);
  data.roots = positive_roots(data.cartan);
  const int J = data.roots.count();
  const int d = n + 1;

  data.basis.resize(2 * J + n);
  for (int r = 0; r < J; ++r) {
    auto [lo, hi] = root_interval(data.roots.positive[r]);
    BasisVector e;
    e.kind = BasisKind::E;
    e.root_index = r;
    e.ad_x0_degree = data.roots.height[r];
    e.label = root_label('e', data.roots.positive[r]);
    e.matrix = zero_matrix(d);
    e.matrix[lo][hi + 1] = 1;
    data.basis[data.e_index(r)] = e;

    BasisVector f;
    f.kind = BasisKind::F;
    f.root_index = r;
    f.ad_x0_degree = -data.roots.height[r];
    f.label = root_label('f', data.roots.positive[r]);
    f.matrix = zero_matrix(d);
    f.matrix[hi + 1][lo] = 1;
    data.basis[data.f_index(r)] = f;
  }
  for (int i = 0; i < n; ++i) {
    BasisVector h;
    h.kind = BasisKind::H;
    h.root_index = i;
    h.ad_x0_degree = 0;
    h.label = "h" + std::to_string(i + 1);
    h.matrix = zero_matrix(d);
    h.matrix[i][i] = 1;
    h.matrix[i + 1][i + 1] = -1;
    data.basis[data.h_index(i)] = h;
  }
  for (int r = 0; r < J; ++r) {
    data.basis[data.e_index(r)].star_partner = data.f_index(r);
    data.basis[data.f_index(r)].star_partner = data.e_index(r);
  }
  for (int i = 0; i < n; ++i) data.basis[data.h_index(i)].star_partner = data.h_index(i);

  const int dim = data.dim();
  data.kappa.assign(dim, std::vector<Rational>(dim, Rational(0)));
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      Rational k = mat_trace_product(data.basis[a].matrix, data.basis[b].matrix);
      data.kappa[a][b] = k;
      data.kappa[b][a] = k;
    }

  // Expand an sl matrix over the basis: off-diagonal entries pick out root
  // vectors, the diagonal is resolved through partial sums over the h_i.
  auto expand = [&](const Mat& m) {
    std::vector<std::pair<int, Rational>> out;
    for (int r = 0; r < J; ++r) {
      auto [lo, hi] = root_interval(data.roots.positive[r]);
      if (m[lo][hi + 1] != 0) out.emplace_back(data.e_index(r), m[lo][hi + 1]);
      if (m[hi + 1][lo] != 0) out.emplace_back(data.f_index(r), m[hi + 1][lo]);
    }
    Rational partial(0);
    for (int i = 0; i < n; ++i) {
      partial += m[i][i];
      if (partial != 0) out.emplace_back(data.h_index(i), partial);
    }
    return out;
  };

  data.bracket_table.assign(dim, std::vector<std::vector<std::pair<int, Rational>>>(dim));
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      data.bracket_table[a][b] = expand(mat_commutator(data.basis[a].matrix, data.basis[b].matrix));

  // kappa(h_j, omega_i) = delta_{ij} over the h span
  Mat gram(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = data.kappa[data.h_index(i)][data.h_index(j)];
  data.omega_h_coeffs.resize(n);
  data.x0_h_coeffs.assign(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> rhs(n, Rational(0));
    rhs[i] = 1;
    data.omega_h_coeffs[i] = solve_exact(gram, rhs);
    for (int j = 0; j < n; ++j) data.x0_h_coeffs[j] += data.omega_h_coeffs[i][j];
  }

  return data;
}

}  // namespace takiff
