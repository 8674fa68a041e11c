#include "takiff/cartan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "takiff/rational.hpp"

namespace takiff {

bool CartanMatrix::symmetric() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c[i][j] != c[j][i]) return false;
  return true;
}

CartanMatrix cartan_matrix(char series, int rank) {
  auto fail = [&](const std::string& why) {
    std::ostringstream os;
    os << "cartan_matrix(" << series << ", " << rank << "): " << why;
    throw std::invalid_argument(os.str());
  };
  if (rank < 1) fail("rank must be positive");

  CartanMatrix m;
  m.n = rank;
  m.c.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) m.c[i][i] = 2;
  auto chain = [&] {
    for (int i = 0; i + 1 < rank; ++i) {
      m.c[i][i + 1] = -1;
      m.c[i + 1][i] = -1;
    }
  };

  switch (series) {
    case 'A':
      chain();
      break;
    case 'B':
      if (rank < 2) fail("type B needs rank >= 2");
      chain();
      m.c[rank - 2][rank - 1] = -2;  // short last root
      break;
    case 'C':
      if (rank < 2) fail("type C needs rank >= 2");
      chain();
      m.c[rank - 1][rank - 2] = -2;
      break;
    case 'D':
      if (rank < 3) fail("type D needs rank >= 3");
      chain();
      m.c[rank - 2][rank - 1] = 0;
      m.c[rank - 1][rank - 2] = 0;
      m.c[rank - 3][rank - 1] = -1;
      m.c[rank - 1][rank - 3] = -1;
      break;
    default:
      fail("unknown series (expected A, B, C or D)");
  }
  return m;
}

namespace {

// Exact determinant by fraction-free elimination.
Integer int_determinant(std::vector<std::vector<Integer>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return Integer(1);
  Integer det = 1;
  Integer denom = 1;
  int sign = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) return Integer(0);
    if (pivot != col) { std::swap(a[pivot], a[col]); sign = -sign; }
    for (int r = col + 1; r < n; ++r) {
      for (int k = col + 1; k < n; ++k)
        a[r][k] = (a[r][k] * a[col][col] - a[r][col] * a[col][k]) / denom;
      a[r][col] = 0;
    }
    denom = a[col][col];
  }
  det = a[n - 1][n - 1];
  return sign > 0 ? det : -det;
}

}  // namespace

CartanValidation validate_cartan(const std::vector<std::vector<long long>>& m) {
  CartanValidation v;
  v.ok = true;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    v.checks.push_back({name, ok, detail});
    v.ok = v.ok && ok;
  };

  const int n = static_cast<int>(m.size());
  bool square = n > 0;
  for (const auto& row : m) square = square && static_cast<int>(row.size()) == n;
  add("square", square, square ? "" : "matrix is not square or is empty");
  if (!square) return v;

  bool diag = true;
  for (int i = 0; i < n; ++i) diag = diag && m[i][i] == 2;
  add("diagonal_two", diag, diag ? "" : "some c_{i,i} != 2");

  bool offdiag = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && m[i][j] > 0) offdiag = false;
  add("offdiag_nonpositive", offdiag, offdiag ? "" : "positive off-diagonal entry");

  bool zerosym = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((m[i][j] == 0) != (m[j][i] == 0)) zerosym = false;
  add("zero_symmetry", zerosym, zerosym ? "" : "c_{i,j} = 0 without c_{j,i} = 0");

  bool finite = true;
  std::string detail;
  for (int k = 1; k <= n && finite; ++k) {
    std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = Integer(m[i][j]);
    Integer d = int_determinant(sub);
    if (d <= 0) {
      finite = false;
      std::ostringstream os;
      os << "leading principal minor of order " << k << " is " << d;
      detail = os.str();
    }
  }
  add("finite_type_minors", finite, detail);
  return v;
}

CartanValidation validate_cartan(const CartanMatrix& m) {
  std::vector<std::vector<long long>> rows(m.n, std::vector<long long>(m.n));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) rows[i][j] = m.c[i][j];
  return validate_cartan(rows);
}

RootSystem positive_roots(const CartanMatrix& m) {
  CartanValidation v = validate_cartan(m);
  if (!v.ok) throw std::invalid_argument("positive_roots: matrix is not a finite-type Cartan matrix");

  const int n = m.n;
  RootSystem rs;
  rs.n = n;

  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> alpha(n, 0);
    alpha[i] = 1;
    known.insert(alpha);
    frontier.push_back(alpha);
  }

  // <beta, alpha_i^vee> = sum_j beta_j c_{i,j}; beta + alpha_i is a root iff
  // the down-string length p satisfies p - <beta, alpha_i^vee> > 0. Iterating
  // in height order keeps the down strings complete when they are consulted.
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += static_cast<long>(beta[j]) * m.c[i][j];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          bool zero = std::all_of(down.begin(), down.end(), [](int x) { return x == 0; });
          if (zero || known.count(down)) { ++p; if (zero) break; }
          else break;
        }
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
    if (known.size() > 10000) throw std::invalid_argument("positive_roots: closure did not terminate");
  }

  rs.positive.assign(known.begin(), known.end());
  auto ht = [](const std::vector<int>& r) {
    int h = 0;
    for (int x : r) h += x;
    return h;
  };
  // Height ascending; within a height, descending lexicographic order of the
  // coefficient vectors so that alpha_1 precedes alpha_2 and the first n
  // entries are the simple roots in their natural order.
  std::sort(rs.positive.begin(), rs.positive.end(), [&](const auto& a, const auto& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rs.height.resize(rs.positive.size());
  for (size_t i = 0; i < rs.positive.size(); ++i) rs.height[i] = ht(rs.positive[i]);

  // Exponents are the conjugate of the height partition d_k = #{roots of height k}.
  int max_h = rs.height.empty() ? 0 : *std::max_element(rs.height.begin(), rs.height.end());
  std::vector<int> d(max_h + 1, 0);
  for (int h : rs.height) d[h] += 1;
  for (int row = 1; row <= (max_h >= 1 ? d[1] : 0); ++row) {
    int count = 0;
    for (int h = 1; h <= max_h; ++h)
      if (d[h] >= row) ++count;
    rs.exponents.push_back(count);
  }
  std::sort(rs.exponents.begin(), rs.exponents.end());
  return rs;
}

}  // namespace takiff
