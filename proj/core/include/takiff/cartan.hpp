#pragma once

#include <string>
#include <vector>

namespace takiff {

struct CartanMatrix {
  int n = 0;                         // rank
  std::vector<std::vector<int>> c;   // n x n entries c_{i,j}

  int at(int i, int j) const { return c[i][j]; }
  bool symmetric() const;
};

// Standard finite-type Cartan matrices. Series A (n>=1), B (n>=2), C (n>=2),
// D (n>=3). Throws std::invalid_argument on anything else.
CartanMatrix cartan_matrix(char series, int rank);

struct CartanCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct CartanValidation {
  bool ok = false;
  std::vector<CartanCheck> checks;
};

// Diagnoses the defining properties one by one: square shape, diagonal 2,
// non-positive off-diagonal, zero symmetry, and positivity of all leading
// principal minors (finite type).
CartanValidation validate_cartan(const std::vector<std::vector<long long>>& m);
CartanValidation validate_cartan(const CartanMatrix& m);

struct RootSystem {
  int n = 0;
  // Positive roots as coefficient vectors over the simple roots, ordered by
  // (height, lexicographic); the first n entries are the simple roots.
  std::vector<std::vector<int>> positive;
  std::vector<int> height;   // height of each positive root
  std::vector<int> exponents;

  int count() const { return static_cast<int>(positive.size()); }
};

// Enumerates the positive roots of a finite-type Cartan matrix by closure
// under simple-root addition (root strings), and derives the exponents from
// the height partition. Throws on a non-finite-type matrix.
RootSystem positive_roots(const CartanMatrix& m);

}  // namespace takiff
