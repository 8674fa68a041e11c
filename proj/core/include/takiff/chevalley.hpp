#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "takiff/cartan.hpp"
#include "takiff/rational.hpp"

namespace takiff {

enum class BasisKind { E, H, F };

struct BasisVector {
  BasisKind kind;
  int root_index = -1;     // index into RootSystem::positive (E/F), or Cartan index (H)
  int ad_x0_degree = 0;    // root height, 0, or minus root height
  int star_partner = -1;   // transpose partner in the basis
  std::string label;       // "e1", "e1-3", "h2", "f1-3"
  std::vector<std::vector<Rational>> matrix;  // (n+1) x (n+1) realization
};

// Exact Chevalley-basis realization of sl_{n+1}: e_beta = E_{ij}, f_beta =
// E_{ji} for the interval root beta = alpha_i + ... + alpha_{j-1}, and
// h_i = [e_i, f_i] = E_{ii} - E_{i+1,i+1}. kappa is the matrix trace form,
// which gives kappa(e_beta, f_beta) = 1 and kappa(h_i, h_i) = 2.
struct LieAlgebraData {
  int n = 0;
  CartanMatrix cartan;
  RootSystem roots;
  std::vector<BasisVector> basis;  // e_beta block, then h block, then f_beta block

  // bracket_table[i][j] = sparse expansion of [basis_i, basis_j]
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> bracket_table;
  std::vector<std::vector<Rational>> kappa;  // dense dim x dim

  // omega[i] = kappa-dual of the fundamental coweight, as h-coefficients:
  // solves kappa(h_j, omega_i) = delta_{ij}; x0 = sum_i omega_i.
  std::vector<std::vector<Rational>> omega_h_coeffs;
  std::vector<Rational> x0_h_coeffs;

  int dim() const { return static_cast<int>(basis.size()); }
  int e_index(int root_index) const { return root_index; }
  int h_index(int i) const { return roots.count() + i; }
  int f_index(int root_index) const { return roots.count() + n + root_index; }

  std::optional<int> index_of_label(const std::string& label) const;
};

LieAlgebraData chevalley_basis_sl(int n);

}  // namespace takiff
