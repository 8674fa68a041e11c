#pragma once

#include <vector>

#include "takiff/invariants.hpp"
#include "takiff/takiff_element.hpp"

namespace takiff {

// Basis data for the decomposition b_l = [ssf, n_l] (+) s_l, graded by the
// ad-x0 degree. Section vectors are unit basis vectors e_beta(m) picked
// degree by degree with a deterministic pivot order; image vectors are
// [ssf, e_beta(m)] over the graded basis of n_l.
struct SectionBasis {
  int level = 0;
  std::vector<TakiffElement<Rational>> section;
  std::vector<int> section_degree;
  std::vector<TakiffElement<Rational>> image;            // [ssf, generator]
  std::vector<TakiffElement<Rational>> image_generator;  // the n_l generator
  std::vector<int> image_degree;
};

SectionBasis graded_complement(const LieAlgebraData& data, int level,
                               const TakiffElement<Rational>& ssf);

struct Reduction {
  TakiffElement<Rational> log;      // w with exp(ad w)(ssf + s) = y
  TakiffElement<Rational> section;  // s in s_l
};

// Inverts the variety isomorphism N_l x (ssf + s_l) -> ssf + b_l pointwise:
// eliminates the lowest nonzero [ssf, n_l]-component of the residual by the
// uniquely solvable z in n_l, degree by degree. Exact on rational input.
Reduction reduce_to_section(const LieAlgebraData& data, const TakiffElement<Rational>& ssf,
                            const SectionBasis& sb, const TakiffElement<Rational>& y);

struct OrbitInvarianceReport {
  bool exact_zero = false;     // all discrepancies exactly zero (rational path)
  double max_abs_discrepancy = 0.0;
  bool log_is_zero = false;    // y was already on the section
  std::vector<InvariantSpec> specs;
  std::vector<double> value_at_y;
  std::vector<double> value_at_section;
};

// Evaluates the adjoint-invariant family at y and at its reduction ssf + s.
OrbitInvarianceReport orbit_invariance_check(const LieAlgebraData& data,
                                             const TakiffElement<Rational>& ssf,
                                             const SectionBasis& sb,
                                             const TakiffElement<Rational>& y);

}  // namespace takiff
