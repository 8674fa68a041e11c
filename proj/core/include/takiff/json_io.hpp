#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "takiff/takiff_element.hpp"
#include "takiff/toda.hpp"

namespace takiff {

// Elements serialize as {rank, level, coeffs: [{label, level, num, den}]}.
// num/den are decimal strings so arbitrary rationals round-trip.
nlohmann::json element_to_json(const LieAlgebraData& data, const TakiffElement<Rational>& x);
TakiffElement<Rational> element_from_json(const LieAlgebraData& data, const nlohmann::json& j);

nlohmann::json toda_state_to_json(const TodaState& s);
TodaState toda_state_from_json(const nlohmann::json& j);

struct ExperimentConfig {
  std::string subcommand = "simulate";
  std::string series = "A";
  int rank = 1;
  int level = 1;
  std::string formulation = "canonical";
  std::string method = "rk4";
  double t_end = 10.0;
  double dt = 1e-3;
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::optional<TodaState> initial;  // defaults to rho = 0, gamma = 1
  std::string out;
  std::uint64_t seed = 0;
};

nlohmann::json config_to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const nlohmann::json& j);

}  // namespace takiff
