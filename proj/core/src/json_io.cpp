#include "takiff/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace takiff {

using nlohmann::json;

json element_to_json(const LieAlgebraData& data, const TakiffElement<Rational>& x) {
  json coeffs = json::array();
  for (const auto& [key, c] : x.coeffs) {
    json entry;
    entry["label"] = data.basis[key.first].label;
    entry["level"] = key.second;
    entry["num"] = boost::multiprecision::numerator(c).str();
    entry["den"] = boost::multiprecision::denominator(c).str();
    coeffs.push_back(entry);
  }
  return json{{"rank", x.rank}, {"level", x.level}, {"coeffs", coeffs}};
}

TakiffElement<Rational> element_from_json(const LieAlgebraData& data, const json& j) {
  int rank = j.at("rank").get<int>();
  int level = j.at("level").get<int>();
  if (rank != data.n) throw std::invalid_argument("element_from_json: rank mismatch");
  if (level < 0) throw std::invalid_argument("element_from_json: negative level");
  TakiffElement<Rational> x(rank, level);
  for (const auto& entry : j.at("coeffs")) {
    std::string label = entry.at("label").get<std::string>();
    auto idx = data.index_of_label(label);
    if (!idx) throw std::invalid_argument("element_from_json: unknown basis label '" + label + "'");
    int lvl = entry.at("level").get<int>();
    Rational c;
    if (entry.at("num").is_string()) {
      std::string num = entry.at("num").get<std::string>();
      std::string den = entry.contains("den") ? entry.at("den").get<std::string>() : "1";
      c = rational_from_strings(num, den);
    } else {
      long long num = entry.at("num").get<long long>();
      long long den = entry.contains("den") ? entry.at("den").get<long long>() : 1;
      c = Rational(Integer(num), Integer(den));
    }
    x.add(*idx, lvl, c);
  }
  return x;
}

json toda_state_to_json(const TodaState& s) {
  return json{{"n", s.n}, {"level", s.level}, {"rho", s.rho}, {"gamma", s.gamma}};
}

TodaState toda_state_from_json(const json& j) {
  TodaState s(j.at("n").get<int>(), j.at("level").get<int>());
  auto rho = j.at("rho").get<std::vector<std::vector<double>>>();
  auto gamma = j.at("gamma").get<std::vector<std::vector<double>>>();
  if (static_cast<int>(rho.size()) != s.n || static_cast<int>(gamma.size()) != s.n)
    throw std::invalid_argument("toda_state_from_json: row count mismatch");
  for (int i = 0; i < s.n; ++i) {
    if (static_cast<int>(rho[i].size()) != s.level + 1 ||
        static_cast<int>(gamma[i].size()) != s.level + 1)
      throw std::invalid_argument("toda_state_from_json: column count mismatch");
  }
  s.rho = rho;
  s.gamma = gamma;
  return s;
}

json config_to_json(const ExperimentConfig& c) {
  json j{{"subcommand", c.subcommand}, {"series", c.series},   {"rank", c.rank},
         {"level", c.level},           {"formulation", c.formulation},
         {"method", c.method},         {"t_end", c.t_end},     {"dt", c.dt},
         {"abs_tol", c.abs_tol},       {"rel_tol", c.rel_tol}, {"out", c.out},
         {"seed", c.seed}};
  if (c.initial) j["initial"] = toda_state_to_json(*c.initial);
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig c;
  auto get_if = [&](const char* key, auto& target) {
    if (j.contains(key)) target = j.at(key).get<std::decay_t<decltype(target)>>();
  };
  get_if("subcommand", c.subcommand);
  get_if("series", c.series);
  get_if("rank", c.rank);
  get_if("level", c.level);
  get_if("formulation", c.formulation);
  get_if("method", c.method);
  get_if("t_end", c.t_end);
  get_if("dt", c.dt);
  get_if("abs_tol", c.abs_tol);
  get_if("rel_tol", c.rel_tol);
  get_if("out", c.out);
  get_if("seed", c.seed);
  if (j.contains("initial")) c.initial = toda_state_from_json(j.at("initial"));
  return c;
}

}  // namespace takiff
