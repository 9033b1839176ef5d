#include "jones/lab/config.hpp"

namespace jones::lab {

int paper_K(double inflation) { return 100 + static_cast<int>(std::ceil(std::log2(inflation))); }

double ExperimentConfig::resolved_eps1() const {
  if (eps1) return *eps1;
  return 1.0 / (126.0 * inflation);
}

double ExperimentConfig::resolved_eps2() const {
  if (eps2) return *eps2;
  if (profile == "paper") return std::ldexp(1.0, -55) * resolved_eps1() / inflation;
  return 0.05;
}

int ExperimentConfig::stride(int M) const {
  if (J) return *J;
  if (profile == "paper") return paper_K(inflation) * std::max(M, 1);
  return 6;
}

void ExperimentConfig::validate() const {
  if (!(inflation > 1.0)) throw InputError("inflation must exceed 1");
  if (!unsafe_lambda && lambda != 1.0 && lambda != 5.0) throw InputError("lambda must be 1 or 5 (see --unsafe-lambda)");
  if (!(lambda > 0.0)) throw InputError("lambda must be positive");
  if (profile != "lab" && profile != "paper") throw InputError("profile must be lab or paper");
  if (J && *J < 4) throw InputError("J must be at least 4");
  if (!(c > 0.0 && c <= 0.2)) throw InputError("c must lie in (0, 1/5]");
  if (!(p >= 1.0)) throw InputError("p must be at least 1");
  if (!(q > 0.0 && q < 1.0)) throw InputError("q must lie in (0, 1)");
  if (!(resolved_eps1() > 0.0) || !(resolved_eps2() > 0.0)) throw InputError("epsilons must be positive");
  if (k_min && k_max && *k_min > *k_max) throw InputError("k_min must not exceed k_max");
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  ExperimentConfig c;
  try {
    if (j.contains("curve")) {
      const auto& cj = j["curve"];
      if (cj.contains("path")) c.curve_path = cj["path"].get<std::string>();
      c.generator = cj.value("generator", c.generator);
      if (cj.contains("params"))
        for (auto& [k, v] : cj["params"].items()) c.params[k] = v.get<double>();
    }
    if (j.contains("space")) c.space = space_from_json(j["space"]);
    c.inflation = j.value("inflation", c.inflation);
    c.lambda = j.value("lambda", c.lambda);
    c.unsafe_lambda = j.value("unsafe_lambda", c.unsafe_lambda);
    c.profile = j.value("profile", c.profile);
    if (j.contains("eps1") && !j["eps1"].is_null()) c.eps1 = j["eps1"].get<double>();
    if (j.contains("eps2") && !j["eps2"].is_null()) c.eps2 = j["eps2"].get<double>();
    if (j.contains("J") && !j["J"].is_null()) c.J = j["J"].get<int>();
    c.c = j.value("c", c.c);
    if (j.contains("k_min") && !j["k_min"].is_null()) c.k_min = j["k_min"].get<int>();
    if (j.contains("k_max") && !j["k_max"].is_null()) c.k_max = j["k_max"].get<int>();
    c.p = j.value("p", c.p);
    c.spacing = j.value("spacing", c.spacing);
    c.q = j.value("q", c.q);
    c.out = j.value("out", c.out);
    c.seed = j.value("seed", c.seed);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad config field: ") + e.what());
  }
  return c;
}

json config_to_json(const ExperimentConfig& c) {
  json j;
  json cj;
  if (!c.curve_path.empty()) cj["path"] = c.curve_path;
  cj["generator"] = c.generator;
  json pj = json::object();
  for (const auto& [k, v] : c.params) pj[k] = v;
  cj["params"] = pj;
  j["curve"] = cj;
  j["space"] = space_to_json(c.space);
  j["inflation"] = c.inflation;
  j["lambda"] = c.lambda;
  j["profile"] = c.profile;
  j["eps1"] = c.resolved_eps1();
  j["eps2"] = c.resolved_eps2();
  if (c.J)
    j["J"] = *c.J;
  else
    j["J"] = nullptr;
  j["c"] = c.c;
  j["p"] = c.p;
  j["q"] = c.q;
  j["seed"] = c.seed;
  return j;
}

ExperimentConfig load_config(const std::string& path) { return config_from_json(read_json_file(path)); }

}  // namespace jones::lab
