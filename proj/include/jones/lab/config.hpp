#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "jones/lab/generators.hpp"
#include "jones/lab/io.hpp"

namespace jones::lab {

struct ExperimentConfig {
  std::string generator = "segment";
  Params params;
  std::string curve_path;  // overrides the generator when set
  NormedSpace space = NormedSpace::l2();
  double inflation = 4.0;
  double lambda = 1.0;
  bool unsafe_lambda = false;
  std::string profile = "lab";  // lab | paper
  std::optional<double> eps1;
  std::optional<double> eps2;
  std::optional<int> J;  // lab default 6; paper profile uses K * M per bucket
  double c = 1.0 / 4096.0;
  std::optional<int> k_min;
  std::optional<int> k_max;
  double p = 2.0;
  double spacing = 0.0;
  double q = 0.999;
  std::string out = "out";
  uint64_t seed = 1;

  double resolved_eps1() const;
  double resolved_eps2() const;
  /// Level stride for the bucket with beta_{S*} in (2^{-M}, 2^{1-M}].
  int stride(int M) const;
  void validate() const;
};

/// K = 100 + ceil(log2 A).
int paper_K(double inflation);

ExperimentConfig config_from_json(const json& j);
json config_to_json(const ExperimentConfig& c);
ExperimentConfig load_config(const std::string& path);

}  // namespace jones::lab
