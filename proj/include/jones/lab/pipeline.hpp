#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jones/beta.hpp"
#include "jones/core.hpp"
#include "jones/curve.hpp"
#include "jones/lab/config.hpp"
#include "jones/martingale.hpp"
#include "jones/net.hpp"

namespace jones::lab {

enum class Stage { Nets, Betas, Classify, Cores, Weights };

struct BallRow {
  BallId id;
  BetaResult beta;  // beta_E(Q) over the samples
  std::optional<BBallReport> b;
  int M = 0;
  int stride = 0;
  bool selected = false;
};

struct NodeInfo {
  std::string fragment_error;
  std::optional<SubarcResult> subarc;
  std::string subarc_error;
};

struct RootWeights {
  int root = -1;
  std::string note;  // why weights were skipped, if they were
  std::optional<Weights> weights;
  std::optional<ConservationReport> conservation;
};

struct Bucket {
  int M = 0;
  int residue = 0;
  int J = 0;
  CoreForest forest;
  std::vector<NodeInfo> info;
  std::map<int, CoreType> types;
  std::optional<CoreLemmaReport> lemma;
  std::optional<CaseReport> cases;
  std::vector<RootWeights> roots;
  std::optional<BoundsReport> bounds;
  std::string bounds_note;
};

struct PipelineResult {
  ExperimentConfig cfg;
  std::optional<Curve> curve;
  std::vector<Point> samples;
  std::optional<MultiresFamily> family;
  std::vector<BallRow> balls;
  double diam_e = 0.0;
  double jones_sum = 0.0;
  int n_b = 0;
  int n_b0 = 0;
  std::vector<Bucket> buckets;
  Stage reached = Stage::Nets;
};

Curve load_curve(const ExperimentConfig& cfg);

/// Fills measures, fragments H_Q, subarcs G_Q and child core types of a
/// forest; node information is appended to `info`, types to `types`.
void analyze_forest(const Curve& curve, CoreForest& forest, int J, double lambda, double eps2,
                    std::vector<NodeInfo>& info, std::map<int, CoreType>& types);

/// s_Q for every node from the cached measures and fragments.
void fill_s(CoreForest& forest);

/// Sample -> nets -> family -> beta map -> B balls -> buckets -> core trees
/// -> fragments and subarcs -> core types -> weights and reports.
PipelineResult run_pipeline(const ExperimentConfig& cfg, Stage upto = Stage::Weights);

std::string beta_map_csv(const PipelineResult& r);
std::string classification_csv(const PipelineResult& r);
json cores_json(const PipelineResult& r);
json weights_json(const PipelineResult& r);
json summary_json(const PipelineResult& r);

/// Writes every file the reached stage supports into dir.
void write_outputs(const PipelineResult& r, const std::string& dir);

struct RatioRow {
  int depth = 0;
  double length = 0.0;
  double jones_sum = 0.0;
  double ratio = 0.0;
};

/// S_{E,p}(G) / H^1(Gamma) over generator depths, E = curve samples.
std::vector<RatioRow> tsp_ratio_table(const ExperimentConfig& cfg, const std::vector<int>& depths);

}  // namespace jones::lab
