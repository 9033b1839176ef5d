#include <CLI11.hpp>
#include <cmath>
#include <iostream>

#include "jones/lab/io.hpp"
#include "jones/lab/pipeline.hpp"
#include "jones/lab/svg.hpp"
#include "jones/lab/verify.hpp"

using namespace jones;
using namespace jones::lab;

namespace {

struct Overrides {
  std::string config;
  std::string generator;
  std::vector<std::string> params;
  std::string curve;
  std::optional<double> p, inflation, lambda, c, q, spacing, space_p;
  std::optional<int> J, dim, k_min, k_max;
  std::optional<std::string> profile, out;
  std::optional<uint64_t> seed;
  bool unsafe_lambda = false;
};

void add_common(CLI::App* app, Overrides& o) {
  app->add_option("--config", o.config, "JSON experiment config");
  app->add_option("--generator", o.generator, "curve generator");
  app->add_option("--param", o.params, "generator parameter key=value");
  app->add_option("--curve", o.curve, "polyline JSON file");
  app->add_option("--p", o.p, "Jones sum exponent");
  app->add_option("--norm", o.space_p, "exponent of the ambient l_p norm (inf allowed)");
  app->add_option("--dim", o.dim, "ambient dimension");
  app->add_option("--inflation", o.inflation, "inflation A");
  app->add_option("--lambda", o.lambda, "lambda (1 or 5)");
  app->add_option("--profile", o.profile, "paper|lab");
  app->add_option("--J", o.J, "core level stride");
  app->add_option("--c", o.c, "core radius constant");
  app->add_option("--q", o.q, "Q-hypothesis parameter");
  app->add_option("--spacing", o.spacing, "sampling spacing");
  app->add_option("--k-min", o.k_min, "coarsest net level");
  app->add_option("--k-max", o.k_max, "finest net level");
  app->add_option("--seed", o.seed, "seed");
  app->add_option("--out", o.out, "output directory");
  app->add_flag("--unsafe-lambda", o.unsafe_lambda, "allow lambda outside {1,5}");
}

ExperimentConfig resolve(const Overrides& o) {
  ExperimentConfig cfg = o.config.empty() ? ExperimentConfig{} : load_config(o.config);
  if (!o.generator.empty()) {
    cfg.generator = o.generator;
    cfg.curve_path.clear();
  }
  for (const auto& kv : o.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw InputError("--param expects key=value, got '" + kv + "'");
    try {
      cfg.params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("bad numeric value in '" + kv + "'");
    }
  }
  if (!o.curve.empty()) cfg.curve_path = o.curve;
  if (o.space_p || o.dim)
    cfg.space = NormedSpace::lp(o.dim.value_or(cfg.space.dim), o.space_p.value_or(cfg.space.p));
  if (o.p) cfg.p = *o.p;
  if (o.inflation) cfg.inflation = *o.inflation;
  if (o.lambda) cfg.lambda = *o.lambda;
  if (o.profile) cfg.profile = *o.profile;
  if (o.J) cfg.J = *o.J;
  if (o.c) cfg.c = *o.c;
  if (o.q) cfg.q = *o.q;
  if (o.spacing) cfg.spacing = *o.spacing;
  if (o.k_min) cfg.k_min = *o.k_min;
  if (o.k_max) cfg.k_max = *o.k_max;
  if (o.seed) cfg.seed = *o.seed;
  if (o.out) cfg.out = *o.out;
  if (o.unsafe_lambda) cfg.unsafe_lambda = true;
  cfg.validate();
  return cfg;
}

int run_stage(const Overrides& o, Stage stage) {
  ExperimentConfig cfg = resolve(o);
  PipelineResult r = run_pipeline(cfg, stage);
  write_outputs(r, cfg.out);
  json s = summary_json(r);
  std::cout << s.dump(1) << '\n';
  bool ok = s.value("core_lemma_ok", true) && s.value("conservation_ok", true) && s.value("bounds_ok", true);
  return ok ? 0 : 1;
}

int run_plot(const Overrides& o) {
  ExperimentConfig cfg = resolve(o);
  PipelineResult r = run_pipeline(cfg, Stage::Betas);
  write_outputs(r, cfg.out);
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : r.balls)
    if (row.beta.beta > 0.0) pts.emplace_back(-row.id.level, row.beta.beta);
  write_text_file(cfg.out + "/beta_scale.svg",
                  svg_scatter(pts, "beta vs scale", "-k (log2 radius)", "beta", true));
  std::cout << "wrote " << cfg.out << "/beta_scale.svg (" << pts.size() << " points)\n";
  return 0;
}

int run_ratio_table(const Overrides& o, const std::vector<int>& depths) {
  ExperimentConfig cfg = resolve(o);
  if (o.generator.empty() && o.config.empty()) cfg.generator = "koch";
  auto rows = tsp_ratio_table(cfg, depths);
  std::string csv = "depth,length,jones_sum,ratio\n";
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : rows) {
    csv += std::to_string(row.depth) + ',' + fmt(row.length) + ',' + fmt(row.jones_sum) + ',' + fmt(row.ratio) + '\n';
    pts.emplace_back(row.depth, row.ratio);
  }
  write_text_file(cfg.out + "/ratio_table.csv", csv);
  write_text_file(cfg.out + "/ratio_table.svg", svg_line(pts, "S / length vs depth", "depth", "ratio"));
  std::cout << csv;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiresolution beta numbers, cores and weights on polylines"};
  app.require_subcommand(1);
  Overrides o;
  const std::pair<const char*, Stage> stages[] = {{"net", Stage::Nets},         {"beta-map", Stage::Betas},
                                                  {"jones-sum", Stage::Betas},  {"classify", Stage::Classify},
                                                  {"cores", Stage::Cores},      {"weights", Stage::Weights}};
  std::vector<std::pair<CLI::App*, Stage>> stage_cmds;
  for (const auto& [name, st] : stages) {
    auto* sub = app.add_subcommand(name, std::string("run the pipeline through ") + name);
    add_common(sub, o);
    stage_cmds.emplace_back(sub, st);
  }
  auto* plot = app.add_subcommand("plot", "beta vs scale SVG");
  add_common(plot, o);
  auto* ratio = app.add_subcommand("ratio-table", "S / length over generator depths");
  add_common(ratio, o);
  std::vector<int> depths{1, 2, 3, 4};
  ratio->add_option("--depths", depths, "depths")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "run property suites");
  VerifyOptions vo;
  verify->add_option("--seed", vo.seed, "seed");
  verify->add_option("--suite", vo.suite, "single suite");
  verify->add_option("--inject-fault", vo.fault, "patched bound (lipschitz)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    for (const auto& [sub, st] : stage_cmds)
      if (sub->parsed()) return run_stage(o, st);
    if (plot->parsed()) return run_plot(o);
    if (ratio->parsed()) return run_ratio_table(o, depths);
    if (verify->parsed()) {
      auto results = verify_all(vo);
      std::cout << format_results(results);
      for (const auto& r : results)
        if (!r.pass) return 1;
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
