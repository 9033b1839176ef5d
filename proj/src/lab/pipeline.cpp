#include "jones/lab/pipeline.hpp"

#include <sstream>

namespace jones::lab {

Curve load_curve(const ExperimentConfig& cfg) {
  if (!cfg.curve_path.empty()) return curve_from_json(read_json_file(cfg.curve_path));
  Params params = cfg.params;
  // Random generators draw from the config seed unless given their own.
  if (cfg.generator == "random_walk" && !params.count("seed")) params["seed"] = static_cast<double>(cfg.seed);
  return generate(cfg.generator, params, cfg.space);
}

void analyze_forest(const Curve& curve, CoreForest& forest, int J, double lambda, double eps2,
                    std::vector<NodeInfo>& info, std::map<int, CoreType>& types) {
  info.assign(forest.nodes.size(), NodeInfo{});
  for (size_t i = 0; i < forest.nodes.size(); ++i) {
    auto& node = forest.nodes[i];
    auto rem = remainder(forest, static_cast<int>(i), curve);
    node.ell_u = rem.ell_u;
    node.ell_r = rem.ell_r;
    try {
      node.fragment = maximal_fragment(curve, node.ball, node.region(), node.q_star, lambda, eps2, J);
      node.diam_h = node.fragment->diam;
      try {
        info[i].subarc = efficient_subarc(curve, *node.fragment, node.q_star);
      } catch (const FlatnessError& e) {
        info[i].subarc_error = e.what();
      }
    } catch (const FragmentError& e) {
      info[i].fragment_error = e.what();
    }
  }
  for (size_t i = 0; i < forest.nodes.size(); ++i) {
    if (!info[i].subarc) continue;
    for (int ch : forest.nodes[i].children) {
      const auto& child = forest.nodes[ch];
      types[ch] = classify_core(curve, info[i].subarc->arc, info[i].subarc->proj, child.ball, child.region(),
                                child.q_star, lambda, eps2);
    }
  }
  fill_s(forest);
}

void fill_s(CoreForest& forest) {
  for (auto& n : forest.nodes) {
    n.s_q = 101.0 * n.ell_r;
    for (int ch : n.children) n.s_q += forest.nodes[ch].diam_h;
  }
}

namespace {

int bucket_m(double beta_star) { return static_cast<int>(std::floor(-std::log2(beta_star))) + 1; }

int residue(int k, int J) { return ((k % J) + J) % J; }

void build_cores(PipelineResult& r) {
  const auto& cfg = r.cfg;
  const auto& curve = *r.curve;
  std::map<std::pair<int, int>, std::vector<BallId>> groups;
  for (auto& row : r.balls) {
    if (!row.selected) continue;
    groups[{row.M, residue(row.id.level, row.stride)}].push_back(row.id);
  }
  for (auto& [key, ids] : groups) {
    Bucket b;
    b.M = key.first;
    b.residue = key.second;
    b.J = cfg.stride(b.M);
    b.forest = build_core_tree(*r.family, ids, b.J, cfg.c);
    b.lemma = verify_core_lemma(b.forest.nodes, curve.space());
    analyze_forest(curve, b.forest, b.J, cfg.lambda, cfg.resolved_eps2(), b.info, b.types);
    r.buckets.push_back(std::move(b));
  }
}

void build_weight_reports(PipelineResult& r) {
  const auto& space = r.curve->space();
  for (auto& b : r.buckets) {
    fill_s(b.forest);
    b.cases = q_hypothesis_scan(b.forest, space, b.types, r.cfg.q);
    bool degenerate = false;
    for (int root : b.forest.roots) {
      RootWeights rw;
      rw.root = root;
      try {
        WeightTree t = weight_tree(b.forest, root);
        for (const auto& n : t.nodes)
          if (!(n.s_q > 0.0) && !n.children.empty()) throw PreconditionError("node " + n.id + " has s_Q = 0");
        rw.weights = build_weights(t);
        rw.conservation = verify_conservation(t, *rw.weights);
      } catch (const PreconditionError& e) {
        rw.note = e.what();
        degenerate = true;
      }
      b.roots.push_back(std::move(rw));
    }
    if (degenerate) {
      b.bounds_note = "skipped: degenerate weight tree";
      continue;
    }
    try {
      b.bounds = verify_bounds(b.forest, space, r.samples, r.cfg.q);
    } catch (const PreconditionError& e) {
      b.bounds_note = e.what();
    }
  }
}

}  // namespace

PipelineResult run_pipeline(const ExperimentConfig& cfg, Stage upto) {
  cfg.validate();
  PipelineResult r;
  r.cfg = cfg;
  r.curve = load_curve(cfg);
  const Curve& curve = *r.curve;
  const auto& space = curve.space();
  double spacing = cfg.spacing > 0.0 ? cfg.spacing : default_spacing(curve);
  r.samples = sample_curve(curve, spacing);
  r.diam_e = set_diameter(space, r.samples);
  int kmin = cfg.k_min.value_or(default_k_min(r.diam_e));
  int kmax = cfg.k_max.value_or(std::max(kmin, default_k_max(spacing)));
  r.family.emplace(build_nets(r.samples, kmin, kmax, space), cfg.inflation);
  for (const auto& q : r.family->balls()) r.balls.push_back(BallRow{q.id, {}, {}, 0, 0, false});
  r.reached = Stage::Nets;
  if (upto == Stage::Nets) return r;

  double sum = 0.0;
  for (size_t i = 0; i < r.balls.size(); ++i) {
    const Ball& q = r.family->balls()[i];
    r.balls[i].beta = beta_number(space, r.samples, q);
    if (cfg.p == 1.0 && q.diam() > r.diam_e) continue;
    if (r.balls[i].beta.beta > 0.0) sum += std::pow(r.balls[i].beta.beta, cfg.p) * q.diam();
  }
  r.jones_sum = r.diam_e + sum;
  r.reached = Stage::Betas;
  if (upto == Stage::Betas) return r;

  for (size_t i = 0; i < r.balls.size(); ++i) {
    const Ball& q = r.family->balls()[i];
    auto& row = r.balls[i];
    row.b = is_B_ball(curve, q, cfg.lambda, cfg.resolved_eps1(), cfg.resolved_eps2());
    if (!row.b->is_B) continue;
    ++r.n_b;
    if (row.b->b0_excluded) {
      ++r.n_b0;
      continue;
    }
    if (!(row.b->cls.beta_star > 0.0)) continue;
    row.M = bucket_m(row.b->cls.beta_star);
    row.stride = cfg.stride(row.M);
    row.selected = true;
  }
  r.reached = Stage::Classify;
  if (upto == Stage::Classify) return r;

  build_cores(r);
  r.reached = Stage::Cores;
  if (upto == Stage::Cores) return r;

  build_weight_reports(r);
  r.reached = Stage::Weights;
  return r;
}

std::string beta_map_csv(const PipelineResult& r) {
  std::ostringstream os;
  int d = r.curve->space().dim;
  const char* names = "xyzwuvst";
  os << "ball_id,level,beta";
  for (int i = 0; i < d; ++i) os << ",line_base_" << names[i];
  for (int i = 0; i < d; ++i) os << ",line_dir_" << names[i];
  os << '\n';
  for (const auto& row : r.balls) {
    os << row.id.str() << ',' << row.id.level << ',' << fmt(row.beta.beta);
    for (int i = 0; i < d; ++i) os << ',' << (row.beta.best_line ? fmt(row.beta.best_line->base[i]) : "");
    for (int i = 0; i < d; ++i) os << ',' << (row.beta.best_line ? fmt(row.beta.best_line->dir[i]) : "");
    os << '\n';
  }
  return os.str();
}

std::string classification_csv(const PipelineResult& r) {
  std::ostringstream os;
  os << "ball_id,lambda,n_arcs,n_flat,n_star,n_dominant,beta_gamma,beta_lambda,beta_star,is_B,b0_excluded\n";
  for (const auto& row : r.balls) {
    if (!row.b) continue;
    const auto& c = row.b->cls;
    os << row.id.str() << ',' << fmt(c.lambda) << ',' << c.arcs.size() << ',' << c.n_flat() << ',' << c.n_star() << ','
       << c.n_dominant() << ',' << fmt(c.beta_gamma) << ',' << fmt(c.beta_lambda) << ',' << fmt(c.beta_star) << ','
       << (row.b->is_B ? "true" : "false") << ',' << (row.b->b0_excluded ? "true" : "false") << '\n';
  }
  return os.str();
}

json cores_json(const PipelineResult& r) {
  json out = json::array();
  for (const auto& b : r.buckets) {
    json bj;
    bj["M"] = b.M;
    bj["residue"] = b.residue;
    bj["J"] = b.J;
    if (b.lemma) {
      bj["lemma"] = {{"shape", b.lemma->shape_ok},
                     {"separation", b.lemma->separation_ok},
                     {"tree", b.lemma->tree_ok},
                     {"fine_shape_checked", b.lemma->fine_shape_checked},
                     {"fine_shape", b.lemma->fine_shape_ok}};
    }
    json cores = json::array();
    for (size_t i = 0; i < b.forest.nodes.size(); ++i) {
      const auto& n = b.forest.nodes[i];
      json cj;
      cj["ball_id"] = n.ball.id.str();
      cj["q_star"] = {{"c", point_to_json(n.q_star.center)}, {"r", n.q_star.radius}};
      json members = json::array();
      for (const auto& m : n.members) members.push_back({{"c", point_to_json(m.center)}, {"r", m.radius}, {"level", m.level}});
      cj["members"] = members;
      json children = json::array();
      for (int ch : n.children) children.push_back(b.forest.nodes[ch].ball.id.str());
      cj["children"] = children;
      cj["parent"] = n.parent >= 0 ? json(b.forest.nodes[n.parent].ball.id.str()) : json(nullptr);
      cj["ell_U"] = n.ell_u;
      cj["ell_R"] = n.ell_r;
      cj["diam_H"] = n.diam_h;
      if (n.fragment) {
        cj["fragment"] = {{"diam", n.fragment->diam},
                          {"source", {n.fragment->source_arc.a(), n.fragment->source_arc.b()}},
                          {"lower_ok", n.fragment->lower_ok},
                          {"upper_ok", n.fragment->upper_ok},
                          {"u_ok", n.fragment->u_ok}};
      } else {
        cj["fragment_error"] = b.info[i].fragment_error;
      }
      if (b.info[i].subarc) {
        const auto& s = *b.info[i].subarc;
        cj["subarc"] = {{"a", s.arc.a()},
                        {"b", s.arc.b()},
                        {"efficiency", s.efficiency},
                        {"central_flat", s.central_flat},
                        {"in_q_star", s.in_q_star},
                        {"meets_quarter", s.meets_quarter}};
      } else if (!b.info[i].subarc_error.empty()) {
        cj["subarc_error"] = b.info[i].subarc_error;
      }
      auto t = b.types.find(static_cast<int>(i));
      if (t != b.types.end()) cj["type"] = to_string(t->second);
      cores.push_back(cj);
    }
    bj["cores"] = cores;
    out.push_back(bj);
  }
  return out;
}

json weights_json(const PipelineResult& r) {
  json out = json::array();
  for (const auto& b : r.buckets) {
    if (!b.cases) continue;
    for (const auto& rw : b.roots) {
      json j;
      j["root"] = b.forest.nodes[rw.root].ball.id.str();
      std::vector<int> stack{rw.root};
      double mx = 0.0;
      json nodes = json::array();
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        const auto& e = b.cases->nodes[i];
        mx = std::max(mx, e.ratio);
        nodes.push_back({{"id", e.id}, {"ratio", e.ratio}, {"case", e.tag}, {"pass", e.pass}});
        const auto& ch = b.forest.nodes[i].children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
      }
      j["max_ratio"] = mx;
      j["nodes"] = nodes;
      if (rw.conservation) j["conservation"] = {{"ok", rw.conservation->ok}, {"worst", rw.conservation->worst}};
      if (!rw.note.empty()) j["note"] = rw.note;
      out.push_back(j);
    }
  }
  return out;
}

json summary_json(const PipelineResult& r) {
  json j;
  j["config"] = config_to_json(r.cfg);
  const auto& c = *r.curve;
  j["curve"] = {{"vertices", c.vertices().size()}, {"length", c.length()}, {"injective", c.injective()}};
  j["samples"] = r.samples.size();
  j["diam_E"] = r.diam_e;
  const auto& h = r.family->hierarchy();
  j["k_min"] = h.k_min();
  j["k_max"] = h.k_max();
  j["resolution"] = std::ldexp(1.0, -h.k_max());
  j["balls"] = r.family->balls().size();
  if (r.reached >= Stage::Betas) {
    double mx = 0.0;
    for (const auto& row : r.balls) mx = std::max(mx, row.beta.beta);
    j["max_beta"] = mx;
    j["jones_sum"] = r.jones_sum;
    j["jones_ratio"] = r.jones_sum / c.length();
  }
  if (r.reached >= Stage::Classify) {
    j["B_balls"] = r.n_b;
    j["B0_excluded"] = r.n_b0;
  }
  if (r.reached >= Stage::Cores) {
    size_t nodes = 0, frag_fail = 0, sub_fail = 0;
    bool lemma = true;
    for (const auto& b : r.buckets) {
      nodes += b.forest.nodes.size();
      for (const auto& in : b.info) {
        if (!in.fragment_error.empty()) ++frag_fail;
        if (!in.subarc_error.empty()) ++sub_fail;
      }
      if (b.lemma && !b.lemma->ok()) lemma = false;
    }
    j["buckets"] = r.buckets.size();
    j["core_nodes"] = nodes;
    j["fragment_failures"] = frag_fail;
    j["subarc_failures"] = sub_fail;
    j["core_lemma_ok"] = lemma;
  }
  if (r.reached >= Stage::Weights) {
    bool cons = true, bounds = true, cases = true;
    double mx = 0.0;
    for (const auto& b : r.buckets) {
      for (const auto& rw : b.roots)
        if (rw.conservation && !rw.conservation->ok) cons = false;
      if (b.bounds && !b.bounds->ok()) bounds = false;
      if (b.cases) {
        cases = cases && b.cases->all_pass;
        mx = std::max(mx, b.cases->max_ratio);
      }
    }
    j["conservation_ok"] = cons;
    j["bounds_ok"] = bounds;
    j["cases_ok"] = cases;
    j["max_ratio"] = mx;
  }
  return j;
}

void write_outputs(const PipelineResult& r, const std::string& dir) {
  auto path = [&](const std::string& f) { return dir + "/" + f; };
  write_text_file(path("nets.json"), nets_to_json(*r.family).dump(1) + "\n");
  write_text_file(path("balls.csv"), balls_csv(*r.family));
  write_text_file(path("curve.json"), curve_to_json(*r.curve).dump(1) + "\n");
  if (r.reached >= Stage::Betas) write_text_file(path("beta_map.csv"), beta_map_csv(r));
  if (r.reached >= Stage::Classify) write_text_file(path("classification.csv"), classification_csv(r));
  if (r.reached >= Stage::Cores) write_text_file(path("cores.json"), cores_json(r).dump(1) + "\n");
  if (r.reached >= Stage::Weights) write_text_file(path("weights.json"), weights_json(r).dump(1) + "\n");
  write_text_file(path("summary.json"), summary_json(r).dump(1) + "\n");
}

std::vector<RatioRow> tsp_ratio_table(const ExperimentConfig& cfg, const std::vector<int>& depths) {
  std::vector<RatioRow> out;
  for (int d : depths) {
    ExperimentConfig c = cfg;
    c.params["depth"] = d;
    c.k_min.reset();
    c.k_max.reset();
    PipelineResult r = run_pipeline(c, Stage::Betas);
    out.push_back({d, r.curve->length(), r.jones_sum, r.jones_sum / r.curve->length()});
  }
  return out;
}

}  // namespace jones::lab
