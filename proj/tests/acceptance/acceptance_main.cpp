// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "jones/banach.hpp"
#include "jones/beta.hpp"
#include "jones/core.hpp"
#include "jones/curve.hpp"
#include "jones/lab/fixtures.hpp"
#include "jones/lab/generators.hpp"
#include "jones/lab/pipeline.hpp"
#include "jones/martingale.hpp"
#include "jones/net.hpp"
#include "oracles.hpp"

using namespace jones;
using namespace jones::lab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

NormedSpace plane(double p) { return std::isinf(p) ? NormedSpace::linf(2) : NormedSpace::lp(2, p); }

// 1. beta against the angle-grid oracle.
Outcome beta_oracle() {
  Rng rng(101);
  int bad = 0, total = 0;
  double worst = 0.0;
  for (double p : {1.0, 1.5, 2.0, 3.0, double(INFINITY)}) {
    NormedSpace s = plane(p);
    oracle::BetaGrid grid(s);
    for (int i = 0; i < 200; ++i) {
      int n = 3 + static_cast<int>(uniform(rng, 0, 18));
      std::vector<Point> E;
      if (i % 3 == 0) {
        E = random_cloud(rng, s, n, 1.0);
      } else {
        // thin sets near a random line
        double noise = std::pow(10.0, -uniform(rng, 1.0, 5.0));
        Point b = random_cloud(rng, s, 1, 0.2)[0], u = random_unit(rng, s);
        for (int j = 0; j < n; ++j) E.push_back(b + uniform(rng, -1.0, 1.0) * u + random_cloud(rng, s, 1, noise)[0]);
      }
      RBall w{random_cloud(rng, s, 1, 0.3)[0], uniform(rng, 0.6, 1.6)};
      double got = beta_number(s, E, w).beta;
      double want = oracle::beta_ball(grid, s, E, w.center, w.radius);
      double err = std::abs(got - want);
      worst = std::max(worst, err);
      if (err > 1e-6) ++bad;
      ++total;
    }
  }
  return {bad == 0, std::to_string(total) + " instances, " + std::to_string(bad) + " off, max |diff| " + num(worst)};
}

// 2. beta(E, R) <= (diam Q / diam R) beta(F, Q) on nested windows.
Outcome beta_monotone() {
  Rng rng(202);
  const double ps[] = {1.0, 1.5, 2.0, 3.0, INFINITY};
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    NormedSpace s = plane(ps[i % 5]);
    auto F = random_cloud(rng, s, 4 + i % 30, 1.0);
    std::vector<Point> E;
    for (const auto& x : F)
      if (uniform(rng, 0, 1) < 0.7) E.push_back(x);
    RBall Q{random_cloud(rng, s, 1, 0.3)[0], uniform(rng, 0.5, 1.5)};
    double rr = Q.radius * uniform(rng, 0.1, 1.0);
    Point off = random_unit(rng, s) * ((Q.radius - rr) * uniform(rng, 0.0, 1.0));
    RBall R{Q.center + off, rr};
    if (!beta_monotone_check(s, E, F, R, Q)) ++bad;
  }
  return {bad == 0, "1000 instances, " + std::to_string(bad) + " violations"};
}

// 3. J-projection properties and the l_1 plane family.
Outcome jproj_suite() {
  Rng rng(303);
  const double ps[] = {1.5, 2.0, 3.0, 7.0};
  const double tol = 1e-9;
  int lip = 0, idem = 0, sand = 0, dual = 0, closed = 0;
  for (int i = 0; i < 10000; ++i) {
    NormedSpace s = NormedSpace::lp(2 + i % 2, ps[(i / 2) % 4]);
    Line L = make_line(s, random_cloud(rng, s, 1, 1.0)[0], random_unit(rng, s));
    JProjection P = j_projection(s, L);
    auto xs = random_cloud(rng, s, 3, 2.0);
    Point px = project(P, xs[0]), py = project(P, xs[1]);
    if (s.distance(px, py) > s.distance(xs[0], xs[1]) + tol) ++lip;
    if (s.distance(project(P, px), px) > tol) ++idem;
    double d = dist_to_line(s, xs[0], L), e = s.distance(xs[0], px);
    if (d > e + tol || e > 2.0 * d + tol) ++sand;
    Point g = duality_map(s, xs[2]);
    double n = s.norm(xs[2]);
    if (std::abs(s.dual_norm(g) - n) > tol || std::abs(dot(g, xs[2]) - n * n) > tol) ++dual;
  }
  NormedSpace l1 = NormedSpace::l1(2);
  const Point axes[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int i = 0; i < 10000; ++i) {
    const Point& u = axes[i % 4];
    Point b = random_cloud(rng, l1, 1, 1.0)[0];
    double sp = uniform(rng, -0.5, 0.5);
    JProjection P = j_projection(l1, Line{b, u}, sp);
    auto xs = random_cloud(rng, l1, 2, 2.0);
    Point perp{-u[1], u[0]};
    for (const auto& z : xs) {
      double x = dot(z - b, u), y = dot(z - b, perp);
      Point want = b + (x - sp / (1.0 - std::abs(sp)) * y) * u;
      if (l1.distance(project(P, z), want) > tol) ++closed;
    }
    Point px = project(P, xs[0]), py = project(P, xs[1]);
    if (l1.distance(px, py) > l1.distance(xs[0], xs[1]) + tol) ++lip;
    if (l1.distance(project(P, px), px) > tol) ++idem;
  }
  int bad = lip + idem + sand + dual + closed;
  std::ostringstream os;
  os << "lipschitz " << lip << ", idempotence " << idem << ", sandwich " << sand << ", duality " << dual
     << ", l1 closed form " << closed;
  return {bad == 0, os.str()};
}

// 4. Net invariants and the counting bound at every critical radius.
Outcome nets_counting() {
  Rng rng(404);
  int bad_net = 0;
  std::string first;
  const double ps[] = {1.0, 1.5, 2.0, 3.0, INFINITY};
  for (int i = 0; i < 50; ++i) {
    double p = ps[i % 5];
    NormedSpace s = std::isinf(p) ? NormedSpace::linf(2 + i % 2) : NormedSpace::lp(2 + i % 2, p);
    auto pts = random_cloud(rng, s, 40 + 7 * i, uniform(rng, 0.2, 2.0));
    auto h = build_nets(pts, -1, 9, s);
    auto chk = verify_nets(h, pts);
    if (!chk.ok()) {
      ++bad_net;
      if (first.empty()) first = chk.detail;
    }
  }
  int bad_count = 0;
  long checks = 0;
  const double sp[] = {1.5, 2.0, 3.0, 7.0};
  for (int i = 0; i < 100; ++i) {
    NormedSpace s = NormedSpace::lp(2 + (i % 3 == 2), sp[i % 4]);
    NearLine nl = near_collinear(rng, s, 25, uniform(rng, 0.0, 0.16));
    std::vector<Point> probes = nl.V;
    for (size_t j = 0; j + 1 < nl.V.size(); ++j) probes.push_back(lerp(nl.V[j], nl.V[j + 1], uniform(rng, 0, 1)));
    for (const auto& x : probes)
      for (const auto& v : nl.V) {
        double rad = s.distance(x, v);
        ++checks;
        if (count_in_ball(s, nl.V, x, rad) > 1 + 3 * (rad / nl.delta)) ++bad_count;
      }
  }
  std::string d = "50 hierarchies, " + std::to_string(bad_net) + " invalid; " + std::to_string(checks) +
                  " critical radii, " + std::to_string(bad_count) + " over 1+3r";
  if (!first.empty()) d += " (" + first + ")";
  return {bad_net == 0 && bad_count == 0, d};
}

// Coarse cloud plus clusters refined down to about 2^{-22}.
std::vector<Point> multiscale_samples(Rng& rng, const NormedSpace& s) {
  auto pts = random_cloud(rng, s, 12, 1.0);
  int clusters = 2 + static_cast<int>(uniform(rng, 0, 2));
  for (int c = 0; c < clusters; ++c) {
    Point ctr = pts[static_cast<size_t>(uniform(rng, 0, 12 - 1e-9))];
    for (int e : {6, 12, 18}) {
      double scale = std::ldexp(1.0, -e);
      for (int j = 0; j < 8; ++j) pts.push_back(ctr + random_cloud(rng, s, 1, scale)[0]);
    }
  }
  return pts;
}

// 5. Core lemma per residue class.
Outcome core_lemma() {
  Rng rng(505);
  const std::pair<int, double> params[] = {{4, 0.2}, {6, std::ldexp(1.0, -12)}, {19, std::ldexp(1.0, -12)}};
  int bad = 0, groups = 0, fine = 0;
  long cores_total = 0;
  std::string first;
  for (int i = 0; i < 50; ++i) {
    NormedSpace s = i % 5 == 4 ? NormedSpace::lp(2, 3.0) : NormedSpace::l2();
    auto h = build_nets(multiscale_samples(rng, s), 0, 22, s);
    for (auto [J, c] : params)
      for (int r = 0; r < J; ++r) {
        std::vector<CoreNode> cores;
        for (const auto& id : balls_at_residue(h, J, r, Point(2), -1.0))
          cores.push_back(build_core(make_ball(h.level(id.level)[id.index], id.level, 4.0, id.index), h, J, c));
        if (cores.empty()) continue;
        ++groups;
        cores_total += static_cast<long>(cores.size());
        auto rep = verify_core_lemma(cores, s);
        if (rep.fine_shape_checked) ++fine;
        if (!rep.ok()) {
          ++bad;
          if (first.empty()) first = rep.violations.front();
        }
      }
  }
  std::string d = std::to_string(groups) + " residue groups, " + std::to_string(cores_total) + " cores, " +
                  std::to_string(fine) + " with the J >= 19 shape bound, " + std::to_string(bad) + " failing";
  if (!first.empty()) d += " (" + first + ")";
  return {bad == 0, d};
}

// 6. Ball chains.
Outcome ball_chains() {
  Rng rng(606);
  NormedSpace s = NormedSpace::l2();
  int bad = 0, missed = 0;
  const double xis[] = {8.0, 16.0, 64.0};
  for (int i = 0; i < 100; ++i) {
    double xi = xis[i % 3];
    auto rep = verify_ball_chain(s, random_chain(rng, s, xi, 1.0, 10 + i % 30, 2 + i % 4), xi, 1.0);
    if (!rep.hypotheses_ok() || !rep.unique_min || !rep.containment_ok) ++bad;
  }
  const char* kinds[] = {"chain", "decay", "separation"};
  for (int i = 0; i < 20; ++i) {
    double xi = xis[i % 3];
    std::string kind = kinds[i % 3];
    auto rep = verify_ball_chain(s, broken_chain(rng, s, xi, 1.0, kind), xi, 1.0);
    if (rep.hypotheses_ok() || rep.violated != kind) ++missed;
  }
  return {bad == 0 && missed == 0, "100 chains, " + std::to_string(bad) + " failing containment; 20 broken, " +
                                       std::to_string(missed) + " not rejected as built"};
}

struct ForestFixture {
  std::string name;
  Curve curve;
  CoreForest forest;
  std::map<int, CoreType> types;
};

ForestFixture forest_fixture(const std::string& name, Curve c, int J, double cc, int k_max, int residue,
                             const Point& near, double reach, int max_level) {
  auto h = curve_nets(c, 0, k_max);
  MultiresFamily fam(h, 4.0);
  std::vector<BallId> ids;
  for (const auto& id : balls_at_residue(h, J, residue, near, reach))
    if (id.level <= max_level) ids.push_back(id);
  ForestFixture f{name, c, build_core_tree(fam, ids, J, cc), {}};
  std::vector<NodeInfo> info;
  analyze_forest(f.curve, f.forest, J, 1.0, 0.05, info, f.types);
  return f;
}

std::vector<ForestFixture> martingale_fixtures() {
  NormedSpace s = NormedSpace::l2();
  std::vector<ForestFixture> out;
  auto add = [&](const std::string& n, const Curve& c, int residue, Point near, double reach) {
    out.push_back(forest_fixture(n, c, 4, 0.2, 11, residue, near, reach, 9));
  };
  add("segment r1", segment(s), 1, {0.5, 0.0}, 0.3);
  add("segment r2", segment(s), 2, {0.3, 0.0}, 0.25);
  add("segment r3", segment(s), 3, {0.7, 0.0}, 0.2);
  add("zigzag", zigzag(s, 4, 0.25), 1, {0.5, 0.0}, 0.3);
  add("zigzag flat", zigzag(s, 2, 0.05), 2, {0.5, 0.05}, 0.3);
  add("plus sign", plus_sign(s), 1, {0.0, 0.0}, 0.6);
  add("plus sign arm", plus_sign(s), 2, {0.5, 0.0}, 0.3);
  add("t junction", t_junction(s, 0.01), 1, {0.0, 0.0}, 0.5);
  add("radial spoke", radial_spoke(s), 1, {0.5, 0.0}, 0.4);
  add("koch 2", koch(s, 2), 1, {0.5, 0.1}, 0.4);
  add("koch 3", koch(s, 3), 2, {0.3, 0.0}, 0.3);
  add("circle", circle(s, 64), 1, {1.0, 0.0}, 0.5);
  add("spiral", spiral(s, 1.5, 96), 1, {0.0, 0.0}, 0.6);
  for (uint64_t seed : {3u, 5u, 8u, 13u, 21u, 34u, 55u}) {
    Curve c = random_walk(s, 8, seed);
    add("random walk " + std::to_string(seed), c, static_cast<int>(seed % 4), c.at(0.5), 0.5);
  }
  return out;
}

// Density along a root path straight from the node data.
double closed_form_density(const CoreForest& f, int node) {
  std::vector<int> path;
  for (int i = node; i >= 0; i = f.nodes[i].parent) path.push_back(i);
  double v = f.nodes[path.back()].diam_h;
  for (size_t k = path.size() - 1; k > 0; --k) {
    const auto& par = f.nodes[path[k]];
    double s = 101.0 * par.ell_r;
    for (int ch : par.children) s += f.nodes[ch].diam_h;
    v = v * f.nodes[path[k - 1]].diam_h / s;
  }
  return v / f.nodes[node].ell_u;
}

// 7. Martingale on forests built from curves.
Outcome martingale() {
  auto fixtures = martingale_fixtures();
  int bad_cons = 0, bad_y = 0, bad_mass = 0, bad_stack = 0, bad_prod = 0, trees = 0, nodes = 0, skipped = 0;
  double worst_cons = 0.0, max_y = 0.0, max_stack = 0.0;
  std::string notes;
  for (auto& fx : fixtures) {
    bool degenerate = false;
    std::map<std::string, int> forest_index;
    for (size_t i = 0; i < fx.forest.nodes.size(); ++i) forest_index[fx.forest.nodes[i].ball.id.str()] = static_cast<int>(i);
    for (int root : fx.forest.roots) {
      WeightTree t = weight_tree(fx.forest, root);
      bool ok_tree = true;
      for (const auto& n : t.nodes)
        if (!(n.s_q > 0.0) && !n.children.empty()) ok_tree = false;
      if (!ok_tree) {
        degenerate = true;
        ++skipped;
        continue;
      }
      ++trees;
      nodes += static_cast<int>(t.nodes.size());
      Weights w = build_weights(t);
      auto cons = verify_conservation(t, w);
      worst_cons = std::max(worst_cons, cons.worst);
      if (!cons.ok) ++bad_cons;
      max_y = std::max(max_y, w.max_y);
      if (w.max_y > 101.0 * (1.0 + 1e-12)) ++bad_y;
      double dh = t.nodes[0].diam_h;
      if (std::abs(w.integral() - dh) > 1e-10 * std::max(dh, 1e-300)) ++bad_mass;
      for (size_t k = 0; k < t.nodes.size(); ++k) {
        double want = closed_form_density(fx.forest, forest_index.at(t.nodes[k].id));
        if (std::abs(w.density[k] - want) > 1e-10 * std::max(std::abs(want), 1e-300)) ++bad_prod;
      }
    }
    if (degenerate) {
      notes += " " + fx.name + " skipped (s_Q = 0)";
      continue;
    }
    std::vector<Point> pts;
    for (int i = 0; i < 10000; ++i) pts.push_back(fx.curve.at(i / 9999.0));
    auto rep = verify_bounds(fx.forest, fx.curve.space(), pts, 0.999);
    max_stack = std::max(max_stack, rep.max_stack);
    if (!rep.stack_ok) ++bad_stack;
  }
  std::ostringstream os;
  os << fixtures.size() << " forests, " << trees << " trees, " << nodes << " nodes; conservation " << bad_cons
     << " (worst " << num(worst_cons) << "), Y " << bad_y << " (max " << num(max_y) << "), mass " << bad_mass
     << ", overlap " << bad_stack << " (max " << num(max_stack) << "), product " << bad_prod << notes;
  int bad = bad_cons + bad_y + bad_mass + bad_stack + bad_prod + skipped;
  return {bad == 0 && trees > 0, os.str()};
}

ExperimentConfig lab_config(const std::string& generator) {
  ExperimentConfig cfg;
  cfg.generator = generator;
  cfg.profile = "lab";
  cfg.inflation = 4.0;
  cfg.space = NormedSpace::l2();
  cfg.p = 2.0;
  return cfg;
}

// 8. A straight segment is degenerate everywhere.
Outcome straight_line() {
  auto r = run_pipeline(lab_config("segment"), Stage::Classify);
  double worst = 0.0;
  for (const auto& row : r.balls) worst = std::max(worst, row.beta.beta);
  bool ok = worst < 1e-12 && r.jones_sum == r.diam_e && r.n_b == 0;
  std::ostringstream os;
  os << r.balls.size() << " balls, max beta " << num(worst) << ", S - diam E = " << num(r.jones_sum - r.diam_e)
     << ", B balls " << r.n_b;
  return {ok, os.str()};
}

// 9. Koch ratio stays bounded.
Outcome koch_ratio() {
  auto cfg = lab_config("koch");
  cfg.params["angle"] = 60.0;
  auto rows = tsp_ratio_table(cfg, {3, 4, 5, 6});
  bool len_ok = true;
  std::ostringstream os;
  for (const auto& row : rows) {
    double want = std::pow(4.0 / 3.0, row.depth);
    if (std::abs(row.length - want) > 1e-12 * want) len_ok = false;
    os << "d" << row.depth << " " << num(row.ratio) << " ";
  }
  bool ratio_ok = rows.back().ratio <= 2.0 * rows.front().ratio;
  os << "; depth 6 / depth 3 = " << num(rows.back().ratio / rows.front().ratio) << (len_ok ? ", lengths (4/3)^n" : ", length mismatch");
  return {ratio_ok && len_ok, os.str()};
}

// 10. Case taxonomy bounds.
Outcome case_taxonomy() {
  NormedSpace s = NormedSpace::l2();
  std::vector<std::pair<std::string, CaseReport>> reports;
  auto r = run_pipeline(lab_config("plus_sign"));
  for (const auto& b : r.buckets)
    if (b.cases) reports.emplace_back("plus sign pipeline", *b.cases);
  auto scan = [&](const ForestFixture& f) { reports.emplace_back(f.name, q_hypothesis_scan(f.forest, s, f.types, 0.999)); };
  scan(forest_fixture("plus sign crossing", plus_sign(s), 4, 0.2, 12, 1, {0.0, 0.0}, 0.6, 9));
  scan(forest_fixture("plus sign lab", plus_sign(s), 6, std::ldexp(1.0, -12), 13, 1, {0.0, 0.0}, 0.6, 7));
  scan(forest_fixture("tiled segment", segment(s), 4, 0.2, 12, 1, {0.5, 0.0}, 0.5, 9));
  scan(forest_fixture("tiled segment lab", segment(s), 6, std::ldexp(1.0, -12), 13, 1, {0.5, 0.0}, 0.5, 7));
  int nodes = 0, bad = 0;
  double worst = 0.0;
  std::map<std::string, int> tags;
  for (const auto& [name, rep] : reports) {
    for (const auto& e : rep.nodes) {
      ++nodes;
      ++tags[e.tag];
      if (!e.pass) ++bad;
      if (e.tag == "large_remainder" && e.ratio > 100.0 / 101.0) ++bad;
    }
    worst = std::max(worst, rep.max_ratio);
  }
  std::ostringstream os;
  os << nodes << " nodes (";
  for (const auto& [t, n] : tags) os << t << " " << n << " ";
  os << "), " << bad << " over their bound, max ratio " << num(worst);
  return {bad == 0 && worst <= 0.999 && nodes > 0, os.str()};
}

// Curve samples plus a dense patch around x so that deep core levels exist there.
std::vector<Point> refined_samples(const Curve& c, const Point& x, double radius) {
  auto pts = sample_curve(c);
  for (const auto& iv : preimage(c, RBall{x, radius}))
    for (int i = 0; i <= 4096; ++i) pts.push_back(c.at(iv.a + (iv.b - iv.a) * i / 4096.0));
  return pts;
}

// 11. Fragment and efficient subarc bounds.
Outcome fragments() {
  NormedSpace s = NormedSpace::l2();
  const int J = 20, k = 3;
  const double cc = std::ldexp(1.0, -12);
  struct Case {
    std::string name;
    Curve curve;
    Point near;
  };
  std::vector<Case> cases{{"segment", segment(s), {0.5, 0.0}},
                          {"radial spoke", radial_spoke(s), {0.0, 0.0}},
                          {"plus sign arm", plus_sign(s), {0.5, 0.0}},
                          {"plus sign crossing", plus_sign(s), {0.0, 0.0}},
                          {"t junction", t_junction(s, 0.01), {0.0, 0.0}},
                          {"zigzag", zigzag(s, 4, 0.25), {0.25, 0.25}},
                          {"zigzag edge", zigzag(s, 4, 0.25), {0.125, 0.125}},
                          {"circle", circle(s, 64), {1.0, 0.0}},
                          {"koch 3", koch(s, 3), {0.5, 0.0}},
                          {"random walk", random_walk(s, 8, 7), random_walk(s, 8, 7).at(0.4)}};
  for (double p : {1.5, 3.0}) {
    NormedSpace sp = NormedSpace::lp(2, p);
    cases.push_back({"tilted segment l" + num(p), Curve(sp, {{0.0, 0.0}, {0.8, 0.6}}), {0.4, 0.3}});
    cases.push_back({"bent line l" + num(p), Curve(sp, {{0.0, 0.0}, {1.0, 0.0}, {1.5, 0.4}}), {0.5, 0.0}});
  }
  int ok_frag = 0, failed_frag = 0, bad = 0, flat = 0, bad_eff = 0;
  double spoke_ratio = -1.0, min_eff = 1.0;
  std::string notes;
  for (const auto& cs : cases) {
    const NormedSpace& cs_space = cs.curve.space();
    auto coarse = build_nets(sample_curve(cs.curve), 0, k, cs_space);
    const auto& X = coarse.level(k);
    size_t best = 0;
    for (size_t i = 1; i < X.size(); ++i)
      if (cs_space.distance(X[i], cs.near) < cs_space.distance(X[best], cs.near)) best = i;
    Point ctr = X[best];
    auto h = build_nets(refined_samples(cs.curve, ctr, 4.0 * cc * std::ldexp(1.0, -k)), 0, k + J + 1, cs_space);
    int idx = h.index_of(k, ctr);
    if (idx < 0) {
      ++bad;
      notes += " " + cs.name + ": center lost";
      continue;
    }
    Ball q = make_ball(ctr, k, 4.0, idx);
    CoreNode core = build_core(q, h, J, cc);
    try {
      Fragment f = maximal_fragment(cs.curve, q, core.region(), core.q_star, 1.0, 0.05, J);
      ++ok_frag;
      if (!f.lower_ok || !f.upper_ok || !f.u_ok) {
        ++bad;
        notes += " " + cs.name + ": diam H / diam Q_* " + num(f.diam / f.diam_q_star);
      }
      if (cs.name == "radial spoke") spoke_ratio = f.diam / f.diam_q_star;
      try {
        auto g = efficient_subarc(cs.curve, f, core.q_star);
        if (g.central_flat) {
          ++flat;
          min_eff = std::min(min_eff, g.efficiency);
          if (!(g.efficiency > 0.99993)) ++bad_eff;
        }
      } catch (const FlatnessError&) {
      }
    } catch (const FragmentError&) {
      ++failed_frag;
      notes += " " + cs.name + ": no fragment";
    }
  }
  bool spoke_ok = std::abs(spoke_ratio - 0.5) < 1e-6;
  std::ostringstream os;
  os << ok_frag << " fragments (" << failed_frag << " fixtures without one), " << bad << " outside bounds; radial spoke "
     << num(spoke_ratio) << " diam Q_*; " << flat << " central-flat, min efficiency " << std::setprecision(7) << min_eff << notes;
  return {bad == 0 && bad_eff == 0 && spoke_ok && ok_frag > 0, os.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 beta vs angle grid", beta_oracle},
      {"2 beta monotonicity", beta_monotone},
      {"3 J-projection suite", jproj_suite},
      {"4 nets and counting", nets_counting},
      {"5 core lemma", core_lemma},
      {"6 ball chains", ball_chains},
      {"7 martingale", martingale},
      {"8 straight line", straight_line},
      {"9 koch ratio", koch_ratio},
      {"10 case taxonomy", case_taxonomy},
      {"11 fragment bounds", fragments},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  [" << num(secs) << " s]  " << o.detail << std::endl;
  }
  std::cout << (11 - failed) << "/11 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
