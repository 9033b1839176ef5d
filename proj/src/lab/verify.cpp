#include "jones/lab/verify.hpp"

#include <functional>
#include <sstream>

#include "jones/constants.hpp"
#include "jones/lab/fixtures.hpp"
#include "jones/lab/generators.hpp"
#include "jones/lab/pipeline.hpp"
#include "jones/martingale.hpp"

namespace jones::lab {

namespace {

using Suite = std::function<void(Rng&, const VerifyOptions&, std::vector<PropertyResult>&)>;

void record(std::vector<PropertyResult>& out, const std::string& suite, const std::string& name, bool pass,
            const std::string& detail = "") {
  out.push_back({suite, name, pass, detail});
}

NormedSpace smooth_space(Rng& rng) {
  const double ps[] = {1.5, 2.0, 3.0, 7.0};
  return NormedSpace::lp(2 + static_cast<int>(uniform(rng, 0, 2 - 1e-9)), ps[static_cast<int>(uniform(rng, 0, 4 - 1e-9))]);
}

void banach_suite(Rng& rng, const VerifyOptions& opt, std::vector<PropertyResult>& out) {
  double lip = opt.fault == "lipschitz" ? 0.5 : 1.0;
  int bad_lip = 0, bad_idem = 0, bad_sand = 0, bad_dual = 0, bad_as = 0;
  for (int i = 0; i < 2000; ++i) {
    bool l1 = i % 5 == 4;
    NormedSpace s = l1 ? NormedSpace::l1(2) : smooth_space(rng);
    Line L = make_line(s, random_cloud(rng, s, 1, 1.0)[0], l1 && i % 2 ? Point{1.0, 0.0} : random_unit(rng, s));
    JProjection P = j_projection(s, L, l1 ? uniform(rng, -0.5, 0.5) : 0.0);
    auto xs = random_cloud(rng, s, 2, 3.0);
    Point px = project(P, xs[0]), py = project(P, xs[1]);
    if (s.distance(px, py) > lip * s.distance(xs[0], xs[1]) + REL_TOL) ++bad_lip;
    if (s.distance(project(P, px), px) > REL_TOL) ++bad_idem;
    double d = dist_to_line(s, xs[0], L), e = s.distance(xs[0], px);
    if (d > e + REL_TOL || e > 2.0 * d + REL_TOL) ++bad_sand;
    if (!l1) {
      Point g = duality_map(s, xs[0]);
      double n = s.norm(xs[0]);
      if (std::abs(s.dual_norm(g) - n) > REL_TOL * std::max(1.0, n) ||
          std::abs(dot(g, xs[0]) - n * n) > REL_TOL * std::max(1.0, n * n))
        ++bad_dual;
    }
    Line M = make_line(s, xs[1], random_unit(rng, s));
    if (std::abs(antislope(s, M, P) - antislope(s, M, P, -0.7, 2.3)) > LINE_TOL) ++bad_as;
  }
  record(out, "banach", "lipschitz", bad_lip == 0, std::to_string(bad_lip) + " violations");
  record(out, "banach", "idempotence", bad_idem == 0, std::to_string(bad_idem) + " violations");
  record(out, "banach", "distance sandwich", bad_sand == 0, std::to_string(bad_sand) + " violations");
  record(out, "banach", "duality identities", bad_dual == 0, std::to_string(bad_dual) + " violations");
  record(out, "banach", "antislope invariance", bad_as == 0, std::to_string(bad_as) + " violations");
  int bad_count = 0;
  for (int i = 0; i < 20; ++i) {
    NormedSpace s = smooth_space(rng);
    NearLine nl = near_collinear(rng, s, 30, 0.15);
    for (const auto& x : nl.V)
      for (double r : {0.5, 1.0, 2.0, 3.5, 8.0})
        if (count_in_ball(s, nl.V, x, r * nl.delta) > 1 + 3 * r) ++bad_count;
  }
  record(out, "banach", "counting bound", bad_count == 0, std::to_string(bad_count) + " violations");
}

void net_suite(Rng& rng, const VerifyOptions&, std::vector<PropertyResult>& out) {
  int bad = 0, bad_gap = 0;
  for (int i = 0; i < 10; ++i) {
    NormedSpace s = i % 3 == 0 ? NormedSpace::linf(2) : smooth_space(rng);
    auto pts = random_cloud(rng, s, 120, 1.0);
    auto h = build_nets(pts, -1, 5, s);
    auto chk = verify_nets(h, pts);
    if (!chk.ok()) ++bad;
    for (int k = h.k_min(); k <= h.k_max(); ++k) {
      const auto& X = h.level(k);
      double r = std::ldexp(1.0 / 3.0, -k);
      for (size_t a = 0; a < X.size(); ++a)
        for (size_t b = a + 1; b < X.size(); ++b)
          if (s.distance(X[a], X[b]) - 2 * r < r * (1.0 - LINE_TOL)) ++bad_gap;
    }
  }
  record(out, "net", "separation/maximality/nesting", bad == 0, std::to_string(bad) + " failing hierarchies");
  record(out, "net", "net-ball gap", bad_gap == 0, std::to_string(bad_gap) + " violations");
}

// Brute force over every pair of points as a direction; only valid in the plane.
double brute_width(const NormedSpace& s, const std::vector<Point>& pts) {
  double best = std::numeric_limits<double>::infinity();
  if (pts.size() < 2) return 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      Point u = pts[j] - pts[i];
      if (s.norm(u) == 0.0) continue;
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (const auto& z : pts) {
        double d = u[0] * (z[1] - pts[i][1]) - u[1] * (z[0] - pts[i][0]);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
      best = std::min(best, 0.5 * (hi - lo) / lp_norm(Point{-u[1], u[0]}.coords(), s.conjugate()));
    }
  return std::isinf(best) ? 0.0 : best;
}

void beta_suite(Rng& rng, const VerifyOptions&, std::vector<PropertyResult>& out) {
  const double ps[] = {1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()};
  int bad_range = 0, bad_brute = 0, bad_inv = 0, bad_mono = 0, bad_line = 0;
  for (int i = 0; i < 200; ++i) {
    NormedSpace s = NormedSpace::lp(2, ps[i % 5]);
    int n = 2 + static_cast<int>(uniform(rng, 0, 20));
    auto E = random_cloud(rng, s, n, 1.0);
    RBall Q{random_cloud(rng, s, 1, 0.3)[0], uniform(rng, 0.5, 1.5)};
    auto r = beta_number(s, E, Q);
    if (r.beta < 0.0 || r.beta > 1.0) ++bad_range;
    std::vector<Point> in;
    for (const auto& x : E)
      if (s.distance(x, Q.center) <= Q.radius) in.push_back(x);
    if (std::abs(r.achieved_sup - brute_width(s, in)) > 1e-12 * (1.0 + r.achieved_sup)) ++bad_brute;
    if (r.best_line && std::abs(max_deviation(s, in, *r.best_line) - r.achieved_sup) > 1e-9) ++bad_line;
    double lam = uniform(rng, 0.1, 10.0);
    Point v = random_cloud(rng, s, 1, 5.0)[0];
    std::vector<Point> E2;
    for (const auto& x : E) E2.push_back(x * lam + v);
    auto r2 = beta_number(s, E2, RBall{Q.center * lam + v, Q.radius * lam});
    if (std::abs(r.beta - r2.beta) > REL_TOL) ++bad_inv;
    RBall R{Q.center + random_unit(rng, s) * (0.3 * Q.radius), 0.5 * Q.radius};
    std::vector<Point> sub(E.begin(), E.begin() + n / 2 + 1);
    if (!beta_monotone_check(s, sub, E, R, Q)) ++bad_mono;
  }
  record(out, "beta", "range [0,1]", bad_range == 0, std::to_string(bad_range) + " violations");
  record(out, "beta", "hull-edge vs all-pairs", bad_brute == 0, std::to_string(bad_brute) + " mismatches");
  record(out, "beta", "best line achieves sup", bad_line == 0, std::to_string(bad_line) + " mismatches");
  record(out, "beta", "translation/dilation invariance", bad_inv == 0, std::to_string(bad_inv) + " violations");
  record(out, "beta", "monotonicity", bad_mono == 0, std::to_string(bad_mono) + " violations");
}

void curve_suite(Rng& rng, const VerifyOptions&, std::vector<PropertyResult>& out) {
  int bad_disjoint = 0, bad_cover = 0, bad_subset = 0, bad_partition = 0;
  for (int i = 0; i < 20; ++i) {
    NormedSpace s = NormedSpace::l2();
    Curve c = random_walk(s, 12, rng());
    auto samples = sample_curve(c);
    const Point& x = samples[static_cast<size_t>(uniform(rng, 0, samples.size() - 1e-9))];
    for (double lambda : {1.0, 5.0}) {
      Ball q = make_ball(x, 4, 1.0 + uniform(rng, 0.0, 2.0));
      auto cls = classify(c, q, lambda, 0.05);
      for (size_t a = 0; a + 1 < cls.arcs.size(); ++a)
        if (cls.arcs[a].b() >= cls.arcs[a + 1].a()) ++bad_disjoint;
      for (const auto& v : samples) {
        if (s.distance(v, q.center) > lambda * q.r()) continue;
        bool covered = false;
        for (const auto& arc : cls.arcs)
          if (min_distance(c, arc.interval, v) <= 1e-9) covered = true;
        if (!covered) ++bad_cover;
      }
      for (size_t a = 0; a < cls.arcs.size(); ++a) {
        if (cls.flat[a] && !cls.star_flat[a]) ++bad_subset;
        if (cls.flat[a] == cls.dominant(a)) ++bad_partition;
      }
    }
  }
  record(out, "curve", "arcs disjoint", bad_disjoint == 0, std::to_string(bad_disjoint) + " overlaps");
  record(out, "curve", "arcs cover Gamma in lambda Q", bad_cover == 0, std::to_string(bad_cover) + " uncovered");
  record(out, "curve", "flat within star-flat", bad_subset == 0, std::to_string(bad_subset) + " violations");
  record(out, "curve", "flat/dominant partition", bad_partition == 0, std::to_string(bad_partition) + " violations");
}

void core_suite(Rng& rng, const VerifyOptions&, std::vector<PropertyResult>& out) {
  int bad = 0;
  std::string detail;
  const std::pair<int, double> params[] = {{4, 0.2}, {6, std::ldexp(1.0, -12)}};
  for (int i = 0; i < 6; ++i) {
    NormedSpace s = NormedSpace::l2();
    Curve c = random_walk(s, 8, rng());
    auto h = curve_nets(c, 0, 13, 0.0);
    auto [J, cc] = params[i % 2];
    for (int j = 0; j < J; ++j) {
      std::vector<CoreNode> cores;
      for (const auto& id : balls_at_residue(h, J, j, Point(2), -1.0)) {
        if (id.level > 6) continue;
        cores.push_back(build_core(make_ball(h.level(id.level)[id.index], id.level, 4.0, id.index), h, J, cc));
      }
      auto rep = verify_core_lemma(cores, s);
      if (!rep.ok()) {
        ++bad;
        detail = rep.violations.front();
      }
    }
  }
  record(out, "core", "shape/separation/tree", bad == 0, bad ? detail : "0 violations");
}

void chain_suite(Rng& rng, const VerifyOptions&, std::vector<PropertyResult>& out) {
  int bad = 0, missed = 0;
  NormedSpace s = NormedSpace::l2();
  for (int i = 0; i < 30; ++i) {
    double xi = i % 3 == 0 ? 8.0 : (i % 3 == 1 ? 16.0 : 64.0);
    auto rep = verify_ball_chain(s, random_chain(rng, s, xi, 1.0, 25, 3), xi, 1.0);
    if (!rep.hypotheses_ok() || !rep.unique_min || !rep.containment_ok) ++bad;
  }
  for (const char* kind : {"chain", "decay", "separation"}) {
    auto rep = verify_ball_chain(s, broken_chain(rng, s, 16.0, 1.0, kind), 16.0, 1.0);
    if (rep.hypotheses_ok() || rep.violated != kind) ++missed;
  }
  record(out, "chain", "union location", bad == 0, std::to_string(bad) + " failures");
  record(out, "chain", "violations rejected", missed == 0, std::to_string(missed) + " missed");
}

WeightTree random_weight_tree(Rng& rng, int n) {
  WeightTree t;
  t.nodes.push_back(WeightNode{"0", 0, 0, 0, 0, -1, {}});
  for (int i = 1; i < n; ++i) {
    int p = static_cast<int>(uniform(rng, 0, i - 1e-9));
    t.nodes.push_back(WeightNode{std::to_string(i), 0, 0, 0, 0, p, {}});
    t.nodes[p].children.push_back(i);
  }
  for (int i = n - 1; i >= 0; --i) {
    auto& nd = t.nodes[i];
    nd.ell_r = nd.children.empty() ? uniform(rng, 1e-6, 1.0) : uniform(rng, 0.0, 1.0) * (i % 3 == 0 ? 1e-6 : 1.0);
    double sum = 0.0;
    for (int ch : nd.children) sum += t.nodes[ch].ell_u;
    nd.ell_u = nd.ell_r + sum;
    nd.diam_h = uniform(rng, 0.3, 1.0) * nd.ell_u;
  }
  resolve_s(t);
  return t;
}

void martingale_suite(Rng& rng, const VerifyOptions&, std::vector<PropertyResult>& out) {
  int bad_cons = 0, bad_int = 0, bad_prod = 0;
  for (int i = 0; i < 30; ++i) {
    WeightTree t = random_weight_tree(rng, 2 + i);
    Weights w = build_weights(t);
    if (!verify_conservation(t, w).ok) ++bad_cons;
    if (std::abs(w.integral() - t.nodes[0].diam_h) > 1e-10 * t.nodes[0].diam_h) ++bad_int;
    for (size_t k = 0; k < t.nodes.size(); ++k)
      if (std::abs(chain_density(t, static_cast<int>(k)) - w.density[k]) > 1e-10 * w.density[k]) ++bad_prod;
  }
  record(out, "martingale", "conservation", bad_cons == 0, std::to_string(bad_cons) + " violations");
  record(out, "martingale", "total mass", bad_int == 0, std::to_string(bad_int) + " violations");
  record(out, "martingale", "product formula", bad_prod == 0, std::to_string(bad_prod) + " mismatches");

  NormedSpace s = NormedSpace::l2();
  Curve c = segment(s, 1.0);
  auto h = curve_nets(c, 0, 12, 1.0 / 1024);
  MultiresFamily fam(h, 4.0);
  auto ids = balls_at_residue(h, 4, 0, Point{0.5, 0.0}, 0.3);
  CoreForest forest = build_core_tree(fam, ids, 4, 0.2);
  std::vector<NodeInfo> info;
  std::map<int, CoreType> types;
  analyze_forest(c, forest, 4, 1.0, 0.05, info, types);
  std::vector<Point> pts;
  for (int i = 0; i <= 2000; ++i) pts.push_back(c.at(i / 2000.0));
  auto rep = verify_bounds(forest, s, pts, 0.999);
  record(out, "martingale", "Y <= 101", rep.y_ok, "max " + fmt(rep.max_y));
  record(out, "martingale", "stacked overlap", rep.stack_ok, "max " + fmt(rep.max_stack));
  auto cases = q_hypothesis_scan(forest, s, types, 0.999);
  record(out, "martingale", "case bounds", cases.all_pass, "max ratio " + fmt(cases.max_ratio));
}

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all{
      {"banach", banach_suite}, {"net", net_suite},     {"beta", beta_suite},          {"curve", curve_suite},
      {"core", core_suite},     {"chain", chain_suite}, {"martingale", martingale_suite}};
  return all;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> n;
  for (const auto& [name, f] : suites()) n.push_back(name);
  return n;
}

std::vector<PropertyResult> verify_all(const VerifyOptions& opt) {
  if (!opt.fault.empty() && opt.fault != "lipschitz") throw InputError("unknown fault '" + opt.fault + "'");
  bool found = opt.suite.empty();
  std::vector<PropertyResult> out;
  for (const auto& [name, f] : suites()) {
    if (!opt.suite.empty() && opt.suite != name) continue;
    found = true;
    // Each suite draws from its own stream so filtering does not shift values.
    std::seed_seq seq{opt.seed, static_cast<uint64_t>(std::hash<std::string>{}(name))};
    Rng rng(seq);
    f(rng, opt, out);
  }
  if (!found) throw InputError("unknown suite '" + opt.suite + "'");
  return out;
}

std::string format_results(const std::vector<PropertyResult>& results) {
  std::ostringstream os;
  size_t w = 0;
  for (const auto& r : results) w = std::max(w, r.suite.size() + r.name.size() + 3);
  int failed = 0;
  for (const auto& r : results) {
    std::string label = r.suite + " / " + r.name;
    os << (r.pass ? "PASS  " : "FAIL  ") << label << std::string(w - label.size() + 2, ' ') << r.detail << '\n';
    if (!r.pass) ++failed;
  }
  os << results.size() - failed << " passed, " << failed << " failed\n";
  return os.str();
}

}  // namespace jones::lab
