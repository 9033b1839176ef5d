#include "jones/martingale.hpp"

#include <functional>

#include "jones/constants.hpp"

namespace jones {

int WeightTree::depth(int i) const {
  int d = 0;
  while (nodes[i].parent >= 0) {
    i = nodes[i].parent;
    ++d;
  }
  return d;
}

double s_value(const WeightTree& t, int node, bool* bound_ok) {
  const auto& n = t.nodes.at(node);
  double s = 101.0 * n.ell_r;
  for (int ch : n.children) {
    if (ch < 0 || ch >= static_cast<int>(t.nodes.size())) throw PreconditionError("unresolved child in weight tree");
    s += t.nodes[ch].diam_h;
  }
  if (bound_ok) *bound_ok = s <= 101.0 * n.ell_u * (1.0 + REL_TOL);
  return s;
}

void resolve_s(WeightTree& t) {
  for (size_t i = 0; i < t.nodes.size(); ++i) t.nodes[i].s_q = s_value(t, static_cast<int>(i));
}

WeightTree weight_tree(const CoreForest& forest, int root) {
  WeightTree t;
  std::function<int(int, int)> add = [&](int f, int parent) {
    int me = static_cast<int>(t.nodes.size());
    const auto& n = forest.nodes[f];
    WeightNode w;
    w.id = n.ball.id.str();
    w.diam_h = n.diam_h;
    w.ell_u = n.ell_u;
    w.ell_r = n.ell_r;
    w.parent = parent;
    t.nodes.push_back(w);
    for (int ch : n.children) {
      int c = add(ch, me);
      t.nodes[me].children.push_back(c);
    }
    return me;
  };
  add(root, -1);
  resolve_s(t);
  return t;
}

double Weights::integral() const {
  double s = 0.0;
  for (const auto& c : cells) s += c.value * c.measure;
  return s;
}

double Weights::cell_value(int node) const {
  for (const auto& c : cells)
    if (c.node == node) return c.value;
  return 0.0;
}

Weights build_weights(const WeightTree& t) {
  const size_t n = t.nodes.size();
  if (n == 0) throw PreconditionError("empty weight tree");
  Weights w;
  w.mass.assign(n, 0.0);
  w.density.assign(n, 0.0);
  for (const auto& nd : t.nodes)
    if (!(nd.ell_u > 0.0)) throw PreconditionError("node " + nd.id + " has l(U_Q) = 0");
  std::vector<int> depth(n, 0);
  int max_depth = 0;
  std::vector<int> order{0};
  for (size_t h = 0; h < order.size(); ++h)
    for (int ch : t.nodes[order[h]].children) {
      depth[ch] = depth[order[h]] + 1;
      max_depth = std::max(max_depth, depth[ch]);
      order.push_back(ch);
    }
  w.mass[0] = t.nodes[0].diam_h;
  for (int i : order) {
    const auto& nd = t.nodes[i];
    w.density[i] = w.mass[i] / nd.ell_u;
    if (nd.children.empty()) {
      w.cells.push_back({i, true, w.density[i], nd.ell_u});
      continue;
    }
    w.cells.push_back({i, false, 101.0 * w.mass[i] / nd.s_q, nd.ell_r});
    for (int ch : nd.children) w.mass[ch] = w.mass[i] * t.nodes[ch].diam_h / nd.s_q;
  }
  // Y_k: frozen cells of shallower nodes plus the densities at depth k.
  for (int k = 0; k <= max_depth; ++k) {
    double integral = 0.0, mx = 0.0;
    for (int i : order) {
      if (depth[i] == k) {
        integral += w.density[i] * t.nodes[i].ell_u;
        mx = std::max(mx, w.density[i]);
      } else if (depth[i] < k) {
        for (const auto& c : w.cells)
          if (c.node == i && !c.leaf) {
            integral += c.value * c.measure;
            if (c.measure > 0.0) mx = std::max(mx, c.value);
          } else if (c.node == i && c.leaf) {
            integral += c.value * c.measure;
            mx = std::max(mx, c.value);
          }
      }
    }
    w.level_integrals.push_back(integral);
    w.level_max.push_back(mx);
    w.max_y = std::max(w.max_y, mx);
  }
  return w;
}

ConservationReport verify_conservation(const WeightTree& t, const Weights& w) {
  ConservationReport rep;
  double y0 = w.level_integrals.at(0);
  rep.y0_ok = std::abs(y0 - t.nodes[0].diam_h) <= 1e-12 * std::max(t.nodes[0].diam_h, 1e-300);
  for (size_t k = 0; k + 1 < w.level_integrals.size(); ++k) {
    double d = std::abs(w.level_integrals[k + 1] - w.level_integrals[k]) / y0;
    rep.worst = std::max(rep.worst, d);
  }
  rep.ok = rep.y0_ok && rep.worst <= 1e-12;
  return rep;
}

double chain_density(const WeightTree& t, int node) {
  std::vector<int> chain;
  for (int i = node; i >= 0; i = t.nodes[i].parent) chain.push_back(i);
  std::reverse(chain.begin(), chain.end());
  // diam H_P * prod_{i>=1} (diam H_{Q_i} / s_{Q_{i-1}}) / l(U_{Q_n})
  double v = t.nodes[chain[0]].diam_h;
  for (size_t i = 1; i < chain.size(); ++i) v *= t.nodes[chain[i]].diam_h / t.nodes[chain[i - 1]].s_q;
  return v / t.nodes[chain.back()].ell_u;
}

double weight_at(const WeightTree& t, const Weights& w, int deepest_node) {
  if (deepest_node < 0) return 0.0;
  (void)t;
  return w.cell_value(deepest_node);
}

BoundsReport verify_bounds(const CoreForest& forest, const NormedSpace& space, const std::vector<Point>& points,
                           double q) {
  BoundsReport rep;
  rep.stack_bound = 101.0 / (1.0 - q);
  const size_t n = forest.nodes.size();
  // Per forest node: its subtree's weights, and the map forest index -> tree index.
  std::vector<WeightTree> trees(n);
  std::vector<Weights> weights(n);
  std::vector<std::map<int, int>> index(n);
  for (size_t f = 0; f < n; ++f) {
    trees[f] = weight_tree(forest, static_cast<int>(f));
    std::vector<int> flat;
    std::function<void(int)> walk = [&](int x) {
      index[f][x] = static_cast<int>(flat.size());
      flat.push_back(x);
      for (int ch : forest.nodes[x].children) walk(ch);
    };
    walk(static_cast<int>(f));
    weights[f] = build_weights(trees[f]);
    const auto& w = weights[f];
    rep.max_y = std::max(rep.max_y, w.max_y);
    if (w.max_y > 101.0 * (1.0 + REL_TOL)) rep.y_ok = false;
    double err = std::abs(w.integral() - trees[f].nodes[0].diam_h) / std::max(trees[f].nodes[0].diam_h, 1e-300);
    rep.worst_mass_err = std::max(rep.worst_mass_err, err);
    if (err > 1e-10) rep.mass_ok = false;
    for (const auto& c : w.cells)
      if (c.value > 101.0 * std::pow(q, trees[f].depth(c.node)) * (1.0 + REL_TOL)) rep.branch_ok = false;
  }
  std::vector<BallUnion> regions;
  for (const auto& nd : forest.nodes) regions.push_back(nd.region());
  for (const auto& x : points) {
    std::vector<bool> in(n);
    for (size_t i = 0; i < n; ++i) in[i] = regions[i].contains(space, x);
    double total = 0.0;
    for (size_t f = 0; f < n; ++f) {
      if (!in[f]) continue;
      int deepest = static_cast<int>(f);
      for (bool moved = true; moved;) {
        moved = false;
        for (int ch : forest.nodes[deepest].children)
          if (in[ch]) {
            deepest = ch;
            moved = true;
            break;
          }
      }
      total += weight_at(trees[f], weights[f], index[f][deepest]);
    }
    rep.max_stack = std::max(rep.max_stack, total);
  }
  rep.stack_ok = rep.max_stack <= rep.stack_bound + 1e-9;
  return rep;
}

CaseReport q_hypothesis_scan(const CoreForest& forest, const NormedSpace& space,
                             const std::map<int, CoreType>& child_types, double q) {
  CaseReport rep;
  for (size_t i = 0; i < forest.nodes.size(); ++i) {
    const auto& nd = forest.nodes[i];
    CaseEntry e;
    e.id = nd.ball.id.str();
    double s = 101.0 * nd.ell_r;
    for (int ch : nd.children) s += forest.nodes[ch].diam_h;
    e.ratio = s > 0.0 ? nd.diam_h / s : std::numeric_limits<double>::infinity();
    if (nd.ell_r > nd.diam_h / 100.0) {
      e.tag = "large_remainder";
      e.bound = kLargeRemainderBound;
    } else {
      double non_n2 = 0.0;
      for (int ch : nd.children) {
        auto it = child_types.find(ch);
        if (it == child_types.end() || !is_n2(it->second)) non_n2 += forest.nodes[ch].diam(space);
      }
      if (non_n2 > 0.05 * nd.diam_h) {
        e.tag = "many_nonN2";
        e.bound = kManyNonN2Bound;
      } else {
        e.tag = "few_nonN2";
        e.bound = kFewNonN2Bound;
      }
    }
    e.pass = e.ratio <= e.bound;
    rep.all_pass = rep.all_pass && e.pass;
    rep.max_ratio = std::max(rep.max_ratio, e.ratio);
    rep.nodes.push_back(e);
  }
  rep.q_ok = rep.max_ratio <= q;
  return rep;
}

}  // namespace jones
