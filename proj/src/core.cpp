#include "jones/core.hpp"

#include <numeric>
#include <set>

#include "jones/constants.hpp"

namespace jones {

BallUnion CoreNode::region() const {
  BallUnion u;
  u.balls.reserve(members.size());
  for (const auto& m : members) u.balls.push_back({m.center, m.radius});
  return u;
}

CoreNode build_core(const Ball& q, const NetHierarchy& h, int J, double c) {
  if (J < 4) throw PreconditionError("cores need J >= 4");
  if (!(c > 0.0 && c <= 0.2)) throw PreconditionError("cores need 0 < c <= 1/5");
  int k = q.level;
  int idx = h.has_level(k) ? h.index_of(k, q.center) : -1;
  if (idx < 0) throw InputError("ball center is not a net point at level " + std::to_string(k));
  const auto& space = h.space();
  CoreNode node;
  node.ball = q;
  node.J = J;
  node.c = c;
  node.q_star = RBall{q.center, std::ldexp(c, -k)};
  node.members.push_back({q.center, k, idx, node.q_star.radius});

  struct Cand {
    int level, index;
    double radius;
    bool used = false;
  };
  std::vector<Cand> cands;
  for (int m = k + J; m <= h.k_max(); m += J) {
    if (!h.has_level(m)) continue;
    const auto& X = h.level(m);
    for (size_t i = 0; i < X.size(); ++i) cands.push_back({m, static_cast<int>(i), std::ldexp(c, -m)});
  }
  // Breadth-first accretion: each new member may capture further candidates.
  for (size_t head = 0; head < node.members.size(); ++head) {
    MemberBall cur = node.members[head];
    for (auto& cd : cands) {
      if (cd.used) continue;
      const Point& y = h.level(cd.level)[cd.index];
      if (space.distance(y, cur.center) <= cd.radius + cur.radius) {
        cd.used = true;
        node.members.push_back({y, cd.level, cd.index, cd.radius});
      }
    }
  }
  return node;
}

double region_gap(const NormedSpace& space, const BallUnion& a, const BallUnion& b) {
  double g = std::numeric_limits<double>::infinity();
  for (const auto& x : a.balls)
    for (const auto& y : b.balls) g = std::min(g, std::max(0.0, space.distance(x.center, y.center) - x.radius - y.radius));
  return g;
}

namespace {

bool regions_meet(const NormedSpace& space, const CoreNode& a, const CoreNode& b) {
  for (const auto& x : a.members)
    for (const auto& y : b.members)
      if (space.distance(x.center, y.center) <= x.radius + y.radius) return true;
  return false;
}

std::set<std::pair<int, int>> member_ids(const CoreNode& n) {
  std::set<std::pair<int, int>> s;
  for (const auto& m : n.members) s.insert({m.level, m.index});
  return s;
}

}  // namespace

bool core_contains(const CoreNode& outer, const CoreNode& inner) {
  auto ids = member_ids(outer);
  for (const auto& m : inner.members)
    if (!ids.count({m.level, m.index})) return false;
  return true;
}

CoreLemmaReport verify_core_lemma(const std::vector<CoreNode>& cores, const NormedSpace& space) {
  CoreLemmaReport rep;
  for (const auto& n : cores) {
    int k = n.ball.level;
    double reach = 0.0;
    for (const auto& m : n.members) reach = std::max(reach, space.distance(m.center, n.ball.center) + m.radius);
    double bound = (1.0 + 3.0 / std::ldexp(1.0, n.J)) * std::ldexp(n.c, -k);
    if (reach > bound * (1.0 + REL_TOL) || bound > 0.25 * std::ldexp(1.0, -k)) {
      rep.shape_ok = false;
      rep.violations.push_back("shape: core " + n.ball.id.str());
    }
    if (n.members.empty() || !(n.members[0].center == n.q_star.center) || n.members[0].radius != n.q_star.radius) {
      rep.shape_ok = false;
      rep.violations.push_back("shape: core " + n.ball.id.str() + " does not contain its seed ball");
    }
    if (n.J >= 19) {
      rep.fine_shape_checked = true;
      if (reach > 1.00001 * n.q_star.radius) {
        rep.fine_shape_ok = false;
        rep.violations.push_back("fine shape: core " + n.ball.id.str());
      }
    }
  }
  for (size_t i = 0; i < cores.size(); ++i)
    for (size_t j = 0; j < cores.size(); ++j) {
      if (i == j) continue;
      const auto& Q = cores[i];
      const auto& R = cores[j];
      if (Q.ball.level == R.ball.level) {
        if (i > j || Q.ball.center == R.ball.center) continue;
        double g = region_gap(space, Q.region(), R.region());
        double need = 0.5 * std::ldexp(1.0, -Q.ball.level);
        if (g < need * (1.0 - LINE_TOL)) {
          rep.separation_ok = false;
          rep.violations.push_back("separation: cores " + Q.ball.id.str() + " and " + R.ball.id.str());
        }
      } else if (R.ball.level > Q.ball.level && regions_meet(space, Q, R) && !core_contains(Q, R)) {
        rep.tree_ok = false;
        rep.violations.push_back("tree: core " + R.ball.id.str() + " meets but escapes " + Q.ball.id.str());
      }
    }
  return rep;
}

CoreForest build_core_tree(const MultiresFamily& family, const std::vector<BallId>& selected, int J, double c) {
  CoreForest f;
  if (selected.empty()) return f;
  std::vector<BallId> ids = selected;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto mod = [J](int k) { return ((k % J) + J) % J; };
  int residue = mod(ids.front().level);
  for (const auto& id : ids)
    if (mod(id.level) != residue) throw InputError("selected balls do not share a level residue mod J");
  for (const auto& id : ids) f.nodes.push_back(build_core(family.ball(id), family.hierarchy(), J, c));
  std::vector<std::set<std::pair<int, int>>> sets;
  for (const auto& n : f.nodes) sets.push_back(member_ids(n));
  for (size_t i = 0; i < f.nodes.size(); ++i) {
    int best = -1;
    for (size_t j = 0; j < f.nodes.size(); ++j) {
      if (i == j || f.nodes[j].ball.level >= f.nodes[i].ball.level) continue;
      if (sets[j].size() <= sets[i].size()) continue;
      bool contains = std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end());
      if (contains && (best < 0 || f.nodes[j].ball.level > f.nodes[best].ball.level)) best = static_cast<int>(j);
    }
    f.nodes[i].parent = best;
    if (best >= 0)
      f.nodes[best].children.push_back(static_cast<int>(i));
    else
      f.roots.push_back(static_cast<int>(i));
  }
  return f;
}

RemainderResult remainder(const CoreForest& forest, int node, const Curve& c) {
  const CoreNode& n = forest.nodes.at(node);
  RemainderResult r;
  r.region = n.region();
  r.ell_u = restricted_measure(c, r.region);
  double sub = 0.0;
  for (int ch : n.children) {
    r.children.push_back(forest.nodes[ch].region());
    sub += restricted_measure(c, r.children.back());
  }
  r.ell_r = r.ell_u - sub;
  if (r.ell_r < 0.0 && r.ell_r > -REL_TOL * std::max(r.ell_u, 1.0)) r.ell_r = 0.0;
  return r;
}

ChainReport verify_ball_chain(const NormedSpace& space, const std::vector<ChainBall>& balls, double xi, double r0) {
  if (!(xi > 6.0)) throw PreconditionError("ball chains need xi > 6");
  ChainReport rep;
  const size_t n = balls.size();
  if (n == 0) return rep;
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  size_t components = 0;
  for (size_t j = 0; j < n; ++j) {
    ++components;
    for (size_t i = 0; i < j; ++i)
      if (space.distance(balls[i].center, balls[j].center) <= balls[i].radius + balls[j].radius) {
        size_t a = find(i), b = find(j);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
    if (components != 1) rep.chain_ok = false;
  }
  for (const auto& b : balls)
    if (b.radius > std::pow(xi, -b.level) * r0 * (1.0 + REL_TOL)) rep.decay_ok = false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (balls[i].level != balls[j].level) continue;
      double gap = std::max(0.0, space.distance(balls[i].center, balls[j].center) - balls[i].radius - balls[j].radius);
      if (gap < 3.0 * std::pow(xi, -balls[i].level) * r0 * (1.0 - LINE_TOL)) rep.separation_ok = false;
    }
  if (!rep.chain_ok)
    rep.violated = "chain";
  else if (!rep.decay_ok)
    rep.violated = "decay";
  else if (!rep.separation_ok)
    rep.violated = "separation";
  int kmin = balls[0].level;
  for (const auto& b : balls) kmin = std::min(kmin, b.level);
  int count = 0;
  for (size_t i = 0; i < n; ++i)
    if (balls[i].level == kmin) {
      if (count == 0) rep.min_index = static_cast<int>(i);
      ++count;
    }
  rep.unique_min = count == 1;
  const Point& xm = balls[rep.min_index].center;
  rep.containment_radius = (1.0 + 3.0 / xi) * std::pow(xi, -kmin) * r0;
  for (const auto& b : balls) rep.max_reach = std::max(rep.max_reach, space.distance(b.center, xm) + b.radius);
  rep.containment_ok = rep.max_reach <= rep.containment_radius * (1.0 + REL_TOL);
  return rep;
}

}  // namespace jones
