#include "jones/curve.hpp"

#include "jones/constants.hpp"

namespace jones {

namespace {

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto orient = [](const Point& o, const Point& p, const Point& q) {
    double v = (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  };
  auto on_seg = [](const Point& p, const Point& q, const Point& r) {
    return std::min(p[0], r[0]) <= q[0] && q[0] <= std::max(p[0], r[0]) && std::min(p[1], r[1]) <= q[1] &&
           q[1] <= std::max(p[1], r[1]);
  };
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_seg(a, c, b)) return true;
  if (o2 == 0 && on_seg(a, d, b)) return true;
  if (o3 == 0 && on_seg(c, a, d)) return true;
  if (o4 == 0 && on_seg(c, b, d)) return true;
  return false;
}

constexpr double kMergeTol = 1e-12;

}  // namespace

Curve::Curve(NormedSpace space, std::vector<Point> vertices, bool closed)
    : space_(space), given_(std::move(vertices)), closed_(closed) {
  if (given_.size() < 2) throw InputError("a curve needs at least two vertices");
  for (const auto& v : given_)
    if (v.dim() != space_.dim) throw InputError("vertex dimension does not match the space");
  path_ = given_;
  if (closed_) path_.push_back(given_.front());
  cum_.assign(path_.size(), 0.0);
  for (size_t i = 1; i < path_.size(); ++i) {
    double d = space_.distance(path_[i - 1], path_[i]);
    if (d == 0.0) throw InputError("consecutive curve vertices must be distinct");
    cum_[i] = cum_[i - 1] + d;
  }
  params_.resize(path_.size());
  for (size_t i = 0; i < path_.size(); ++i) params_[i] = cum_[i] / cum_.back();
  params_.back() = 1.0;
  if (space_.dim == 2) {
    size_t n = num_segments();
    for (size_t i = 0; i < n && injective_; ++i)
      for (size_t j = i + 2; j < n; ++j) {
        if (closed_ && i == 0 && j == n - 1) continue;
        if (segments_cross(path_[i], path_[i + 1], path_[j], path_[j + 1])) {
          injective_ = false;
          break;
        }
      }
  }
}

size_t Curve::segment_of(double t) const {
  if (t <= 0.0) return 0;
  if (t >= 1.0) return num_segments() - 1;
  auto it = std::lower_bound(params_.begin(), params_.end(), t);
  size_t i = static_cast<size_t>(it - params_.begin());
  return i == 0 ? 0 : std::min(i - 1, num_segments() - 1);
}

Point Curve::at(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  size_t i = segment_of(t);
  if (t == params_[i]) return path_[i];
  if (t == params_[i + 1]) return path_[i + 1];
  double u = (t - params_[i]) / (params_[i + 1] - params_[i]);
  return lerp(path_[i], path_[i + 1], u);
}

std::vector<CurvePoint> image_points(const Curve& c, const Interval& iv) {
  std::vector<CurvePoint> out;
  out.push_back({iv.a, c.at(iv.a)});
  size_t n = c.path().size();
  for (size_t i = 0; i < n; ++i) {
    double t = c.param(i);
    if (t > iv.a && t < iv.b) out.push_back({t, c.path()[i]});
  }
  if (iv.b > iv.a) out.push_back({iv.b, c.at(iv.b)});
  return out;
}

std::vector<Point> image_vertices(const Curve& c, const std::vector<Interval>& ivs) {
  std::vector<Point> out;
  for (const auto& iv : ivs)
    for (auto& cp : image_points(c, iv)) out.push_back(cp.x);
  return out;
}

std::vector<Interval> preimage(const Curve& c, const BallUnion& region) {
  std::vector<Interval> raw;
  const auto& P = c.path();
  for (size_t i = 0; i + 1 < P.size(); ++i) {
    double p0 = c.param(i), p1 = c.param(i + 1);
    for (const auto& b : region.balls) {
      auto iv = segment_ball_interval(c.space(), P[i], P[i + 1], b.center, b.radius);
      if (!iv) continue;
      double a = iv->a == 0.0 ? p0 : p0 + iv->a * (p1 - p0);
      double e = iv->b == 1.0 ? p1 : p0 + iv->b * (p1 - p0);
      raw.push_back({a, e});
    }
  }
  return merge_intervals(std::move(raw), kMergeTol);
}

std::vector<Interval> preimage(const Curve& c, const RBall& ball) { return preimage(c, BallUnion{{ball}}); }

double curve_length(const Curve& c) { return c.length(); }

double restricted_measure(const Curve& c, const BallUnion& region) {
  double s = 0.0;
  for (const auto& iv : preimage(c, region)) s += iv.length();
  return s * c.length();
}

std::vector<Interval> intersect(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  std::vector<Interval> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      double lo = std::max(x.a, y.a), hi = std::min(x.b, y.b);
      if (lo <= hi) out.push_back({lo, hi});
    }
  std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
  return out;
}

double min_distance(const Curve& c, const Interval& iv, const Point& x) {
  size_t i0 = c.segment_of(iv.a), i1 = c.segment_of(iv.b);
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = i0; i <= i1; ++i) {
    double lo = std::max(iv.a, c.param(i)), hi = std::min(iv.b, c.param(i + 1));
    if (lo > hi) continue;
    best = std::min(best, segment_distance(c.space(), c.at(lo), c.at(hi), x));
  }
  return best;
}

double max_distance(const Curve& c, const Interval& iv, const Point& x) {
  double m = 0.0;
  for (const auto& cp : image_points(c, iv)) m = std::max(m, c.space().distance(cp.x, x));
  return m;
}

std::vector<Point> curve_in_ball(const Curve& c, const RBall& ball) { return image_vertices(c, preimage(c, ball)); }

BetaResult curve_beta(const Curve& c, const RBall& window) {
  return beta_of_points(c.space(), curve_in_ball(c, window), 2.0 * window.radius);
}

double arc_diam(const Curve& c, const Interval& iv) {
  std::vector<Point> pts;
  for (auto& cp : image_points(c, iv)) pts.push_back(cp.x);
  return set_diameter(c.space(), pts);
}

double arc_beta(const Curve& c, const Interval& iv) {
  if (!(iv.b > iv.a)) return 0.0;
  std::vector<Point> pts;
  for (auto& cp : image_points(c, iv)) pts.push_back(cp.x);
  double d = set_diameter(c.space(), pts);
  if (d == 0.0) return 0.0;
  return beta_of_points(c.space(), pts, d).beta;
}

std::vector<ArcRef> lambda_arcs(const Curve& c, const Ball& q, double lambda, bool any_lambda) {
  if (!any_lambda && lambda != 1.0 && lambda != 5.0) throw InputError("lambda must be 1 or 5");
  if (!(lambda > 0.0)) throw InputError("lambda must be positive");
  double r = q.r();
  std::vector<ArcRef> out;
  for (const auto& iv : preimage(c, RBall{q.center, 2.0 * lambda * r})) {
    if (!(iv.b > iv.a)) continue;
    if (min_distance(c, iv, q.center) <= lambda * r * (1.0 + 1e-12)) out.push_back({iv, arc_diam(c, iv)});
  }
  return out;
}

size_t ArcClassification::n_flat() const { return static_cast<size_t>(std::count(flat.begin(), flat.end(), true)); }
size_t ArcClassification::n_star() const {
  return static_cast<size_t>(std::count(star_flat.begin(), star_flat.end(), true));
}

ArcClassification classify(const Curve& c, const Ball& q, double lambda, double eps2) {
  if (!(eps2 > 0.0)) throw InputError("eps2 must be positive");
  ArcClassification out;
  out.lambda = lambda;
  out.arcs = lambda_arcs(c, q, lambda, true);
  double r = q.r();
  out.beta_gamma = curve_beta(c, RBall{q.center, r}).beta;
  std::vector<Interval> all;
  for (const auto& a : out.arcs) {
    out.betas.push_back(arc_beta(c, a.interval));
    all.push_back(a.interval);
  }
  double big = 4.0 * lambda * r;
  out.beta_lambda = all.empty() ? 0.0 : beta_of_points(c.space(), image_vertices(c, all), big).beta;
  std::vector<Interval> star;
  for (size_t i = 0; i < out.arcs.size(); ++i) {
    bool f = out.betas[i] <= eps2 * out.beta_gamma + BETA_ZERO_TOL;
    bool s = out.betas[i] <= 50.0 * eps2 * out.beta_lambda + BETA_ZERO_TOL;
    out.flat.push_back(f);
    out.star_flat.push_back(s);
    if (s) star.push_back(out.arcs[i].interval);
  }
  out.beta_star = star.empty() ? 0.0 : beta_of_points(c.space(), image_vertices(c, star), big).beta;
  return out;
}

BBallReport is_B_ball(const Curve& c, const Ball& q, double lambda, double eps1, double eps2) {
  BBallReport rep;
  rep.cls = classify(c, q, lambda, eps2);
  const auto& cls = rep.cls;
  double r = q.r();
  bool escapes = false;
  for (const auto& v : c.path())
    if (c.space().distance(v, q.center) > 14.0 * r) {
      escapes = true;
      break;
    }
  rep.clause_i = cls.beta_gamma > BETA_ZERO_TOL && escapes;
  double nb = net_ball(q).r();
  rep.clause_ii = true;
  for (size_t i = 0; i < cls.arcs.size(); ++i) {
    if (min_distance(c, cls.arcs[i].interval, q.center) > nb) continue;
    if (!cls.flat[i]) rep.clause_ii = false;
    if (cls.flat[i] && (cls.arcs[i].a() <= 0.0 || cls.arcs[i].b() >= 1.0)) rep.b0_excluded = true;
  }
  rep.clause_iii = cls.beta_star > eps1 * cls.beta_lambda;
  rep.is_B = rep.clause_i && rep.clause_ii && rep.clause_iii;
  if (!rep.clause_i)
    rep.failed = "i";
  else if (!rep.clause_ii)
    rep.failed = "ii";
  else if (!rep.clause_iii)
    rep.failed = "iii";
  return rep;
}

double core_shape_factor(int J) { return J >= 19 ? 1.00001 : 1.0 + 3.0 / std::ldexp(1.0, J); }

Fragment maximal_fragment(const Curve& c, const Ball& q, const BallUnion& core, const RBall& q_star, double lambda,
                          double eps2, int J) {
  ArcClassification cls = classify(c, q, lambda, eps2);
  auto in_core = preimage(c, core);
  double quarter = 0.25 * q_star.radius * (1.0 + 1e-12);
  std::optional<Fragment> best;
  for (size_t i = 0; i < cls.arcs.size(); ++i) {
    if (!cls.star_flat[i]) continue;
    std::vector<Interval> pieces;
    for (const auto& p : intersect({cls.arcs[i].interval}, in_core))
      if (p.b > p.a) pieces.push_back(p);
    if (pieces.empty()) continue;
    bool meets = false;
    for (const auto& p : pieces)
      if (min_distance(c, p, q_star.center) <= quarter) meets = true;
    if (!meets) continue;
    double d = set_diameter(c.space(), image_vertices(c, pieces));
    if (!best || d > best->diam * (1.0 + 1e-12)) {
      best = Fragment{};
      best->pieces = pieces;
      best->diam = d;
      best->source_arc = cls.arcs[i];
    }
  }
  if (!best) throw FragmentError("no *-almost flat arc meets the quarter core of ball " + q.id.str());
  Fragment& h = *best;
  h.diam_q_star = 2.0 * q_star.radius;
  h.diam_u = core.diam(c.space());
  h.upper_factor = core_shape_factor(J);
  double tol = REL_TOL * h.diam_q_star;
  h.lower_ok = h.diam >= 0.5 * h.diam_q_star - tol;
  h.upper_ok = h.diam <= h.upper_factor * h.diam_q_star + tol;
  h.u_ok = h.diam >= 0.49999 * h.diam_u - tol;
  return h;
}

namespace {

struct Traversal {
  double s, e;
};

// Sub-intervals on which the projected coordinate runs from one level to the
// other without touching either in between.
void traversals(const Curve& c, const JProjection& proj, const Interval& piece, double lo, double hi,
                std::vector<Traversal>& out) {
  auto pts = image_points(c, piece);
  std::optional<double> last_lo, last_hi;
  auto hit = [&](double t, bool at_lo) {
    if (at_lo) {
      if (last_hi && (!last_lo || *last_lo < *last_hi)) out.push_back({*last_hi, t});
      last_lo = t;
    } else {
      if (last_lo && (!last_hi || *last_hi < *last_lo)) out.push_back({*last_lo, t});
      last_hi = t;
    }
  };
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    double t0 = pts[i].t, t1 = pts[i + 1].t;
    double g0 = proj.coordinate(pts[i].x), g1 = proj.coordinate(pts[i + 1].x);
    if (g0 == g1) continue;
    auto when = [&](double level) { return t0 + (level - g0) / (g1 - g0) * (t1 - t0); };
    bool lo_in = std::min(g0, g1) <= lo && lo <= std::max(g0, g1);
    bool hi_in = std::min(g0, g1) <= hi && hi <= std::max(g0, g1);
    if (g1 > g0) {
      if (lo_in) hit(when(lo), true);
      if (hi_in) hit(when(hi), false);
    } else {
      if (hi_in) hit(when(hi), false);
      if (lo_in) hit(when(lo), true);
    }
  }
}

}  // namespace

SubarcResult efficient_subarc(const Curve& c, const Fragment& h, const RBall& q_star) {
  if (h.pieces.empty()) throw PreconditionError("empty fragment");
  const auto& space = c.space();
  std::vector<Point> tau_pts;
  for (auto& cp : image_points(c, h.source_arc.interval)) tau_pts.push_back(cp.x);
  LineFit fit = minimax_line(space, tau_pts);
  if (!fit.line) throw FlatnessError("source arc has no fitting line");
  SubarcResult res;
  res.proj = norming_projection(space, *fit.line);
  res.diam_h = h.diam;
  std::vector<Point> frag = image_vertices(c, h.pieces);
  double cmin = std::numeric_limits<double>::infinity(), cmax = -cmin;
  for (const auto& x : frag) {
    double s = res.proj.coordinate(x);
    cmin = std::min(cmin, s);
    cmax = std::max(cmax, s);
  }
  double margin = 3e-5 * h.diam;
  double lo = cmin + margin, hi = cmax - margin;
  if (!(hi > lo)) throw FlatnessError("fragment shadow is shorter than the sweep margins");
  std::vector<Traversal> cand;
  for (const auto& p : h.pieces) traversals(c, res.proj, p, lo, hi, cand);
  if (cand.empty()) throw FlatnessError("no traversal of the fragment shadow");
  double best_gap = -1.0;
  Interval pick{};
  for (const auto& tr : cand) {
    Interval iv{std::min(tr.s, tr.e), std::max(tr.s, tr.e)};
    auto cps = image_points(c, iv);
    std::vector<Point> pts;
    for (auto& cp : cps) pts.push_back(cp.x);
    auto [i, j] = diameter_pair(space, pts);
    double gap = space.distance(pts[i], pts[j]);
    if (gap > best_gap) {
      best_gap = gap;
      pick = Interval{std::min(cps[i].t, cps[j].t), std::max(cps[i].t, cps[j].t)};
    }
  }
  res.arc = ArcRef{pick, arc_diam(c, pick)};
  res.endpoint_gap = space.distance(c.at(pick.a), c.at(pick.b));
  res.efficiency = h.diam > 0.0 ? res.arc.diam / h.diam : 0.0;
  double r = q_star.radius;
  res.in_q_star = max_distance(c, pick, q_star.center) <= 0.99999 * r + 1e-12 * r;
  res.meets_quarter = min_distance(c, pick, q_star.center) <= 0.25007 * r + 1e-12 * r;
  for (const auto& p : h.pieces)
    if (min_distance(c, p, q_star.center) <= 0.25 * r * (1.0 + 1e-12)) res.h_meets_quarter = true;
  double worst = max_deviation(space, frag, *fit.line);
  res.central_flat = worst <= std::ldexp(1.0, -36) * h.diam;
  return res;
}

std::string to_string(Side s) {
  switch (s) {
    case Side::Inside: return "inside";
    case Side::Plus: return "plus";
    case Side::Minus: return "minus";
  }
  return "?";
}

Interval shadow(const JProjection& proj, const BallUnion& W) {
  if (W.empty()) throw PreconditionError("cylinder over an empty region");
  Interval iv{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& b : W.balls) {
    double s = proj.coordinate(b.center);
    iv.a = std::min(iv.a, s - b.radius);
    iv.b = std::max(iv.b, s + b.radius);
  }
  return iv;
}

Side cylinder_membership(const JProjection& proj, const BallUnion& W, const Point& x) {
  Interval iv = shadow(proj, W);
  double s = proj.coordinate(x);
  double tol = LINE_TOL * std::max(iv.length(), 1e-300);
  if (s > iv.b + tol) return Side::Plus;
  if (s < iv.a - tol) return Side::Minus;
  return Side::Inside;
}

std::string to_string(CoreType t) {
  switch (t) {
    case CoreType::NotAdjacent: return "not_adjacent";
    case CoreType::N1: return "N1";
    case CoreType::N2_1: return "N2_1";
    case CoreType::N2_2: return "N2_2";
    case CoreType::Unnecessary: return "unnecessary";
  }
  return "?";
}

namespace {

// Whether the arc reaches P_{ball} outside the open ball of radius `outer`.
bool is_tall(const Curve& c, const JProjection& proj, const Interval& arc, const RBall& ball, double outer) {
  Interval shade{proj.coordinate(ball.center) - ball.radius, proj.coordinate(ball.center) + ball.radius};
  auto pts = image_points(c, arc);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    double g0 = proj.coordinate(pts[i].x), g1 = proj.coordinate(pts[i + 1].x);
    double u0 = 0.0, u1 = 1.0;
    if (g0 == g1) {
      if (g0 < shade.a || g0 > shade.b) continue;
    } else {
      double ua = (shade.a - g0) / (g1 - g0), ub = (shade.b - g0) / (g1 - g0);
      u0 = std::max(0.0, std::min(ua, ub));
      u1 = std::min(1.0, std::max(ua, ub));
      if (u0 > u1) continue;
    }
    Point p0 = lerp(pts[i].x, pts[i + 1].x, u0), p1 = lerp(pts[i].x, pts[i + 1].x, u1);
    double far = std::max(c.space().distance(p0, ball.center), c.space().distance(p1, ball.center));
    if (far >= outer) return true;
  }
  return false;
}

}  // namespace

CoreType classify_core(const Curve& c, const ArcRef& parent_t, const JProjection& proj, const Ball& q_child,
                       const BallUnion& core, const RBall& q_star_child, double lambda, double eps2) {
  const Point& x = q_star_child.center;
  double rs = q_star_child.radius;
  double near = 1.00002 * rs;
  if (min_distance(c, parent_t.interval, x) > near) return CoreType::NotAdjacent;
  ArcClassification cls = classify(c, q_child, lambda, eps2);
  bool tall = false, wide = false, wide_central = false;
  for (size_t i = 0; i < cls.arcs.size(); ++i) {
    if (!cls.flat[i]) continue;
    const Interval& iv = cls.arcs[i].interval;
    if (min_distance(c, iv, x) > near) continue;
    if (is_tall(c, proj, iv, RBall{x, 1.01 * rs}, 4.0 * rs)) tall = true;
    Side s0 = cylinder_membership(proj, core, c.at(iv.a));
    Side s1 = cylinder_membership(proj, core, c.at(iv.b));
    if ((s0 == Side::Plus && s1 == Side::Minus) || (s0 == Side::Minus && s1 == Side::Plus)) {
      wide = true;
      if (min_distance(c, iv, x) <= std::ldexp(rs, -14)) wide_central = true;
    }
  }
  if (tall) return CoreType::N1;
  if (wide) return wide_central ? CoreType::N2_1 : CoreType::N2_2;
  return CoreType::Unnecessary;
}

}  // namespace jones
