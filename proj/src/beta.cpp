#include "jones/beta.hpp"

#include "jones/constants.hpp"

namespace jones {

namespace {

double det(const Point& u, const Point& w) { return u[0] * w[1] - u[1] * w[0]; }

LineFit fit_plane(const NormedSpace& space, const std::vector<Point>& pts) {
  LineFit out;
  auto hull = convex_hull_2d(pts);
  if (hull.empty()) return out;
  if (hull.size() == 1) {
    out.line = Line{hull[0], Point{1.0, 0.0} * (1.0 / space.norm(Point{1.0, 0.0}))};
    return out;
  }
  if (hull.size() == 2) {
    out.line = make_line(space, hull[0], hull[1] - hull[0]);
    return out;
  }
  // dist(z, b + R u) = |det(u, z - b)| / |(-u_y, u_x)|_q. For a fixed
  // direction the optimal offset halves the spread of det(u, z); here the
  // spread over a hull edge direction is the height of the antipodal vertex.
  const size_t h = hull.size();
  const double q = space.conjugate();
  size_t j = 1;
  double best = std::numeric_limits<double>::infinity();
  size_t best_i = 0;
  double best_height = 0.0;
  for (size_t i = 0; i < h; ++i) {
    const Point& a = hull[i];
    Point u = hull[(i + 1) % h] - a;
    if (i == 0) j = 1;
    while (det(u, hull[(j + 1) % h] - a) > det(u, hull[j] - a)) j = (j + 1) % h;
    double height = det(u, hull[j] - a);
    double nq = lp_norm(Point{-u[1], u[0]}.coords(), q);
    double w = 0.5 * height / nq;
    if (w < best) {
      best = w;
      best_i = i;
      best_height = height;
    }
  }
  const Point& a = hull[best_i];
  Point u = hull[(best_i + 1) % h] - a;
  Point n{-u[1], u[0]};
  Point base = a + (0.5 * best_height / dot(u, u)) * n;
  out.width = best;
  out.line = make_line(space, base, u);
  return out;
}

double deviation_for(const NormedSpace& space, const std::vector<Point>& pts, const Line& line) {
  return max_deviation(space, pts, line);
}

// Upper bound in d >= 3: directions from pairs of well-spread points, then
// compass search over base and direction.
LineFit fit_general(const NormedSpace& space, const std::vector<Point>& pts) {
  LineFit out;
  out.upper_bound_only = true;
  if (pts.empty()) return out;
  std::vector<Point> spread{pts[0]};
  std::vector<double> dmin(pts.size(), std::numeric_limits<double>::infinity());
  while (spread.size() < std::min<size_t>(12, pts.size())) {
    size_t far = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
      dmin[i] = std::min(dmin[i], space.distance(pts[i], spread.back()));
      if (dmin[i] > dmin[far]) far = i;
    }
    if (dmin[far] == 0.0) break;
    spread.push_back(pts[far]);
  }
  if (spread.size() == 1) {
    Point e(space.dim);
    e[0] = 1.0;
    out.line = make_line(space, pts[0], e);
    return out;
  }
  double best = std::numeric_limits<double>::infinity();
  Line best_line;
  for (size_t i = 0; i < spread.size(); ++i)
    for (size_t j = i + 1; j < spread.size(); ++j) {
      Line L = make_line(space, lerp(spread[i], spread[j], 0.5), spread[j] - spread[i]);
      double w = deviation_for(space, pts, L);
      if (w < best) {
        best = w;
        best_line = L;
      }
    }
  double step = 0.25 * std::max(best, 1e-12);
  double scale = set_diameter(space, spread);
  while (step > 1e-10 * std::max(scale, 1e-300)) {
    bool improved = false;
    for (int c = 0; c < 2 * space.dim && !improved; ++c)
      for (int sgn : {-1, 1}) {
        Line L = best_line;
        if (c < space.dim)
          L.base[c] += sgn * step;
        else {
          Point d = L.dir;
          d[c - space.dim] += sgn * step / std::max(scale, 1e-300);
          if (space.norm(d) == 0.0) continue;
          L = make_line(space, L.base, d);
        }
        double w = deviation_for(space, pts, L);
        if (w < best) {
          best = w;
          best_line = L;
          improved = true;
          break;
        }
      }
    if (!improved) step *= 0.5;
  }
  out.width = best;
  out.line = best_line;
  return out;
}

}  // namespace

double max_deviation(const NormedSpace& space, const std::vector<Point>& pts, const Line& line) {
  double m = 0.0;
  if (space.dim == 2) {
    const Point& u = line.dir;
    double scale = space.dual_norm(Point{-u[1], u[0]});
    for (const auto& x : pts) m = std::max(m, std::abs(det(u, x - line.base)) / scale);
    return m;
  }
  for (const auto& x : pts) m = std::max(m, dist_to_line(space, x, line));
  return m;
}

LineFit minimax_line(const NormedSpace& space, const std::vector<Point>& pts) {
  for (const auto& x : pts)
    if (x.dim() != space.dim) throw InputError("dimension mismatch");
  if (space.dim == 1) {
    LineFit out;
    if (!pts.empty()) out.line = Line{pts[0], Point{1.0}};
    return out;
  }
  if (space.dim == 2) return fit_plane(space, pts);
  return fit_general(space, pts);
}

BetaResult beta_of_points(const NormedSpace& space, const std::vector<Point>& pts, double window_diam) {
  if (!(window_diam > 0.0) || std::isinf(window_diam)) throw PreconditionError("window diameter must be positive and finite");
  BetaResult r;
  r.window_diam = window_diam;
  if (pts.empty()) return r;
  LineFit fit = minimax_line(space, pts);
  r.best_line = fit.line;
  r.achieved_sup = fit.width;
  r.beta = std::clamp(fit.width / window_diam, 0.0, 1.0);
  r.upper_bound_only = fit.upper_bound_only;
  return r;
}

BetaResult beta_number(const NormedSpace& space, const std::vector<Point>& E, const RBall& window) {
  std::vector<Point> in;
  for (const auto& x : E)
    if (space.distance(x, window.center) <= window.radius) in.push_back(x);
  return beta_of_points(space, in, 2.0 * window.radius);
}

BetaResult beta_number(const NormedSpace& space, const std::vector<Point>& E, const Ball& window) {
  return beta_number(space, E, RBall{window.center, window.r()});
}

BetaResult beta_number(const NormedSpace& space, const std::vector<Point>& E, const BallUnion& window) {
  std::vector<Point> in;
  for (const auto& x : E)
    if (window.contains(space, x)) in.push_back(x);
  return beta_of_points(space, in, window.diam(space));
}

bool beta_monotone_check(const NormedSpace& space, const std::vector<Point>& E, const std::vector<Point>& F,
                         const RBall& R, const RBall& Q) {
  for (const auto& x : E)
    if (std::find(F.begin(), F.end(), x) == F.end()) throw PreconditionError("E is not a subset of F");
  if (space.distance(R.center, Q.center) + R.radius > Q.radius * (1.0 + REL_TOL))
    throw PreconditionError("R is not contained in Q");
  double bR = beta_number(space, E, R).beta;
  double bQ = beta_number(space, F, Q).beta;
  return bR <= (Q.radius / R.radius) * bQ + 2.0 * ABS_TOL;
}

std::vector<BetaResult> beta_map(const MultiresFamily& family, const std::vector<Point>& E) {
  const auto& space = family.hierarchy().space();
  std::vector<BetaResult> out;
  out.reserve(family.balls().size());
  for (const auto& q : family.balls()) out.push_back(beta_number(space, E, q));
  return out;
}

double jones_sum(const MultiresFamily& family, const std::vector<Point>& E, double p, double c1) {
  if (E.empty()) throw InputError("jones_sum needs a nonempty set");
  if (!(p >= 1.0)) throw InputError("jones_sum needs p >= 1");
  const auto& space = family.hierarchy().space();
  double dE = set_diameter(space, E);
  double sum = 0.0;
  for (const auto& q : family.balls()) {
    if (p == 1.0 && q.diam() > c1 * dE) continue;
    double b = beta_number(space, E, q).beta;
    if (b > 0.0) sum += std::pow(b, p) * q.diam();
  }
  return dE + sum;
}

}  // namespace jones
