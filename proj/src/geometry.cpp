#include "jones/geometry.hpp"

#include "jones/banach.hpp"
#include "jones/constants.hpp"

namespace jones {

bool BallUnion::contains(const NormedSpace& space, const Point& x, double tol) const {
  for (const auto& b : balls)
    if (space.distance(b.center, x) <= b.radius + tol) return true;
  return false;
}

double BallUnion::diam(const NormedSpace& space) const {
  double d = 0.0;
  for (size_t i = 0; i < balls.size(); ++i) {
    d = std::max(d, 2.0 * balls[i].radius);
    for (size_t j = i + 1; j < balls.size(); ++j)
      d = std::max(d, space.distance(balls[i].center, balls[j].center) + balls[i].radius + balls[j].radius);
  }
  return d;
}

std::optional<Interval> segment_ball_interval(const NormedSpace& space, const Point& a, const Point& b,
                                              const Point& center, double radius) {
  // Cheap rejection: every l_p norm dominates the sup norm.
  double lb = 0.0;
  for (int i = 0; i < space.dim; ++i) {
    double lo = std::min(a[i], b[i]) - center[i], hi = std::max(a[i], b[i]) - center[i];
    double d = lo > 0 ? lo : (hi < 0 ? -hi : 0.0);
    lb = std::max(lb, d);
  }
  if (lb > radius) return std::nullopt;
  auto phi = [&](double t) { return space.norm(lerp(a, b, t) - center); };
  double f0 = phi(0.0), f1 = phi(1.0);
  if (f0 <= radius && f1 <= radius) return Interval{0.0, 1.0};
  double tmin;
  if (f0 <= radius)
    tmin = 0.0;
  else if (f1 <= radius)
    tmin = 1.0;
  else {
    tmin = golden_min(phi, 0.0, 1.0, PARAM_TOL * 0.1);
    if (phi(tmin) > radius) return std::nullopt;
  }
  auto bisect = [&](double inside, double outside) {
    for (int it = 0; it < 200 && std::abs(outside - inside) > PARAM_TOL * 0.1; ++it) {
      double m = 0.5 * (inside + outside);
      if (phi(m) <= radius)
        inside = m;
      else
        outside = m;
    }
    return inside;
  };
  double t0 = f0 <= radius ? 0.0 : bisect(tmin, 0.0);
  double t1 = f1 <= radius ? 1.0 : bisect(tmin, 1.0);
  return Interval{t0, t1};
}

double segment_distance(const NormedSpace& space, const Point& a, const Point& b, const Point& x) {
  auto phi = [&](double t) { return space.norm(lerp(a, b, t) - x); };
  double t = golden_min(phi, 0.0, 1.0, PARAM_TOL * 0.1);
  return std::min({phi(t), phi(0.0), phi(1.0)});
}

std::vector<Interval> merge_intervals(std::vector<Interval> iv, double tol) {
  std::sort(iv.begin(), iv.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
  std::vector<Interval> out;
  for (const auto& x : iv) {
    if (!out.empty() && x.a <= out.back().b + tol)
      out.back().b = std::max(out.back().b, x.b);
    else
      out.push_back(x);
  }
  return out;
}

namespace {
double cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}
}  // namespace

std::vector<Point> convex_hull_2d(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) {
    return p[0] < q[0] || (p[0] == q[0] && p[1] < q[1]);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::pair<size_t, size_t> diameter_pair(const NormedSpace& space, const std::vector<Point>& pts) {
  std::pair<size_t, size_t> best{0, 0};
  double d = -1.0;
  std::vector<size_t> cand(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) cand[i] = i;
  if (space.dim == 2 && pts.size() > 3) {
    auto hull = convex_hull_2d(pts);
    cand.clear();
    for (const auto& h : hull)
      for (size_t i = 0; i < pts.size(); ++i)
        if (pts[i] == h) {
          cand.push_back(i);
          break;
        }
  }
  for (size_t i = 0; i < cand.size(); ++i)
    for (size_t j = i; j < cand.size(); ++j) {
      double dd = space.distance(pts[cand[i]], pts[cand[j]]);
      if (dd > d) {
        d = dd;
        best = {std::min(cand[i], cand[j]), std::max(cand[i], cand[j])};
      }
    }
  return best;
}

double set_diameter(const NormedSpace& space, const std::vector<Point>& pts) {
  if (pts.size() < 2) return 0.0;
  if (space.dim == 2 && pts.size() > 3) return diameter(space, convex_hull_2d(pts));
  return diameter(space, pts);
}

}  // namespace jones
