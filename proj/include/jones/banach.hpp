#pragma once

#include <optional>

#include "jones/point.hpp"

namespace jones {

/// An affine line base + R*dir with dir of unit norm.
struct Line {
  Point base;
  Point dir;

  Point at(double t) const { return base + t * dir; }
};

/// Builds a line through base in direction v, normalizing v in the given space.
Line make_line(const NormedSpace& space, const Point& base, const Point& v);

/// Norm-one linear projection x -> base + <g, x - base> dir onto a line.
struct JProjection {
  Line line;
  Point functional;
  double s_param = 0.0;

  /// Signed coordinate of Pi(x) along the line, measured from line.base.
  double coordinate(const Point& x) const { return dot(functional, x - line.base); }
};

/// Normalized duality map for smooth l_p (1 < p < inf). J(0) = 0.
Point duality_map(const NormedSpace& space, const Point& x);

/// J-projection onto line. For l_1 in the plane, s_param selects the family
/// member (|s| <= 1/2); it is ignored elsewhere. Rejects l_inf and l_1 for d > 2.
JProjection j_projection(const NormedSpace& space, const Line& line, double s_param = 0.0);

/// Like j_projection but never rejects: for l_inf and l_1 (d > 2) it picks
/// a norming functional of dir with the smallest admissible support.
JProjection norming_projection(const NormedSpace& space, const Line& line);

Point project(const JProjection& proj, const Point& x);

/// min_t |x - (base + t dir)| by golden-section search on a convex objective.
double dist_to_line(const NormedSpace& space, const Point& x, const Line& line);

/// |Pi(u) - Pi(v)| / |u - v| for u = base + t0 dir, v = base + t1 dir.
double antislope(const NormedSpace& space, const Line& line, const JProjection& proj, double t0 = 0.0,
                 double t1 = 1.0);

/// Minimizes a convex function on [lo, hi] by golden-section search.
template <class F>
double golden_min(F&& f, double lo, double hi, double tol) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? c : d;
}

/// Number of points of V inside the closed ball B(x, radius).
int count_in_ball(const NormedSpace& space, std::span<const Point> V, const Point& x, double radius);

}  // namespace jones
