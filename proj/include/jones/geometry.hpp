#pragma once

#include <optional>
#include <vector>

#include "jones/point.hpp"

namespace jones {

/// Closed ball with a plain real radius.
struct RBall {
  Point center;
  double radius = 0.0;
};

/// A finite union of closed balls.
struct BallUnion {
  std::vector<RBall> balls;

  bool empty() const { return balls.empty(); }
  bool contains(const NormedSpace& space, const Point& x, double tol = 0.0) const;
  /// Exact diameter of the union: max over pairs of |y - z| + r_y + r_z.
  double diam(const NormedSpace& space) const;
};

/// Closed interval [a, b].
struct Interval {
  double a = 0.0;
  double b = 0.0;
  double length() const { return b - a; }
};

/// Parameters t in [0,1] with |a + t(b-a) - center| <= radius. The distance
/// is convex in t, so this is one interval, located by bisection.
std::optional<Interval> segment_ball_interval(const NormedSpace& space, const Point& a, const Point& b,
                                              const Point& center, double radius);

/// min over t in [0,1] of |a + t(b-a) - x|.
double segment_distance(const NormedSpace& space, const Point& a, const Point& b, const Point& x);

/// Sorts and merges intervals closer than tol.
std::vector<Interval> merge_intervals(std::vector<Interval> iv, double tol);

/// Convex hull in the plane, counter-clockwise, without collinear vertices.
std::vector<Point> convex_hull_2d(std::vector<Point> pts);

/// Max pairwise distance; in the plane only hull vertices are compared.
double set_diameter(const NormedSpace& space, const std::vector<Point>& pts);

/// Indices (i, j) of a pair realizing the diameter (i == j for < 2 points).
std::pair<size_t, size_t> diameter_pair(const NormedSpace& space, const std::vector<Point>& pts);

}  // namespace jones
