#include "jones/banach.hpp"

#include "jones/constants.hpp"

namespace jones {

namespace {

void require_dim(const NormedSpace& space, const Point& x) {
  if (x.dim() != space.dim) throw InputError("dimension mismatch");
}

void require_unit(const NormedSpace& space, const Line& line) {
  require_dim(space, line.base);
  double n = space.norm(line.dir);
  if (std::abs(n - 1.0) > REL_TOL) throw PreconditionError("line direction is not a unit vector");
}

double sgn(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

}  // namespace

Line make_line(const NormedSpace& space, const Point& base, const Point& v) {
  require_dim(space, base);
  double n = space.norm(v);
  if (n == 0.0) throw PreconditionError("line direction is zero");
  return Line{base, v * (1.0 / n)};
}

Point duality_map(const NormedSpace& space, const Point& x) {
  require_dim(space, x);
  if (!space.is_smooth()) throw InputError("duality map requires 1 < p < inf, got " + space.describe());
  Point g(space.dim);
  double n = space.norm(x);
  if (n == 0.0) return g;
  // J(x)_i = |x|^{2-p} |x_i|^{p-2} x_i, evaluated on x/|x| to stay in range.
  for (int i = 0; i < space.dim; ++i) {
    double u = x[i] / n;
    g[i] = n * sgn(u) * std::pow(std::abs(u), space.p - 1.0);
  }
  return g;
}

JProjection j_projection(const NormedSpace& space, const Line& line, double s_param) {
  require_unit(space, line);
  if (space.is_smooth()) return JProjection{line, duality_map(space, line.dir), 0.0};
  if (space.is_infinite_p()) throw InputError("J-projection is not available in l_inf");
  if (space.dim != 2) throw InputError("J-projection in l_1 is only available in the plane");
  if (std::abs(s_param) > 0.5) throw PreconditionError("l_1 projection parameter must satisfy |s| <= 1/2");
  const Point& u = line.dir;
  if (u[0] != 0.0 && u[1] != 0.0) {
    // Interior of a face of the unit sphere: the norming functional is unique.
    return JProjection{line, Point{sgn(u[0]), sgn(u[1])}, s_param};
  }
  // Adapted coordinates (along dir, along rot90(dir)); Pi(x, y) = (x - t y, 0).
  double t = s_param / (1.0 - std::abs(s_param));
  Point perp{-u[1], u[0]};
  return JProjection{line, u - t * perp, s_param};
}

JProjection norming_projection(const NormedSpace& space, const Line& line) {
  if (space.is_smooth() || (space.p == 1.0 && space.dim == 2)) return j_projection(space, line, 0.0);
  require_unit(space, line);
  const Point& u = line.dir;
  Point g(space.dim);
  if (space.is_infinite_p()) {
    int best = 0;
    for (int i = 1; i < space.dim; ++i)
      if (std::abs(u[i]) > std::abs(u[best])) best = i;
    g[best] = 1.0 / u[best];
  } else {
    for (int i = 0; i < space.dim; ++i) g[i] = sgn(u[i]);
  }
  return JProjection{line, g, 0.0};
}

Point project(const JProjection& proj, const Point& x) {
  if (x.dim() != proj.line.base.dim()) throw InputError("dimension mismatch");
  return proj.line.at(proj.coordinate(x));
}

double dist_to_line(const NormedSpace& space, const Point& x, const Line& line) {
  require_dim(space, x);
  double r = space.norm(x - line.base);
  if (r == 0.0) return 0.0;
  double bound = 4.0 * r + 1.0;
  auto f = [&](double t) { return space.norm(x - line.at(t)); };
  double t = golden_min(f, -bound, bound, LINE_TOL * 1e-4 * bound);
  return std::min(f(t), r);
}

double antislope(const NormedSpace& space, const Line& line, const JProjection& proj, double t0, double t1) {
  Point u = line.at(t0), v = line.at(t1);
  double den = space.norm(u - v);
  if (den == 0.0) throw PreconditionError("antislope needs two distinct points");
  return space.norm(project(proj, u) - project(proj, v)) / den;
}

int count_in_ball(const NormedSpace& space, std::span<const Point> V, const Point& x, double radius) {
  int n = 0;
  for (const auto& v : V)
    if (space.distance(v, x) <= radius) ++n;
  return n;
}

}  // namespace jones
