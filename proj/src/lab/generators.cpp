#include "jones/lab/generators.hpp"

#include <numbers>
#include <random>

namespace jones::lab {

namespace {

Point embed(const NormedSpace& space, double x, double y) {
  Point p(space.dim);
  p[0] = x;
  if (space.dim > 1) p[1] = y;
  return p;
}

double get(const Params& p, const std::string& k, double dflt) {
  auto it = p.find(k);
  return it == p.end() ? dflt : it->second;
}

void need_plane(const NormedSpace& space, const std::string& name) {
  if (space.dim < 2) throw InputError(name + " needs dimension >= 2");
}

}  // namespace

std::vector<std::string> generator_names() {
  return {"segment", "zigzag", "koch", "circle", "spiral", "plus_sign", "radial_spoke", "t_junction", "random_walk"};
}

Curve segment(const NormedSpace& space, double length) {
  if (!(length > 0.0)) throw InputError("segment length must be positive");
  return Curve(space, {embed(space, 0, 0), embed(space, length, 0)});
}

Curve zigzag(const NormedSpace& space, int teeth, double height) {
  need_plane(space, "zigzag");
  if (teeth < 1) throw InputError("zigzag needs at least one tooth");
  std::vector<Point> v;
  for (int i = 0; i <= teeth; ++i) v.push_back(embed(space, static_cast<double>(i) / teeth, (i % 2) ? height : 0.0));
  return Curve(space, v);
}

Curve koch(const NormedSpace& space, int depth, double angle_deg) {
  need_plane(space, "koch");
  if (depth < 0 || depth > 10) throw InputError("koch depth must be in [0, 10]");
  if (!(angle_deg > 0.0 && angle_deg < 90.0)) throw InputError("koch angle must be in (0, 90) degrees");
  double th = angle_deg * std::numbers::pi / 180.0;
  double leg = 1.0 / (2.0 * (1.0 + std::cos(th)));
  std::vector<std::array<double, 2>> pts{{0.0, 0.0}, {1.0, 0.0}};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::array<double, 2>> next;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      auto a = pts[i], b = pts[i + 1];
      double vx = b[0] - a[0], vy = b[1] - a[1];
      std::array<double, 2> p1{a[0] + leg * vx, a[1] + leg * vy};
      std::array<double, 2> p3{b[0] - leg * vx, b[1] - leg * vy};
      double rx = std::cos(th) * vx - std::sin(th) * vy, ry = std::sin(th) * vx + std::cos(th) * vy;
      std::array<double, 2> p2{p1[0] + leg * rx, p1[1] + leg * ry};
      next.insert(next.end(), {a, p1, p2, p3});
    }
    next.push_back(pts.back());
    pts = std::move(next);
  }
  std::vector<Point> v;
  for (auto& p : pts) v.push_back(embed(space, p[0], p[1]));
  return Curve(space, v);
}

Curve circle(const NormedSpace& space, int n, double radius) {
  need_plane(space, "circle");
  if (n < 3) throw InputError("circle needs n >= 3");
  std::vector<Point> v;
  for (int i = 0; i < n; ++i) {
    double a = 2.0 * std::numbers::pi * i / n;
    v.push_back(embed(space, radius * std::cos(a), radius * std::sin(a)));
  }
  return Curve(space, v, true);
}

Curve spiral(const NormedSpace& space, double turns, int n) {
  need_plane(space, "spiral");
  if (!(turns > 0.0) || n < 2) throw InputError("spiral needs turns > 0 and n >= 2");
  std::vector<Point> v;
  for (int i = 0; i <= n; ++i) {
    double s = static_cast<double>(i) / n;
    double a = 2.0 * std::numbers::pi * turns * s;
    v.push_back(embed(space, s * std::cos(a), s * std::sin(a)));
  }
  return Curve(space, v);
}

Curve plus_sign(const NormedSpace& space) {
  need_plane(space, "plus_sign");
  return Curve(space, {embed(space, -1, 0), embed(space, 1, 0), embed(space, 0, 1), embed(space, 0, -1)});
}

Curve radial_spoke(const NormedSpace& space) { return Curve(space, {embed(space, 1, 0), embed(space, 0, 0)}); }

Curve t_junction(const NormedSpace& space, double delta) {
  need_plane(space, "t_junction");
  if (!(delta > 0.0 && delta < 1.0)) throw InputError("t_junction needs 0 < delta < 1");
  return Curve(space, {embed(space, -1, 0), embed(space, 1, 0), embed(space, 0, 1), embed(space, 0, delta)});
}

Curve random_walk(const NormedSpace& space, int n, uint64_t seed) {
  if (n < 1) throw InputError("random_walk needs n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Point> v{Point(space.dim)};
  for (int i = 0; i < n; ++i) {
    Point step(space.dim);
    for (int d = 0; d < space.dim; ++d) step[d] = 2.0 * unif(rng) - 1.0;
    double len = space.norm(step);
    if (len == 0.0) step[0] = len = 1.0;
    double target = (0.5 + 0.5 * unif(rng)) / n;
    v.push_back(v.back() + step * (target / len));
  }
  return Curve(space, v);
}

Curve generate(const std::string& name, const Params& p, const NormedSpace& space) {
  if (name == "segment") return segment(space, get(p, "length", 1.0));
  if (name == "zigzag") return zigzag(space, static_cast<int>(get(p, "teeth", 4)), get(p, "height", 0.25));
  if (name == "koch") return koch(space, static_cast<int>(get(p, "depth", 3)), get(p, "angle", 60.0));
  if (name == "circle") return circle(space, static_cast<int>(get(p, "n", 64)), get(p, "radius", 1.0));
  if (name == "spiral") return spiral(space, get(p, "turns", 2.0), static_cast<int>(get(p, "n", 256)));
  if (name == "plus_sign") return plus_sign(space);
  if (name == "radial_spoke") return radial_spoke(space);
  if (name == "t_junction") return t_junction(space, get(p, "delta", 1.0 / 64.0));
  if (name == "random_walk")
    return random_walk(space, static_cast<int>(get(p, "n", 32)), static_cast<uint64_t>(get(p, "seed", 1)));
  throw InputError("unknown generator '" + name + "'");
}

double default_spacing(const Curve& c) {
  double m = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < c.path().size(); ++i) m = std::min(m, c.space().distance(c.path()[i], c.path()[i + 1]));
  return std::min(m, set_diameter(c.space(), c.path()) / 64.0);
}

std::vector<Point> sample_curve(const Curve& c, double spacing) {
  if (spacing <= 0.0) spacing = default_spacing(c);
  std::vector<Point> out;
  const auto& P = c.path();
  size_t segs = c.num_segments();
  for (size_t i = 0; i < segs; ++i) {
    double len = c.space().distance(P[i], P[i + 1]);
    int pieces = std::max(1, static_cast<int>(std::ceil(len / spacing - 1e-9)));
    for (int j = 0; j < pieces; ++j) out.push_back(j == 0 ? P[i] : lerp(P[i], P[i + 1], static_cast<double>(j) / pieces));
  }
  if (!c.closed()) out.push_back(P.back());
  return out;
}

}  // namespace jones::lab
