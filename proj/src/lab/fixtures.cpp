#include "jones/lab/fixtures.hpp"

#include "jones/lab/generators.hpp"

namespace jones::lab {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Point random_unit(Rng& rng, const NormedSpace& space) {
  for (;;) {
    Point v(space.dim);
    for (int i = 0; i < space.dim; ++i) v[i] = uniform(rng, -1.0, 1.0);
    double n = space.norm(v);
    if (n > 1e-3) return v * (1.0 / n);
  }
}

std::vector<Point> random_cloud(Rng& rng, const NormedSpace& space, int n, double scale) {
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) {
    Point v(space.dim);
    for (int d = 0; d < space.dim; ++d) v[d] = uniform(rng, -scale, scale);
    out.push_back(v);
  }
  return out;
}

namespace {

bool separated_ok(const NormedSpace& space, const std::vector<ChainBall>& balls, const ChainBall& b, double xi,
                  double r0) {
  for (const auto& o : balls) {
    if (o.level != b.level) continue;
    double gap = space.distance(o.center, b.center) - o.radius - b.radius;
    if (gap < 3.0 * std::pow(xi, -b.level) * r0 * 1.001) return false;
  }
  return true;
}

}  // namespace

std::vector<ChainBall> random_chain(Rng& rng, const NormedSpace& space, double xi, double r0, int n, int levels) {
  std::vector<ChainBall> balls{{Point(space.dim), 0, r0 * uniform(rng, 0.5, 1.0)}};
  int guard = 0;
  while (static_cast<int>(balls.size()) < n && guard++ < 100 * n) {
    int k = 1 + static_cast<int>(uniform(rng, 0.0, levels - 1e-9));
    double r = std::pow(xi, -k) * r0 * uniform(rng, 0.5, 1.0);
    const auto& host = balls[static_cast<size_t>(uniform(rng, 0.0, balls.size() - 1e-9))];
    double d = uniform(rng, 0.0, 0.999) * (host.radius + r);
    ChainBall b{host.center + random_unit(rng, space) * d, k, r};
    if (separated_ok(space, balls, b, xi, r0)) balls.push_back(b);
  }
  return balls;
}

std::vector<ChainBall> broken_chain(Rng& rng, const NormedSpace& space, double xi, double r0, const std::string& kind) {
  auto balls = random_chain(rng, space, xi, r0, 6, 2);
  if (kind == "chain") {
    Point far(space.dim);
    far[0] = 10.0 * r0;
    balls.push_back({far, 3, std::pow(xi, -3) * r0});
  } else if (kind == "decay") {
    double r = 1.5 * std::pow(xi, -4) * r0;
    balls.push_back({balls[0].center + random_unit(rng, space) * (0.5 * balls[0].radius), 4, r});
  } else if (kind == "separation") {
    double r = std::pow(xi, -5) * r0;
    Point c = balls[0].center + random_unit(rng, space) * (0.5 * balls[0].radius);
    Point shift(space.dim);
    shift[0] = r;
    balls.push_back({c, 5, r});
    balls.push_back({c + shift, 5, r});
  } else {
    throw InputError("unknown chain violation " + kind);
  }
  return balls;
}

NearLine near_collinear(Rng& rng, const NormedSpace& space, int n, double alpha) {
  NearLine out;
  out.alpha = alpha;
  out.delta = 1.0;
  Line L = make_line(space, random_cloud(rng, space, 1, 1.0)[0], random_unit(rng, space));
  out.proj = j_projection(space, L, 0.0);
  double t = 0.0;
  for (int guard = 0; static_cast<int>(out.V.size()) < n && guard < 50 * n; ++guard) {
    double step = out.delta * uniform(rng, 1.0, 2.5);
    Point v = L.at(t + step) + random_unit(rng, space) * (uniform(rng, 0.0, 1.0) * alpha * out.delta);
    if (space.distance(v, project(out.proj, v)) > alpha * out.delta) continue;
    bool ok = true;
    for (const auto& w : out.V)
      if (space.distance(v, w) < out.delta) ok = false;
    if (!ok) continue;
    out.V.push_back(v);
    t += step;
  }
  return out;
}

NetHierarchy curve_nets(const Curve& c, int k_min, int k_max, double spacing) {
  return build_nets(sample_curve(c, spacing), k_min, k_max, c.space());
}

std::vector<BallId> balls_at_residue(const NetHierarchy& h, int J, int residue, const Point& near, double reach) {
  std::vector<BallId> out;
  for (int k = h.k_min(); k <= h.k_max(); ++k) {
    if (((k % J) + J) % J != residue) continue;
    const auto& X = h.level(k);
    for (size_t i = 0; i < X.size(); ++i)
      if (reach < 0.0 || h.space().distance(X[i], near) <= reach) out.push_back(BallId{k, static_cast<int>(i)});
  }
  return out;
}

}  // namespace jones::lab
