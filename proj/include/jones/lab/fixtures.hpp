#pragma once

#include <random>
#include <string>
#include <vector>

#include "jones/core.hpp"
#include "jones/curve.hpp"
#include "jones/net.hpp"

namespace jones::lab {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
/// Random vector of unit norm in the given space.
Point random_unit(Rng& rng, const NormedSpace& space);
std::vector<Point> random_cloud(Rng& rng, const NormedSpace& space, int n, double scale);

/// A chain satisfying the chain, decay and separation hypotheses, with a
/// single level-0 ball.
std::vector<ChainBall> random_chain(Rng& rng, const NormedSpace& space, double xi, double r0, int n, int levels);

/// A chain that breaks exactly one hypothesis: kind is chain, decay or separation.
std::vector<ChainBall> broken_chain(Rng& rng, const NormedSpace& space, double xi, double r0, const std::string& kind);

/// delta-separated points within alpha delta of a line (checked through
/// the J-projection), plus the projection used.
struct NearLine {
  std::vector<Point> V;
  JProjection proj;
  double delta = 1.0;
  double alpha = 0.0;
};
NearLine near_collinear(Rng& rng, const NormedSpace& space, int n, double alpha);

/// Nets over curve samples with levels k_min..k_max.
NetHierarchy curve_nets(const Curve& c, int k_min, int k_max, double spacing = 0.0);

/// Balls of a hierarchy at levels congruent to residue mod J, within distance
/// `reach` of `near` (all balls when reach < 0).
std::vector<BallId> balls_at_residue(const NetHierarchy& h, int J, int residue, const Point& near, double reach);

}  // namespace jones::lab
