#pragma once

#include <optional>
#include <vector>

#include "jones/banach.hpp"
#include "jones/geometry.hpp"
#include "jones/net.hpp"

namespace jones {

/// Best line for a finite set under the minimax criterion.
struct LineFit {
  double width = 0.0;  // inf over lines of sup over points of dist(x, L)
  std::optional<Line> line;
  bool upper_bound_only = false;
};

/// In the plane the infimum is attained with the line parallel to a hull
/// edge, so the fit is exact for every l_p. For d >= 3 the result is a
/// heuristic upper bound (flagged).
LineFit minimax_line(const NormedSpace& space, const std::vector<Point>& pts);

/// sup over pts of dist(x, line).
double max_deviation(const NormedSpace& space, const std::vector<Point>& pts, const Line& line);

struct BetaResult {
  double beta = 0.0;
  std::optional<Line> best_line;
  double achieved_sup = 0.0;
  double window_diam = 0.0;
  bool upper_bound_only = false;
};

/// beta of a point set that already lies in the window.
BetaResult beta_of_points(const NormedSpace& space, const std::vector<Point>& pts, double window_diam);

/// beta_E(Q) for a closed ball window; diam Q is 2 * radius.
BetaResult beta_number(const NormedSpace& space, const std::vector<Point>& E, const Ball& window);
BetaResult beta_number(const NormedSpace& space, const std::vector<Point>& E, const RBall& window);

/// beta_E(W) for a union of balls; diam W is the exact union diameter.
BetaResult beta_number(const NormedSpace& space, const std::vector<Point>& E, const BallUnion& window);

/// Checks beta_E(R) <= (diam Q / diam R) beta_F(Q) + 2 ABS_TOL.
/// Throws PreconditionError unless E is a subset of F and R of Q.
bool beta_monotone_check(const NormedSpace& space, const std::vector<Point>& E, const std::vector<Point>& F,
                         const RBall& R, const RBall& Q);

/// diam E + sum over family balls of beta_E(Q)^p diam Q. For p = 1 only
/// balls with diam Q <= c1 * diam E contribute.
double jones_sum(const MultiresFamily& family, const std::vector<Point>& E, double p, double c1 = 1.0);

/// Per-ball beta values in family order.
std::vector<BetaResult> beta_map(const MultiresFamily& family, const std::vector<Point>& E);

}  // namespace jones
