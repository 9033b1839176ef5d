#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jones/banach.hpp"
#include "jones/beta.hpp"
#include "jones/geometry.hpp"
#include "jones/net.hpp"

namespace jones {

/// Polyline with constant-speed parameterization f : [0,1] -> R^d.
class Curve {
 public:
  Curve(NormedSpace space, std::vector<Point> vertices, bool closed = false);

  const NormedSpace& space() const { return space_; }
  bool closed() const { return closed_; }
  /// Vertices as given (a closed curve does not repeat the first one).
  const std::vector<Point>& vertices() const { return given_; }
  /// Path vertices: for closed curves the first vertex is appended.
  const std::vector<Point>& path() const { return path_; }
  size_t num_segments() const { return path_.size() - 1; }
  double length() const { return cum_.back(); }
  /// Parameter of path vertex i.
  double param(size_t i) const { return params_[i]; }
  Point at(double t) const;
  /// Segment containing t (the left one at a shared vertex).
  size_t segment_of(double t) const;
  /// False if two non-adjacent segments meet (planar curves only; true otherwise).
  bool injective() const { return injective_; }

 private:
  NormedSpace space_;
  std::vector<Point> given_;
  std::vector<Point> path_;
  std::vector<double> cum_;
  std::vector<double> params_;
  bool closed_;
  bool injective_ = true;
};

/// A point of the curve together with its parameter.
struct CurvePoint {
  double t;
  Point x;
};

/// f(a), the path vertices strictly inside (a, b), and f(b).
std::vector<CurvePoint> image_points(const Curve& c, const Interval& iv);
std::vector<Point> image_vertices(const Curve& c, const std::vector<Interval>& ivs);

/// Merged parameter set f^{-1}(region), up to PARAM_TOL.
std::vector<Interval> preimage(const Curve& c, const BallUnion& region);
std::vector<Interval> preimage(const Curve& c, const RBall& ball);

/// Polyline length (an upper bound for H^1 when f is not injective).
double curve_length(const Curve& c);

/// l(Gamma cap region), measured on the parameter side.
double restricted_measure(const Curve& c, const BallUnion& region);

/// Intersection of each interval with each member of `with`.
std::vector<Interval> intersect(const std::vector<Interval>& a, const std::vector<Interval>& b);

double min_distance(const Curve& c, const Interval& iv, const Point& x);
double max_distance(const Curve& c, const Interval& iv, const Point& x);

/// Points of Gamma cap ball suffice for beta: convex hull extremes are clipped endpoints.
std::vector<Point> curve_in_ball(const Curve& c, const RBall& ball);

/// beta_Gamma(Q) for a closed ball window.
BetaResult curve_beta(const Curve& c, const RBall& window);

struct ArcRef {
  Interval interval;
  double diam = 0.0;
  double a() const { return interval.a; }
  double b() const { return interval.b; }
};

double arc_diam(const Curve& c, const Interval& iv);

/// beta(tau) of an arc relative to its own image; 0 for degenerate arcs.
double arc_beta(const Curve& c, const Interval& iv);

/// Lambda(lambda Q): components of f^{-1}(Gamma cap 2 lambda Q) whose image meets lambda Q.
std::vector<ArcRef> lambda_arcs(const Curve& c, const Ball& q, double lambda, bool any_lambda = false);

struct ArcClassification {
  double lambda = 1.0;
  std::vector<ArcRef> arcs;
  std::vector<double> betas;
  std::vector<bool> flat;
  std::vector<bool> star_flat;
  double beta_gamma = 0.0;   // beta_Gamma(Q)
  double beta_lambda = 0.0;  // beta_{Lambda(lambda Q)}(2 lambda Q)
  double beta_star = 0.0;    // beta_{S*(lambda Q)}(2 lambda Q)

  size_t n_flat() const;
  size_t n_star() const;
  size_t n_dominant() const { return arcs.size() - n_flat(); }
  bool dominant(size_t i) const { return !flat[i]; }
};

ArcClassification classify(const Curve& c, const Ball& q, double lambda, double eps2);

struct BBallReport {
  bool is_B = false;
  bool clause_i = false;
  bool clause_ii = false;
  bool clause_iii = false;
  bool b0_excluded = false;
  std::string failed;  // first failing clause, empty when is_B
  ArcClassification cls;
};

BBallReport is_B_ball(const Curve& c, const Ball& q, double lambda, double eps1, double eps2);

/// Raised when no fragment qualifies (the ball was not a valid B ball).
class FragmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the efficient-subarc sweep finds no traversal.
class FlatnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Fragment {
  std::vector<Interval> pieces;
  double diam = 0.0;
  ArcRef source_arc;
  double diam_q_star = 0.0;
  double diam_u = 0.0;
  double upper_factor = 1.0;
  bool lower_ok = false;  // diam H >= 0.5 diam Q_*
  bool upper_ok = false;  // diam H <= upper_factor diam Q_*
  bool u_ok = false;      // diam H >= 0.49999 diam U
};

/// Upper bound factor on diam U / diam Q_* for a J-core.
double core_shape_factor(int J);

/// H_Q: maximal-diameter fragment Image(tau) cap U over tau in S*(lambda Q)
/// meeting (1/4) Q_*; ties go to the smallest start parameter.
Fragment maximal_fragment(const Curve& c, const Ball& q, const BallUnion& core, const RBall& q_star, double lambda,
                          double eps2, int J);

struct SubarcResult {
  ArcRef arc;
  JProjection proj;
  double diam_h = 0.0;
  double efficiency = 0.0;   // diam G / diam H
  double endpoint_gap = 0.0; // |f(a_T) - f(b_T)|
  bool in_q_star = false;    // G in 0.99999 Q_*
  bool meets_quarter = false;  // G meets 0.25007 Q_*
  bool h_meets_quarter = false;
  bool central_flat = false;
};

/// G_Q by a projection sweep across H_Q with 0.00003 diam margins.
SubarcResult efficient_subarc(const Curve& c, const Fragment& h, const RBall& q_star);

enum class Side { Inside, Plus, Minus };
std::string to_string(Side s);

/// Shadow interval of a union of balls on the projection line.
Interval shadow(const JProjection& proj, const BallUnion& W);
Side cylinder_membership(const JProjection& proj, const BallUnion& W, const Point& x);

enum class CoreType { NotAdjacent, N1, N2_1, N2_2, Unnecessary };
std::string to_string(CoreType t);
inline bool is_n2(CoreType t) { return t == CoreType::N2_1 || t == CoreType::N2_2; }

CoreType classify_core(const Curve& c, const ArcRef& parent_t, const JProjection& proj, const Ball& q_child,
                       const BallUnion& core, const RBall& q_star_child, double lambda, double eps2);

}  // namespace jones
