#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jones/point.hpp"

namespace jones {

/// m * 2^e. Products with powers of two stay exact in floating point.
struct Dyadic {
  double mantissa = 1.0;
  int exponent = 0;

  double value() const { return std::ldexp(mantissa, exponent); }
  static Dyadic pow2(int e) { return Dyadic{1.0, e}; }
};

/// Stable identifier of a ball: its level and index within that level's net.
struct BallId {
  int level = 0;
  int index = 0;

  friend auto operator<=>(const BallId&, const BallId&) = default;
  std::string str() const { return std::to_string(level) + ":" + std::to_string(index); }
};

struct Ball {
  Point center;
  int level = 0;
  Dyadic radius;
  BallId id;

  double r() const { return radius.value(); }
  double diam() const { return 2.0 * r(); }
};

/// Ball of given radius around a net point, without any family context.
Ball make_ball(const Point& center, int level, double inflation, int index = 0);

class NetHierarchy {
 public:
  NetHierarchy() = default;
  NetHierarchy(NormedSpace space, int k_min, int k_max, std::map<int, std::vector<Point>> levels,
               std::map<int, bool> partial = {});

  const NormedSpace& space() const { return space_; }
  int k_min() const { return k_min_; }
  int k_max() const { return k_max_; }
  bool has_level(int k) const { return levels_.count(k) > 0; }
  const std::vector<Point>& level(int k) const;
  /// Levels flagged non-maximal (partial multiresolution family).
  bool is_partial(int k) const;
  size_t total_points() const;

  /// Index of a point at level k, or -1.
  int index_of(int k, const Point& x) const;

 private:
  NormedSpace space_;
  int k_min_ = 0;
  int k_max_ = -1;
  std::map<int, std::vector<Point>> levels_;
  std::map<int, bool> partial_;
};

/// Greedy nested maximal 2^{-k} nets, coarse to fine, in sample order.
NetHierarchy build_nets(const std::vector<Point>& samples, int k_min, int k_max, const NormedSpace& space);

struct NetCheck {
  bool separated = true;
  bool maximal = true;
  bool nested = true;
  std::string detail;
  bool ok() const { return separated && maximal && nested; }
};

/// Checks separation, maximality (skipped on partial levels) and nesting.
NetCheck verify_nets(const NetHierarchy& h, const std::vector<Point>& samples);

class MultiresFamily {
 public:
  MultiresFamily(NetHierarchy h, double inflation);

  const NetHierarchy& hierarchy() const { return h_; }
  double inflation() const { return inflation_; }
  const std::vector<Ball>& balls() const { return balls_; }
  const Ball& ball(BallId id) const;

 private:
  NetHierarchy h_;
  double inflation_;
  std::vector<Ball> balls_;
  std::map<BallId, size_t> by_id_;
};

MultiresFamily make_family(NetHierarchy h, double inflation);

/// The concentric ball of radius (1/3) 2^{-level}.
Ball net_ball(const Ball& q);

/// Default finest level: 2^{-k_max} is about half the minimum sample spacing.
int default_k_max(double min_spacing);
/// Default coarsest level: 2^{-k_min} is at least diam E.
int default_k_min(double diam);

}  // namespace jones
