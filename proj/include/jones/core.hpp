#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jones/curve.hpp"
#include "jones/geometry.hpp"
#include "jones/net.hpp"

namespace jones {

struct MemberBall {
  Point center;
  int level = 0;   // net level k + J j
  int index = 0;   // index within that level
  double radius = 0.0;
};

/// A (J,c)-core U_Q with its tree links and measure caches.
struct CoreNode {
  Ball ball;
  int J = 4;
  double c = 0.2;
  RBall q_star;
  std::vector<MemberBall> members;  // members[0] is Q_* itself
  int parent = -1;
  std::vector<int> children;
  std::optional<Fragment> fragment;
  double diam_h = 0.0;
  double ell_u = 0.0;
  double ell_r = 0.0;
  double s_q = 0.0;

  BallUnion region() const;
  double diam(const NormedSpace& space) const { return region().diam(space); }
};

/// Fixpoint accretion of the balls B(y, c 2^{-(k+Jj)}), y in X_{k+Jj}, j >= 1.
CoreNode build_core(const Ball& q, const NetHierarchy& h, int J, double c);

struct CoreLemmaReport {
  bool shape_ok = true;
  bool separation_ok = true;
  bool tree_ok = true;
  bool fine_shape_checked = false;  // 1.00001 bound applies only when J >= 19
  bool fine_shape_ok = true;
  std::vector<std::string> violations;
  bool ok() const { return shape_ok && separation_ok && tree_ok && fine_shape_ok; }
};

/// Lower bound on the gap between two unions of balls.
double region_gap(const NormedSpace& space, const BallUnion& a, const BallUnion& b);

/// Lemma checks on cores that share (J, c) and a level residue mod J.
CoreLemmaReport verify_core_lemma(const std::vector<CoreNode>& cores, const NormedSpace& space);

struct CoreForest {
  std::vector<CoreNode> nodes;
  std::vector<int> roots;
};

/// Parent is the finest core that strictly contains the node (by member ids).
CoreForest build_core_tree(const MultiresFamily& family, const std::vector<BallId>& selected, int J, double c);

/// True if every member ball of `inner` is a member of `outer`.
bool core_contains(const CoreNode& outer, const CoreNode& inner);

struct RemainderResult {
  BallUnion region;                 // U_Q; the remainder is U_Q minus the children
  std::vector<BallUnion> children;  // child cores removed from U_Q
  double ell_u = 0.0;
  double ell_r = 0.0;
};

/// l(R_Q) = l(Gamma cap U_Q) - sum of l(Gamma cap U_child).
RemainderResult remainder(const CoreForest& forest, int node, const Curve& c);

struct ChainBall {
  Point center;
  int level = 0;
  double radius = 0.0;
};

struct ChainReport {
  bool chain_ok = true;
  bool decay_ok = true;
  bool separation_ok = true;
  bool hypotheses_ok() const { return chain_ok && decay_ok && separation_ok; }
  std::string violated;  // "chain", "decay" or "separation"
  int min_index = -1;
  bool unique_min = true;
  bool containment_ok = false;
  double containment_radius = 0.0;
  double max_reach = 0.0;
};

/// Checks the ball-chain hypotheses and the union location conclusion.
ChainReport verify_ball_chain(const NormedSpace& space, const std::vector<ChainBall>& balls, double xi, double r0);

}  // namespace jones
