#pragma once

#include <map>
#include <string>
#include <vector>

#include "jones/core.hpp"
#include "jones/curve.hpp"

namespace jones {

struct WeightNode {
  std::string id;
  double diam_h = 0.0;
  double ell_u = 0.0;  // l(Gamma cap U_Q)
  double ell_r = 0.0;  // l(Gamma cap R_Q)
  double s_q = 0.0;
  int parent = -1;
  std::vector<int> children;
};

/// Scaffold of the martingale: node 0 is the root P.
struct WeightTree {
  std::vector<WeightNode> nodes;

  int depth(int i) const;
};

/// s_Q = 101 l(R_Q) + sum of diam H over children. Throws if the children
/// are not resolved; `bound_ok` reports s_Q <= 101 l(U_Q).
double s_value(const WeightTree& t, int node, bool* bound_ok = nullptr);

/// Fills s_Q for every node.
void resolve_s(WeightTree& t);

/// Builds the scaffold for the subtree of a core forest rooted at `root`.
/// Nodes need diam_h, ell_u and ell_r set.
WeightTree weight_tree(const CoreForest& forest, int root);

/// Piecewise-constant cell of w_P: the remainder of an inner node or a whole leaf core.
struct WeightCell {
  int node = 0;
  bool leaf = false;
  double value = 0.0;
  double measure = 0.0;
};

struct Weights {
  std::vector<double> mass;     // integral of Y over U_Q when Q is refined
  std::vector<double> density;  // mass / l(U_Q)
  std::vector<WeightCell> cells;
  std::vector<double> level_integrals;  // integral of Y_k, k = 0..depth
  double max_y = 0.0;                   // sup over k and x of Y_k
  std::vector<double> level_max;        // sup of Y_k

  double integral() const;
  /// Value on the deepest cell of node i (remainder for inner nodes).
  double cell_value(int node) const;
};

Weights build_weights(const WeightTree& t);

struct ConservationReport {
  bool ok = true;
  bool y0_ok = true;
  double worst = 0.0;  // max_k |int Y_{k+1} - int Y_k| / int Y_0
};

ConservationReport verify_conservation(const WeightTree& t, const Weights& w);

/// Product formula for the density on node `node` from the root chain.
double chain_density(const WeightTree& t, int node);

/// Evaluates w at a point given the node containing it at the deepest level
/// (-1 if outside the root core).
double weight_at(const WeightTree& t, const Weights& w, int deepest_node);

struct BoundsReport {
  bool y_ok = true;       // Y_k <= 101
  bool branch_ok = true;  // w <= 101 q^depth
  bool stack_ok = true;   // sum_Q w_Q(x) <= 101 / (1 - q)
  bool mass_ok = true;    // integral of w_Q = diam H_Q
  double max_y = 0.0;
  double max_stack = 0.0;
  double stack_bound = 0.0;
  double worst_mass_err = 0.0;
  bool ok() const { return y_ok && branch_ok && stack_ok && mass_ok; }
};

/// Bounds over a core forest; every node carries its own stacked weight.
/// `points` are curve samples for the overlap sum.
BoundsReport verify_bounds(const CoreForest& forest, const NormedSpace& space, const std::vector<Point>& points,
                           double q);

struct CaseEntry {
  std::string id;
  double ratio = 0.0;
  std::string tag;  // large_remainder | many_nonN2 | few_nonN2
  double bound = 0.0;
  bool pass = false;
};

struct CaseReport {
  std::vector<CaseEntry> nodes;
  double max_ratio = 0.0;
  bool all_pass = true;
  bool q_ok = true;  // max_ratio <= q
};

/// Case taxonomy per node. child_types maps a forest node index to its
/// classification relative to its parent's efficient subarc.
CaseReport q_hypothesis_scan(const CoreForest& forest, const NormedSpace& space,
                             const std::map<int, CoreType>& child_types, double q = 0.999);

inline constexpr double kLargeRemainderBound = 100.0 / 101.0;
inline constexpr double kManyNonN2Bound = 0.999;
inline constexpr double kFewNonN2Bound = 0.9963;

}  // namespace jones
