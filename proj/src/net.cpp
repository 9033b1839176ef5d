#include "jones/net.hpp"

#include <unordered_map>

namespace jones {

Ball make_ball(const Point& center, int level, double inflation, int index) {
  return Ball{center, level, Dyadic{inflation, -level}, BallId{level, index}};
}

NetHierarchy::NetHierarchy(NormedSpace space, int k_min, int k_max, std::map<int, std::vector<Point>> levels,
                           std::map<int, bool> partial)
    : space_(space), k_min_(k_min), k_max_(k_max), levels_(std::move(levels)), partial_(std::move(partial)) {
  if (k_min > k_max) throw InputError("k_min must not exceed k_max");
  for (int k = k_min; k <= k_max; ++k) levels_[k];
}

const std::vector<Point>& NetHierarchy::level(int k) const {
  auto it = levels_.find(k);
  if (it == levels_.end()) throw InputError("net level " + std::to_string(k) + " not present");
  return it->second;
}

bool NetHierarchy::is_partial(int k) const {
  auto it = partial_.find(k);
  return it != partial_.end() && it->second;
}

size_t NetHierarchy::total_points() const {
  size_t n = 0;
  for (const auto& [k, pts] : levels_) n += pts.size();
  return n;
}

int NetHierarchy::index_of(int k, const Point& x) const {
  const auto& pts = level(k);
  for (size_t i = 0; i < pts.size(); ++i)
    if (pts[i] == x) return static_cast<int>(i);
  return -1;
}

namespace {

// Bucket grid on the first one or two coordinates. Any l_p distance dominates
// each coordinate difference, so only neighbouring cells need checking.
class Grid {
 public:
  explicit Grid(double cell, int dim) : cell_(cell), dims_(std::min(dim, 2)) {}

  void insert(const Point& p, int idx) { cells_[key(cell_of(p, 0), cell_of(p, 1))].push_back(idx); }

  template <class F>
  bool any_near(const Point& p, F&& pred) const {
    int64_t cx = cell_of(p, 0), cy = cell_of(p, 1);
    int64_t ry = dims_ > 1 ? 1 : 0;
    for (int64_t dx = -1; dx <= 1; ++dx)
      for (int64_t dy = -ry; dy <= ry; ++dy) {
        auto it = cells_.find(key(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (int idx : it->second)
          if (pred(idx)) return true;
      }
    return false;
  }

 private:
  int64_t cell_of(const Point& p, int i) const {
    if (i >= dims_) return 0;
    return static_cast<int64_t>(std::floor(p[i] / cell_));
  }
  static uint64_t key(int64_t a, int64_t b) {
    return (static_cast<uint64_t>(a) * 0x9E3779B97F4A7C15ULL) ^ static_cast<uint64_t>(b);
  }

  double cell_;
  int dims_;
  std::unordered_map<uint64_t, std::vector<int>> cells_;
};

}  // namespace

NetHierarchy build_nets(const std::vector<Point>& samples, int k_min, int k_max, const NormedSpace& space) {
  if (samples.empty()) throw InputError("cannot build nets over an empty sample set");
  if (k_min > k_max) throw InputError("k_min must not exceed k_max");
  for (const auto& s : samples)
    if (s.dim() != space.dim) throw InputError("sample dimension does not match the space");
  std::map<int, std::vector<Point>> levels;
  std::vector<Point> current;
  for (int k = k_min; k <= k_max; ++k) {
    double sep = std::ldexp(1.0, -k);
    Grid grid(sep, space.dim);
    std::vector<Point> next = current;
    for (size_t i = 0; i < next.size(); ++i) grid.insert(next[i], static_cast<int>(i));
    for (const auto& s : samples) {
      bool covered = grid.any_near(s, [&](int idx) { return space.distance(next[idx], s) < sep; });
      if (!covered) {
        grid.insert(s, static_cast<int>(next.size()));
        next.push_back(s);
      }
    }
    levels[k] = next;
    current = std::move(next);
  }
  return NetHierarchy(space, k_min, k_max, std::move(levels));
}

NetCheck verify_nets(const NetHierarchy& h, const std::vector<Point>& samples) {
  NetCheck out;
  const auto& space = h.space();
  for (int k = h.k_min(); k <= h.k_max(); ++k) {
    const auto& X = h.level(k);
    double sep = std::ldexp(1.0, -k);
    for (size_t i = 0; i < X.size(); ++i)
      for (size_t j = i + 1; j < X.size(); ++j)
        if (space.distance(X[i], X[j]) < sep) {
          out.separated = false;
          out.detail = "separation fails at level " + std::to_string(k);
        }
    if (!h.is_partial(k)) {
      for (const auto& s : samples) {
        bool near = false;
        for (const auto& x : X)
          if (space.distance(s, x) <= sep) {
            near = true;
            break;
          }
        if (!near) {
          out.maximal = false;
          out.detail = "maximality fails at level " + std::to_string(k);
          break;
        }
      }
    }
    if (k < h.k_max()) {
      const auto& Y = h.level(k + 1);
      for (const auto& x : X)
        if (std::find(Y.begin(), Y.end(), x) == Y.end()) {
          out.nested = false;
          out.detail = "nesting fails between levels " + std::to_string(k) + " and " + std::to_string(k + 1);
          break;
        }
    }
  }
  return out;
}

MultiresFamily::MultiresFamily(NetHierarchy h, double inflation) : h_(std::move(h)), inflation_(inflation) {
  if (!(inflation > 1.0)) throw InputError("inflation must exceed 1");
  for (int k = h_.k_min(); k <= h_.k_max(); ++k) {
    const auto& X = h_.level(k);
    for (size_t i = 0; i < X.size(); ++i) {
      by_id_[BallId{k, static_cast<int>(i)}] = balls_.size();
      balls_.push_back(make_ball(X[i], k, inflation, static_cast<int>(i)));
    }
  }
}

const Ball& MultiresFamily::ball(BallId id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) throw InputError("unknown ball id " + id.str());
  return balls_[it->second];
}

MultiresFamily make_family(NetHierarchy h, double inflation) { return MultiresFamily(std::move(h), inflation); }

Ball net_ball(const Ball& q) {
  return Ball{q.center, q.level, Dyadic{1.0 / 3.0, -q.level}, q.id};
}

int default_k_max(double min_spacing) {
  if (!(min_spacing > 0.0)) throw InputError("minimum sample spacing must be positive");
  return static_cast<int>(std::ceil(std::log2(2.0 / min_spacing)));
}

int default_k_min(double diam) {
  if (!(diam > 0.0)) return 0;
  return -static_cast<int>(std::ceil(std::log2(diam)));
}

}  // namespace jones
