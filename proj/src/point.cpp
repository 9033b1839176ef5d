#include "jones/point.hpp"

#include <sstream>

namespace jones {

NormedSpace NormedSpace::lp(int dim, double p) {
  if (dim < 1 || dim > Point::kMaxDim) throw InputError("dimension must be in [1, 8]");
  if (!(p >= 1.0)) throw InputError("l_p exponent must satisfy p >= 1");
  return NormedSpace{dim, p};
}

double NormedSpace::conjugate() const {
  if (is_infinite_p()) return 1.0;
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  return p / (p - 1.0);
}

double lp_norm(std::span<const double> x, double p) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  if (m == 0.0 || std::isinf(p)) return m;
  if (p == 1.0) {
    double s = 0.0;
    for (double v : x) s += std::abs(v);
    return s;
  }
  double s = 0.0;
  if (p == 2.0) {
    for (double v : x) s += (v / m) * (v / m);
    return m * std::sqrt(s);
  }
  for (double v : x) s += std::pow(std::abs(v) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double NormedSpace::norm(const Point& x) const {
  if (x.dim() != dim)
    throw InputError("dimension mismatch: point has " + std::to_string(x.dim()) + ", space has " +
                     std::to_string(dim));
  return lp_norm(x.coords(), p);
}

double NormedSpace::dual_norm(const Point& g) const {
  if (g.dim() != dim) throw InputError("dimension mismatch in dual_norm");
  return lp_norm(g.coords(), conjugate());
}

std::string NormedSpace::describe() const {
  std::ostringstream os;
  os << "l_";
  if (is_infinite_p())
    os << "inf";
  else
    os << p;
  os << "^" << dim;
  return os.str();
}

double diameter(const NormedSpace& space, std::span<const Point> pts) {
  double d = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, space.distance(pts[i], pts[j]));
  return d;
}

}  // namespace jones
