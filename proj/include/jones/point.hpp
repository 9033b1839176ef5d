#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jones {

/// Raised for malformed user input (bad dimensions, unknown names, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's precondition does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A point of R^d with inline storage; d is at most kMaxDim.
class Point {
 public:
  static constexpr int kMaxDim = 8;

  Point() = default;
  explicit Point(int dim) : dim_(check_dim(dim)) {}
  Point(std::initializer_list<double> coords) : dim_(check_dim(static_cast<int>(coords.size()))) {
    std::copy(coords.begin(), coords.end(), c_.begin());
  }
  explicit Point(std::span<const double> coords) : dim_(check_dim(static_cast<int>(coords.size()))) {
    std::copy(coords.begin(), coords.end(), c_.begin());
  }

  int dim() const { return dim_; }
  double operator[](int i) const { return c_[i]; }
  double& operator[](int i) { return c_[i]; }
  std::span<const double> coords() const { return {c_.data(), static_cast<size_t>(dim_)}; }

  Point& operator+=(const Point& o) {
    for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Point& operator-=(const Point& o) {
    for (int i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Point& operator*=(double s) {
    for (int i = 0; i < dim_; ++i) c_[i] *= s;
    return *this;
  }
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator*(double s, Point a) { return a *= s; }
  friend Point operator-(Point a) { return a *= -1.0; }
  friend bool operator==(const Point& a, const Point& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }

 private:
  static int check_dim(int d) {
    if (d < 1 || d > kMaxDim) throw InputError("point dimension must be in [1, 8], got " + std::to_string(d));
    return d;
  }

  std::array<double, kMaxDim> c_{};
  int dim_ = 0;
};

inline double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

/// (1-t) a + t b
inline Point lerp(const Point& a, const Point& b, double t) {
  Point r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
  return r;
}

/// Finite-dimensional l_p space, 1 <= p <= infinity.
struct NormedSpace {
  int dim = 2;
  double p = 2.0;

  static NormedSpace lp(int dim, double p);
  static NormedSpace l2(int dim = 2) { return lp(dim, 2.0); }
  static NormedSpace l1(int dim = 2) { return lp(dim, 1.0); }
  static NormedSpace linf(int dim = 2) { return lp(dim, std::numeric_limits<double>::infinity()); }

  bool is_infinite_p() const { return std::isinf(p); }
  /// Conjugate exponent q with 1/p + 1/q = 1.
  double conjugate() const;
  /// Smooth spaces have a unique normalized duality mapping.
  bool is_smooth() const { return p > 1.0 && !is_infinite_p(); }

  /// |x| in l_p. Throws InputError on dimension mismatch.
  double norm(const Point& x) const;
  /// |g|_* in l_q for a functional represented by its coefficients.
  double dual_norm(const Point& g) const;
  double distance(const Point& a, const Point& b) const { return norm(a - b); }

  std::string describe() const;
  friend bool operator==(const NormedSpace&, const NormedSpace&) = default;
};

/// |x|_p for a raw coefficient vector; no dimension check.
double lp_norm(std::span<const double> x, double p);

/// Diameter of a finite point set (max pairwise distance).
double diameter(const NormedSpace& space, std::span<const Point> pts);

}  // namespace jones
