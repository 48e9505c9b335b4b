#ifndef BOMBSQUAD_GEOMETRY_HPP_
#define BOMBSQUAD_GEOMETRY_HPP_

#include <cmath>

namespace bombsquad {

/// 2-D point / vector in common distance units.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Vec2& o) const = default;

  double norm() const { return std::sqrt(x * x + y * y); }
  constexpr double norm_sq() const { return x * x + y * y; }
};

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

inline Vec2 normalized(const Vec2& v) {
  const double n = v.norm();
  return n > 0.0 ? Vec2{v.x / n, v.y / n} : Vec2{0.0, 0.0};
}

/// Absolute tolerance 1e-9 scaled by max(1, magnitude). All event times in the
/// simulator are analytic; this only absorbs rounding.
inline double scaled_tolerance(double magnitude) {
  return 1e-9 * std::max(1.0, std::fabs(magnitude));
}

inline bool nearly_equal(double a, double b) {
  return std::fabs(a - b) <= scaled_tolerance(std::max(std::fabs(a), std::fabs(b)));
}

inline bool points_close(const Vec2& a, const Vec2& b) {
  const double m = std::max(a.norm(), b.norm());
  return distance(a, b) <= scaled_tolerance(m);
}

}  // namespace bombsquad

#endif  // BOMBSQUAD_GEOMETRY_HPP_
