// Small 2D geometric value types shared by all modules.

#ifndef CRDG_GEOMETRY_HPP
#define CRDG_GEOMETRY_HPP

#include <cmath>

namespace crdg {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double xx, double yy) : x(xx), y(yy) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 3D cross product of (a,0) and (b,0).
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline double norm(const Vec2& v) { return std::sqrt(dot(v, v)); }

/// Rotates v by -90 degrees; for a CCW-traversed edge this is the outward normal direction.
inline Vec2 perp_cw(const Vec2& v) { return {v.y, -v.x}; }

/// Rotates v by +90 degrees.
inline Vec2 perp_ccw(const Vec2& v) { return {-v.y, v.x}; }

/// Barycentric coordinates with respect to a triangle's three vertices.
struct Bary {
  double l0 = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;

  double operator[](int i) const { return i == 0 ? l0 : (i == 1 ? l1 : l2); }
};

}  // namespace crdg

#endif
