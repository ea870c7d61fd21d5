#pragma once

#include <array>
#include <cmath>

namespace looptree {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

// Rotation by -90 degrees (clockwise).
inline Vec2 rot_cw(Vec2 v) { return {v.y, -v.x}; }
// Rotation by +90 degrees (counterclockwise).
inline Vec2 rot_ccw(Vec2 v) { return {-v.y, v.x}; }

// Twice the signed area of triangle (a, b, c); positive when counterclockwise.
inline double cross2(Vec2 a, Vec2 b, Vec2 c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Symmetric Gauss rules on the reference triangle in barycentric form.
// Weights sum to 1 and are applied as w * area.
struct TriQuadPoint {
  double l1, l2, l3, w;
};

// Degree-2 exact, used for every Gram integral (products of linear fields).
inline const std::array<TriQuadPoint, 3>& tri_quadrature_3() {
  static const std::array<TriQuadPoint, 3> rule = {{
      {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 3.0},
      {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0, 1.0 / 3.0},
      {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0, 1.0 / 3.0},
  }};
  return rule;
}

// Degree-5 exact, used to confirm the 3-point rule is already exact.
inline const std::array<TriQuadPoint, 7>& tri_quadrature_7() {
  constexpr double a1 = 0.059715871789769820;
  constexpr double b1 = 0.470142064105115090;
  constexpr double a2 = 0.797426985353087320;
  constexpr double b2 = 0.101286507323456340;
  constexpr double w0 = 0.225;
  constexpr double w1 = 0.132394152788506180;
  constexpr double w2 = 0.125939180544827150;
  static const std::array<TriQuadPoint, 7> rule = {{
      {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, w0},
      {a1, b1, b1, w1},
      {b1, a1, b1, w1},
      {b1, b1, a1, w1},
      {a2, b2, b2, w2},
      {b2, a2, b2, w2},
      {b2, b2, a2, w2},
  }};
  return rule;
}

// Two-point Gauss on a segment, exact to cubic integrands.
struct SegQuadPoint {
  double t;  // in [0,1]
  double w;  // weights sum to 1, applied as w * length
};

inline const std::array<SegQuadPoint, 2>& seg_quadrature_2() {
  const double c = 0.5 / std::sqrt(3.0);
  static const std::array<SegQuadPoint, 2> rule = {{
      {0.5 - c, 0.5},
      {0.5 + c, 0.5},
  }};
  return rule;
}

}  // namespace looptree
