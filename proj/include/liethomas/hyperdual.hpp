#pragma once

#include <cmath>
#include <ostream>

namespace lie_thomas {

/// Truncated Taylor number v + dx e1 + dy e2 + dxy e1 e2 with e1^2 = e2^2 = 0.
/// Seeding x = {x0, 1, 0, 0} and y = {y0, 0, 1, 0} makes any smooth f return
/// (f, f_x, f_y, f_xy) exactly.
struct HyperDual {
  double v = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  double dxy = 0.0;

  constexpr HyperDual() = default;
  constexpr HyperDual(double value) : v(value) {}  // NOLINT(implicit)
  constexpr HyperDual(double value, double ddx, double ddy, double ddxy) : v(value), dx(ddx), dy(ddy), dxy(ddxy) {}

  static constexpr HyperDual seed_x(double x) { return {x, 1.0, 0.0, 0.0}; }
  static constexpr HyperDual seed_y(double y) { return {y, 0.0, 1.0, 0.0}; }
};

/// Lifts a scalar function given its value and first two derivatives at h.v.
constexpr HyperDual chain(const HyperDual& h, double f, double df, double ddf) {
  return {f, df * h.dx, df * h.dy, df * h.dxy + ddf * h.dx * h.dy};
}

constexpr HyperDual operator+(const HyperDual& a, const HyperDual& b) {
  return {a.v + b.v, a.dx + b.dx, a.dy + b.dy, a.dxy + b.dxy};
}
constexpr HyperDual operator-(const HyperDual& a, const HyperDual& b) {
  return {a.v - b.v, a.dx - b.dx, a.dy - b.dy, a.dxy - b.dxy};
}
constexpr HyperDual operator-(const HyperDual& a) { return {-a.v, -a.dx, -a.dy, -a.dxy}; }
constexpr HyperDual operator*(const HyperDual& a, const HyperDual& b) {
  return {a.v * b.v, a.v * b.dx + a.dx * b.v, a.v * b.dy + a.dy * b.v,
          a.v * b.dxy + a.dx * b.dy + a.dy * b.dx + a.dxy * b.v};
}
constexpr HyperDual inv(const HyperDual& a) {
  const double r = 1.0 / a.v;
  return chain(a, r, -r * r, 2.0 * r * r * r);
}
constexpr HyperDual operator/(const HyperDual& a, const HyperDual& b) { return a * inv(b); }

constexpr HyperDual& operator+=(HyperDual& a, const HyperDual& b) { return a = a + b; }
constexpr HyperDual& operator-=(HyperDual& a, const HyperDual& b) { return a = a - b; }
constexpr HyperDual& operator*=(HyperDual& a, const HyperDual& b) { return a = a * b; }
constexpr HyperDual& operator/=(HyperDual& a, const HyperDual& b) { return a = a / b; }

inline HyperDual exp(const HyperDual& a) {
  const double e = std::exp(a.v);
  return chain(a, e, e, e);
}

inline HyperDual log(const HyperDual& a) { return chain(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v)); }

inline HyperDual tan(const HyperDual& a) {
  const double t = std::tan(a.v);
  const double d = 1.0 + t * t;
  return chain(a, t, d, 2.0 * t * d);
}

inline HyperDual cos(const HyperDual& a) { return chain(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }
inline HyperDual sin(const HyperDual& a) { return chain(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }

inline HyperDual atan(const HyperDual& a) {
  const double d = 1.0 / (1.0 + a.v * a.v);
  return chain(a, std::atan(a.v), d, -2.0 * a.v * d * d);
}

inline HyperDual sqrt(const HyperDual& a) {
  const double s = std::sqrt(a.v);
  return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}

inline HyperDual pow(const HyperDual& a, int k) {
  if (k == 0) return 1.0;
  const double p2 = k >= 2 || k < 0 ? std::pow(a.v, k - 2) : 0.0;
  const double p1 = std::pow(a.v, k - 1);
  return chain(a, p1 * a.v, k * p1, k == 1 ? 0.0 : k * (k - 1) * p2);
}

inline HyperDual abs(const HyperDual& a) { return a.v < 0 ? -a : a; }

inline std::ostream& operator<<(std::ostream& os, const HyperDual& h) {
  return os << "{" << h.v << ", " << h.dx << ", " << h.dy << ", " << h.dxy << "}";
}

}  // namespace lie_thomas
