#include "cofmat/badmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace cofmat {

namespace {

Rational det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot3(a, cross(b, c)); }

}  // namespace

Rational triangle_area2(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y);
}

IdentityCheck vandermonde_identity_check(const Point& p0, const Point& p1, const Point& p2, const Point& p3) {
  return {det3(d_vector(p0, p1), d_vector(p0, p2), d_vector(p0, p3)),
          -triangle_area2(p0, p1, p2) * triangle_area2(p0, p2, p3) * triangle_area2(p0, p3, p1)};
}

IdentityCheck vandermonde_general_check(int d, std::span<const Point> points) {
  if (d < 2) throw std::invalid_argument("general Vandermonde check needs d >= 2");
  const auto n = static_cast<std::size_t>(d);
  if (points.size() != n + 1) throw std::invalid_argument("general Vandermonde check needs d+1 points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].x == points[j].x) throw std::invalid_argument("x-coordinates must be pairwise distinct");

  RatMatrix m(0, n);
  for (std::size_t i = 1; i <= n; ++i) m.append_row(d_vector_general(d - 1, points[0], points[i]));
  Rational rhs = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) rhs *= triangle_area2(points[0], points[i], points[j]);
  return {det(m), rhs};
}

BadMapEval build_bad_map(const std::array<Point, 6>& p) {
  const auto D = [&](int i, int j) { return d_vector(p[i], p[j]); };
  const auto T = [&](int i, int j, int k) { return triangle_area2(p[i], p[j], p[k]); };

  const Rational m3 = det3(D(0, 3), D(3, 4), D(3, 5));
  const Rational m2 = det3(D(0, 2), D(2, 4), D(2, 5));

  BadMapEval e;
  e.alpha = m2 * det3(D(0, 3), D(0, 1), D(0, 5));
  e.beta = -m3 * det3(D(0, 2), D(0, 1), D(0, 5));

  e.b[0] = (T(1, 2, 3) * m3 * m2) * cross(D(0, 1), D(0, 5));
  e.b[1] = {0, 0, 0};
  e.b[2] = (e.beta * T(1, 3, 2)) * cross(D(2, 4), D(2, 5));
  e.b[3] = (e.alpha * T(1, 2, 3)) * cross(D(3, 4), D(3, 5));
  e.b[4] = (e.alpha * T(1, 2, 4)) * cross(D(3, 4), D(4, 5)) + (e.beta * T(1, 3, 4)) * cross(D(2, 4), D(4, 5));
  e.b[5] = {0, 0, 0};

  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) e.deltas[{i, j}] = dot3(D(i, j), e.b[i] - e.b[j]);
  return e;
}

bool star_condition_check(const BadMapEval& e) {
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      const bool in_star = j == 5;
      if (is_zero(e.delta(i, j)) != in_star) return false;
    }
  return true;
}

IdentityCheck t1_ratio_check(const Point& u5) {
  const std::array<Point, 6> u{Point{}, Point{1, 0}, Point{0, 0}, Point{0, 1}, Point{1, 1}, u5};
  const auto D = [&](int i, int j) { return d_vector(u[i], u[j]); };
  const auto T = [&](int i, int j, int k) { return triangle_area2(u[i], u[j], u[k]); };

  const Rational num = det3(D(3, 4), D(3, 2), D(3, 5));
  const Rational den = det3(D(4, 3), D(4, 1), D(4, 5));
  const Rational area_den = T(5, 1, 4);
  if (is_zero(den) || is_zero(area_den)) throw std::domain_error("u5 is in special position for the t1 ratio");
  return {num / den, T(5, 2, 3) / area_den};
}

}  // namespace cofmat
