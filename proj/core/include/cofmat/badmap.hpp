#pragma once

#include <array>
#include <map>
#include <span>
#include <utility>

#include "cofmat/framework.hpp"

namespace cofmat {

/// Twice the signed area of the triangle pqr: det of the rows (x, y, 1).
Rational triangle_area2(const Point& p, const Point& q, const Point& r);

/// Both sides of an identity evaluated exactly.
struct IdentityCheck {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// det[D(p0,p1); D(p0,p2); D(p0,p3)] against -Δ(p0,p1,p2)Δ(p0,p2,p3)Δ(p0,p3,p1).
IdentityCheck vandermonde_identity_check(const Point& p0, const Point& p1, const Point& p2, const Point& p3);

/// det of the d rows D_{d-1}(p0, p_i), i = 1..d, against the product of
/// Δ(p0, p_i, p_j) over 1 <= i < j <= d. Needs d+1 points with pairwise
/// distinct x-coordinates; throws std::invalid_argument otherwise.
IdentityCheck vandermonde_general_check(int d, std::span<const Point> points);

/// Values of the map b on v0..v5 at concrete coordinates, with every
/// δ_ij = D(v_i, v_j)·(b(v_i) - b(v_j)).
struct BadMapEval {
  std::array<Vec3, 6> b;
  Rational alpha;
  Rational beta;
  std::map<std::pair<int, int>, Rational> deltas;  // keys (i, j) with 0 <= i < j <= 5

  const Rational& delta(int i, int j) const { return deltas.at({i, j}); }
};

BadMapEval build_bad_map(const std::array<Point, 6>& p);

/// True iff the pairs 1 <= i < j <= 5 with δ_ij = 0 are exactly the star
/// {15, 25, 35, 45}.
bool star_condition_check(const BadMapEval& e);

/// With u1..u4 at (1,0), (0,0), (0,1), (1,1):
/// lhs = det[D34; D32; D35] / det[D43; D41; D45], rhs = Δ523 / Δ514.
/// Throws std::domain_error when u5 makes a denominator vanish.
IdentityCheck t1_ratio_check(const Point& u5);

}  // namespace cofmat
