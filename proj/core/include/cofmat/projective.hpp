#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <vector>

#include "cofmat/framework.hpp"

namespace cofmat {

/// 3x3 rational matrix stored as rows.
using Mat3 = std::array<Vec3, 3>;

Mat3 identity3();
Mat3 transpose(const Mat3& a);
Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& x);
Rational det(const Mat3& a);
/// Throws std::domain_error when a is singular.
Mat3 inverse(const Mat3& a);

/// Matrix of signed 2x2 minors, so that (Ax) x (Ay) = C_A (x x y).
Mat3 cofactor3(const Mat3& a);

/// Symmetric 3x3 matrix, upper triangle stored.
class Sym3 {
 public:
  Sym3() = default;
  Sym3(Rational a11, Rational a12, Rational a13, Rational a22, Rational a23, Rational a33);
  /// Throws std::invalid_argument if m is not symmetric.
  static Sym3 from_matrix(const Mat3& m);

  const Rational& operator()(int i, int j) const { return v_[index(i, j)]; }
  Rational& operator()(int i, int j) { return v_[index(i, j)]; }
  Mat3 matrix() const;

  friend Sym3 operator+(const Sym3& a, const Sym3& b);
  friend Sym3 operator-(const Sym3& a, const Sym3& b);
  friend Sym3 operator*(const Rational& s, const Sym3& a);
  friend bool operator==(const Sym3&, const Sym3&) = default;

 private:
  // 0-based (i, j) -> slot in a11, a12, a13, a22, a23, a33.
  static int index(int i, int j);
  std::array<Rational, 6> v_{};
};

/// Trace(AB) for symmetric A and B, as the entrywise sum of a_ij b_ij.
Rational trace_product(const Sym3& a, const Sym3& b);

using ProjectiveMotion = std::vector<Sym3>;

/// A graph with nonzero-z homogeneous coordinates per vertex.
class LiftedFramework {
 public:
  /// Throws std::invalid_argument on a size mismatch or a zero z-component.
  LiftedFramework(Graph graph, std::vector<Vec3> coords3);

  const Graph& graph() const { return graph_; }
  const std::vector<Vec3>& coords3() const { return coords_; }
  std::size_t n() const { return graph_.n(); }

 private:
  Graph graph_;
  std::vector<Vec3> coords_;
};

/// p -> (p, 1).
LiftedFramework lift(const Framework& f);
/// Dehomogenizes every point.
Framework unlift(const LiftedFramework& lf);

/// Trace((p_i x p_j)(p_i x p_j)^T (Q_i - Q_j)).
Rational projective_condition(const Vec3& pi, const Vec3& pj, const Sym3& qi, const Sym3& qj);

/// Checks the trace condition on every listed pair. Throws on size mismatch.
bool is_projective_motion(std::span<const Vec3> coords3, const ProjectiveMotion& q, const EdgeSet& pairs);
bool is_projective_motion(const LiftedFramework& lf, const ProjectiveMotion& q, const EdgeSet& pairs);

/// Per vertex [[2q3, -q2, 0], [-q2, 2q1, 0], [0, 0, 0]].
ProjectiveMotion lift_motion(const Motion& q);
/// Inverse of lift_motion. Throws std::invalid_argument on a nonzero border entry.
Motion unlift_motion(const ProjectiveMotion& q);

/// Q*_1..Q*_6 followed by Q*_{i,1}, Q*_{i,2}, Q*_{i,3} for i = 0..n-1.
std::vector<ProjectiveMotion> trivial_projective_basis(const LiftedFramework& lf);

/// Dimension of the space of projective motions of lf (pairs = edges).
std::size_t projective_motion_space_dimension(const LiftedFramework& lf);

/// Q_A = C_A^{-T} Q C_A^{-1} per vertex. Throws std::domain_error for singular a.
ProjectiveMotion transform_motion(const ProjectiveMotion& q, const Mat3& a);

/// Applies a to every homogeneous point (no dehomogenization).
std::vector<Vec3> transform_points(std::span<const Vec3> coords3, const Mat3& a);

/// Compares the projective condition edge by edge on lf and on the pointwise
/// scaled lift. Throws std::invalid_argument on a zero scalar or size mismatch.
bool scale_invariance_check(const LiftedFramework& lf, const ProjectiveMotion& q, std::span<const Rational> scalars);

/// The homography taking src to (1,0), (0,0), (0,1), (1,1), scaled so entry
/// (3,3) is 1, or the first nonzero entry is 1 when (3,3) vanishes.
/// Throws std::invalid_argument if three of the points are collinear.
Mat3 four_point_projective_map(const std::array<Point, 4>& src);

/// Thrown when a point is sent to the line at infinity.
class PointAtInfinity : public std::domain_error {
 public:
  PointAtInfinity(Vertex v);
  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
};

/// Dehomogenized image of every vertex under m.
Framework apply_projective(const Mat3& m, const Framework& f);

/// Carries a motion of p_src to a motion of p_dst through the projective
/// calculus: lift, transform by a, rescale to z = 1, clear the border with
/// per-vertex trivial motions, unlift. Throws std::invalid_argument if a does
/// not send p_src to p_dst or the frameworks disagree on their graph.
Motion convert_motion_pipeline(const Graph& g, const Framework& p_src, const Framework& p_dst, const Mat3& a,
                               const Motion& q_src);

}  // namespace cofmat
