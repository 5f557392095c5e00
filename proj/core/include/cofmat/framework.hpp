#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cofmat/graph.hpp"
#include "cofmat/matrix.hpp"

namespace cofmat {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

using Vec3 = std::array<Rational, 3>;
using DVec = Vec3;

Vec3 cross(const Vec3& a, const Vec3& b);
Rational dot3(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator*(const Rational& s, const Vec3& a);

/// A C¹₂-motion: one 3-vector per vertex.
using Motion = std::vector<Vec3>;

RatVector flatten(const Motion& q);
/// Throws if the length is not a multiple of 3.
Motion unflatten(std::span<const Rational> v);

/// Raised when a query needs the points to affinely span the plane.
class DegenerateFramework : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A graph with exact plane coordinates per vertex.
class Framework {
 public:
  /// Throws std::invalid_argument unless coords.size() == graph.n().
  Framework(Graph graph, std::vector<Point> coords);

  const Graph& graph() const { return graph_; }
  const std::vector<Point>& coords() const { return coords_; }
  const Point& at(Vertex v) const { return coords_.at(v); }
  std::size_t n() const { return graph_.n(); }

  /// True iff the points affinely span the plane (some triple is non-collinear).
  bool spans_plane() const;

  friend bool operator==(const Framework&, const Framework&) = default;

 private:
  Graph graph_;
  std::vector<Point> coords_;
};

/// ((x_i-x_j)², (x_i-x_j)(y_i-y_j), (y_i-y_j)²).
DVec d_vector(const Point& p, const Point& q);

/// The degree-s analogue ((x_i-x_j)^s, (x_i-x_j)^{s-1}(y_i-y_j), ..., (y_i-y_j)^s).
RatVector d_vector_general(int s, const Point& p, const Point& q);

/// |edges| x 3n matrix. Vertex v owns columns 3v..3v+2; the row of edge uv
/// (u < v) carries D(u,v) in u's block and -D(u,v) in v's block.
RatMatrix cofactor_matrix(std::span<const Point> coords, const EdgeSet& edges);
RatMatrix cofactor_matrix(const Framework& f);

struct PinTriple {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
};

/// Checks distinctness, range, and pairwise distinct y-coordinates.
void validate_pins(const Framework& f, PinTriple pins);

/// The six unit rows e_{a,1}, e_{a,2}, e_{a,3}, e_{b,1}, e_{b,2}, e_{c,1}
/// followed by the cofactor rows (the conventional row order).
/// The matrix itself only needs three distinct pins; pass check_y = false to
/// skip the distinct-y requirement (the reference K4 example pins two vertices
/// on the x-axis).
RatMatrix extended_cofactor_matrix(const Framework& f, PinTriple pins, bool check_y = true);

/// q*_1..q*_6 evaluated at f's coordinates.
std::array<Motion, 6> trivial_motion_basis(const Framework& f);

/// Coefficient matrix of the pinned trivial-motion system: row (s,t) holds the
/// t-th coordinate of q*_1..q*_6 at vertex s, for (a,1),(a,2),(a,3),(b,1),(b,2),(c,1).
/// Its determinant is (y_a-y_b)²(y_c-y_a)(y_b-y_c).
RatMatrix pinned_trivial_matrix(const Point& pa, const Point& pb, const Point& pc);

/// Throws std::invalid_argument on size mismatch.
bool is_motion(const Framework& f, const Motion& q);

/// dim ker C(G,p) - 6. Frameworks with fewer than three vertices report 0;
/// collinear point sets throw DegenerateFramework.
int dof(const Framework& f);

/// Kernel basis of the extended matrix: exactly dof(f) motions, each zero on
/// the six pinned coordinates.
std::vector<Motion> nontrivial_motion_basis(const Framework& f, PinTriple pins);

/// Uniform integer coordinates in [-2^62, 2^62] drawn from a seeded mt19937_64.
std::vector<Point> random_points(std::size_t n, std::uint64_t seed);
Framework random_generic_framework(const Graph& g, std::uint64_t seed);

}  // namespace cofmat
