#include "cofmat/projective.hpp"

#include <string>

namespace cofmat {

Mat3 identity3() { return {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}; }

Mat3 transpose(const Mat3& a) {
  Mat3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return c;
}

Vec3 operator*(const Mat3& a, const Vec3& x) { return {dot3(a[0], x), dot3(a[1], x), dot3(a[2], x)}; }

Rational det(const Mat3& a) { return dot3(a[0], cross(a[1], a[2])); }

Mat3 cofactor3(const Mat3& a) {
  Mat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      // Cyclic index choice folds the (-1)^{i+j} sign into the minor.
      c[i][j] = a[i1][j1] * a[i2][j2] - a[i1][j2] * a[i2][j1];
    }
  return c;
}

Mat3 inverse(const Mat3& a) {
  const Rational d = det(a);
  if (is_zero(d)) throw std::domain_error("singular 3x3 matrix");
  Mat3 inv = transpose(cofactor3(a));
  for (auto& row : inv)
    for (auto& x : row) x /= d;
  return inv;
}

Sym3::Sym3(Rational a11, Rational a12, Rational a13, Rational a22, Rational a23, Rational a33)
    : v_{std::move(a11), std::move(a12), std::move(a13), std::move(a22), std::move(a23), std::move(a33)} {}

int Sym3::index(int i, int j) {
  if (i > j) std::swap(i, j);
  static constexpr int slot[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return slot[i][j];
}

Sym3 Sym3::from_matrix(const Mat3& m) {
  if (m[0][1] != m[1][0] || m[0][2] != m[2][0] || m[1][2] != m[2][1]) {
    throw std::invalid_argument("matrix is not symmetric");
  }
  return {m[0][0], m[0][1], m[0][2], m[1][1], m[1][2], m[2][2]};
}

Mat3 Sym3::matrix() const {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (*this)(i, j);
  return m;
}

Sym3 operator+(const Sym3& a, const Sym3& b) {
  Sym3 c;
  for (int k = 0; k < 6; ++k) c.v_[k] = a.v_[k] + b.v_[k];
  return c;
}

Sym3 operator-(const Sym3& a, const Sym3& b) {
  Sym3 c;
  for (int k = 0; k < 6; ++k) c.v_[k] = a.v_[k] - b.v_[k];
  return c;
}

Sym3 operator*(const Rational& s, const Sym3& a) {
  Sym3 c;
  for (int k = 0; k < 6; ++k) c.v_[k] = s * a.v_[k];
  return c;
}

Rational trace_product(const Sym3& a, const Sym3& b) {
  Rational t = a(0, 0) * b(0, 0) + a(1, 1) * b(1, 1) + a(2, 2) * b(2, 2);
  t += 2 * (a(0, 1) * b(0, 1) + a(0, 2) * b(0, 2) + a(1, 2) * b(1, 2));
  return t;
}

LiftedFramework::LiftedFramework(Graph graph, std::vector<Vec3> coords3)
    : graph_(std::move(graph)), coords_(std::move(coords3)) {
  if (coords_.size() != graph_.n()) throw std::invalid_argument("lifted framework: coordinate count mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (is_zero(coords_[i][2])) {
      throw std::invalid_argument("lifted framework: vertex " + std::to_string(i) + " has zero z-component");
    }
  }
}

LiftedFramework lift(const Framework& f) {
  std::vector<Vec3> c;
  c.reserve(f.n());
  for (const auto& p : f.coords()) c.push_back({p.x, p.y, 1});
  return LiftedFramework(f.graph(), std::move(c));
}

Framework unlift(const LiftedFramework& lf) {
  std::vector<Point> pts;
  pts.reserve(lf.n());
  for (const auto& p : lf.coords3()) pts.push_back({p[0] / p[2], p[1] / p[2]});
  return Framework(lf.graph(), std::move(pts));
}

namespace {

Sym3 outer(const Vec3& w) {
  return {w[0] * w[0], w[0] * w[1], w[0] * w[2], w[1] * w[1], w[1] * w[2], w[2] * w[2]};
}

// p e_k^T + e_k p^T
Sym3 symmetric_with_unit(const Vec3& p, int k) {
  Sym3 s;
  for (int i = 0; i < 3; ++i) s(i, k) = p[i];
  s(k, k) = 2 * p[k];
  return s;
}

}  // namespace

Rational projective_condition(const Vec3& pi, const Vec3& pj, const Sym3& qi, const Sym3& qj) {
  return trace_product(outer(cross(pi, pj)), qi - qj);
}

bool is_projective_motion(std::span<const Vec3> coords3, const ProjectiveMotion& q, const EdgeSet& pairs) {
  if (q.size() != coords3.size()) throw std::invalid_argument("projective motion size does not match the framework");
  for (const auto& e : pairs) {
    if (e.v >= coords3.size()) throw std::invalid_argument("pair outside the vertex set");
    if (!is_zero(projective_condition(coords3[e.u], coords3[e.v], q[e.u], q[e.v]))) return false;
  }
  return true;
}

bool is_projective_motion(const LiftedFramework& lf, const ProjectiveMotion& q, const EdgeSet& pairs) {
  return is_projective_motion(lf.coords3(), q, pairs);
}

ProjectiveMotion lift_motion(const Motion& q) {
  ProjectiveMotion out;
  out.reserve(q.size());
  for (const auto& v : q) out.emplace_back(2 * v[2], -v[1], 0, 2 * v[0], 0, 0);
  return out;
}

Motion unlift_motion(const ProjectiveMotion& q) {
  Motion out;
  out.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Sym3& s = q[i];
    if (!is_zero(s(0, 2)) || !is_zero(s(1, 2)) || !is_zero(s(2, 2))) {
      throw std::invalid_argument("projective motion has a nonzero border entry at vertex " + std::to_string(i));
    }
    out.push_back({s(1, 1) / 2, -s(0, 1), s(0, 0) / 2});
  }
  return out;
}

std::vector<ProjectiveMotion> trivial_projective_basis(const LiftedFramework& lf) {
  const std::size_t n = lf.n();
  std::vector<ProjectiveMotion> out(6, ProjectiveMotion(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = lf.coords3()[i];
    const Rational x = p[0] / p[2];
    const Rational y = p[1] / p[2];
    out[0][i] = {0, 0, 0, 2, 0, 0};
    out[1][i] = {0, -1, 0, 0, 0, 0};
    out[2][i] = {2, 0, 0, 0, 0, 0};
    out[3][i] = {0, x, 0, 2 * y, 0, 0};
    out[4][i] = {2 * x, y, 0, 0, 0, 0};
    out[5][i] = {2 * x * x, 2 * x * y, 0, 2 * y * y, 0, 0};
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = lf.coords3()[i];
    for (int k = 0; k < 3; ++k) out.emplace_back(n);
    auto& q1 = out[out.size() - 3];
    auto& q2 = out[out.size() - 2];
    auto& q3 = out[out.size() - 1];
    q1[i] = symmetric_with_unit(p, 1);
    q2[i] = symmetric_with_unit(p, 0);
    q3[i] = {-p[0] * p[0], -p[0] * p[1], 0, -p[1] * p[1], 0, p[2] * p[2]};
  }
  return out;
}

std::size_t projective_motion_space_dimension(const LiftedFramework& lf) {
  const std::size_t n = lf.n();
  RatMatrix m(0, 6 * n);
  static constexpr std::array<std::pair<int, int>, 6> slots{{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};
  for (const auto& e : lf.graph().edges()) {
    const Sym3 w = outer(cross(lf.coords3()[e.u], lf.coords3()[e.v]));
    RatVector row(6 * n);
    for (std::size_t k = 0; k < 6; ++k) {
      const auto [i, j] = slots[k];
      const Rational c = i == j ? w(i, j) : 2 * w(i, j);
      row[6 * e.u + k] = c;
      row[6 * e.v + k] = -c;
    }
    m.append_row(row);
  }
  return 6 * n - rank(m);
}

ProjectiveMotion transform_motion(const ProjectiveMotion& q, const Mat3& a) {
  const Mat3 ci = inverse(cofactor3(a));
  const Mat3 cit = transpose(ci);
  ProjectiveMotion out;
  out.reserve(q.size());
  for (const auto& s : q) out.push_back(Sym3::from_matrix(cit * s.matrix() * ci));
  return out;
}

std::vector<Vec3> transform_points(std::span<const Vec3> coords3, const Mat3& a) {
  std::vector<Vec3> out;
  out.reserve(coords3.size());
  for (const auto& p : coords3) out.push_back(a * p);
  return out;
}

bool scale_invariance_check(const LiftedFramework& lf, const ProjectiveMotion& q, std::span<const Rational> scalars) {
  if (scalars.size() != lf.n() || q.size() != lf.n()) throw std::invalid_argument("scale check: size mismatch");
  std::vector<Vec3> scaled;
  scaled.reserve(lf.n());
  for (std::size_t i = 0; i < lf.n(); ++i) {
    if (is_zero(scalars[i])) throw std::invalid_argument("scale check: zero scalar");
    scaled.push_back(scalars[i] * lf.coords3()[i]);
  }
  for (const auto& e : lf.graph().edges()) {
    const bool before = is_zero(projective_condition(lf.coords3()[e.u], lf.coords3()[e.v], q[e.u], q[e.v]));
    const bool after = is_zero(projective_condition(scaled[e.u], scaled[e.v], q[e.u], q[e.v]));
    if (before != after) return false;
  }
  return true;
}

namespace {

Vec3 up(const Point& p) { return {p.x, p.y, 1}; }

// Columns lambda_k p_k with p_1..p_3 scaled so that their sum is p_4.
Mat3 basis_to_quad(const std::array<Point, 4>& q) {
  Mat3 cols = transpose(Mat3{up(q[0]), up(q[1]), up(q[2])});
  if (is_zero(det(cols))) throw std::invalid_argument("four-point map: three points are collinear");
  const Vec3 lambda = inverse(cols) * up(q[3]);
  for (int k = 0; k < 3; ++k) {
    if (is_zero(lambda[k])) throw std::invalid_argument("four-point map: three points are collinear");
    for (int r = 0; r < 3; ++r) cols[r][k] *= lambda[k];
  }
  return cols;
}

}  // namespace

Mat3 four_point_projective_map(const std::array<Point, 4>& src) {
  static const std::array<Point, 4> targets{Point{1, 0}, Point{0, 0}, Point{0, 1}, Point{1, 1}};
  Mat3 m = basis_to_quad(targets) * inverse(basis_to_quad(src));
  Rational s = m[2][2];
  for (int k = 0; is_zero(s) && k < 9; ++k) s = m[k / 3][k % 3];
  for (auto& row : m)
    for (auto& x : row) x /= s;
  return m;
}

PointAtInfinity::PointAtInfinity(Vertex v)
    : std::domain_error("vertex " + std::to_string(v) + " is mapped to infinity"), vertex_(v) {}

Framework apply_projective(const Mat3& m, const Framework& f) {
  if (is_zero(det(m))) throw std::domain_error("projective map is singular");
  std::vector<Point> pts;
  pts.reserve(f.n());
  for (std::size_t i = 0; i < f.n(); ++i) {
    const Vec3 w = m * up(f.at(static_cast<Vertex>(i)));
    if (is_zero(w[2])) throw PointAtInfinity(static_cast<Vertex>(i));
    pts.push_back({w[0] / w[2], w[1] / w[2]});
  }
  return Framework(f.graph(), std::move(pts));
}

Motion convert_motion_pipeline(const Graph& g, const Framework& p_src, const Framework& p_dst, const Mat3& a,
                               const Motion& q_src) {
  if (p_src.graph() != g || p_dst.graph() != g) throw std::invalid_argument("pipeline: frameworks must share the graph");
  if (q_src.size() != g.n()) throw std::invalid_argument("pipeline: motion size does not match the graph");
  if (is_zero(det(a))) throw std::invalid_argument("pipeline: the map is singular");

  // Steps 1 and 2: lift and transform.
  ProjectiveMotion q = transform_motion(lift_motion(q_src), a);

  for (std::size_t i = 0; i < g.n(); ++i) {
    const auto v = static_cast<Vertex>(i);
    // Step 3: A p_src(v) must be a multiple of p_dst(v); rescale it to z = 1.
    const Vec3 img = a * up(p_src.at(v));
    const Vec3 dst = up(p_dst.at(v));
    if (is_zero(img[2]) || cross(img, dst) != Vec3{0, 0, 0}) {
      throw std::invalid_argument("pipeline: the map does not send vertex " + std::to_string(i) + " of p_src to p_dst");
    }
    // Step 4: with z = 1 the border entries (1,3), (2,3), (3,3) are killed
    // independently by Q*_{v,2}, Q*_{v,1}, Q*_{v,3}.
    Sym3& s = q[i];
    const Sym3 q1 = symmetric_with_unit(dst, 1);
    const Sym3 q2 = symmetric_with_unit(dst, 0);
    const Sym3 q3{-dst[0] * dst[0], -dst[0] * dst[1], 0, -dst[1] * dst[1], 0, 1};
    const Rational c1 = -s(1, 2);
    const Rational c2 = -s(0, 2);
    const Rational c3 = -s(2, 2);
    s = s + c1 * q1 + c2 * q2 + c3 * q3;
  }
  // Step 5.
  return unlift_motion(q);
}

}  // namespace cofmat
