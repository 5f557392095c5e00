#include "cofmat/framework.hpp"

#include <random>
#include <string>

namespace cofmat {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator*(const Rational& s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

RatVector flatten(const Motion& q) {
  RatVector out;
  out.reserve(3 * q.size());
  for (const auto& v : q) out.insert(out.end(), v.begin(), v.end());
  return out;
}

Motion unflatten(std::span<const Rational> v) {
  if (v.size() % 3 != 0) throw std::invalid_argument("motion vector length is not a multiple of 3");
  Motion q(v.size() / 3);
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = {v[3 * i], v[3 * i + 1], v[3 * i + 2]};
  return q;
}

Framework::Framework(Graph graph, std::vector<Point> coords) : graph_(std::move(graph)), coords_(std::move(coords)) {
  if (coords_.size() != graph_.n()) {
    throw std::invalid_argument("framework has " + std::to_string(coords_.size()) + " coordinates for " +
                                std::to_string(graph_.n()) + " vertices");
  }
}

bool Framework::spans_plane() const {
  if (coords_.size() < 3) return false;
  const Point& p0 = coords_[0];
  // Find a second distinct point, then any point off the line through both.
  std::size_t i = 1;
  while (i < coords_.size() && coords_[i] == p0) ++i;
  if (i == coords_.size()) return false;
  const Rational dx = coords_[i].x - p0.x;
  const Rational dy = coords_[i].y - p0.y;
  for (std::size_t k = i + 1; k < coords_.size(); ++k) {
    if (dx * (coords_[k].y - p0.y) != dy * (coords_[k].x - p0.x)) return true;
  }
  return false;
}

DVec d_vector(const Point& p, const Point& q) {
  const Rational dx = p.x - q.x;
  const Rational dy = p.y - q.y;
  return {dx * dx, dx * dy, dy * dy};
}

RatVector d_vector_general(int s, const Point& p, const Point& q) {
  if (s < 1) throw std::invalid_argument("D_s requires s >= 1");
  const Rational dx = p.x - q.x;
  const Rational dy = p.y - q.y;
  RatVector out(static_cast<std::size_t>(s) + 1);
  // out[k] = dx^(s-k) dy^k
  std::vector<Rational> px(out.size(), Rational(1)), py(out.size(), Rational(1));
  for (std::size_t k = 1; k < out.size(); ++k) {
    px[k] = px[k - 1] * dx;
    py[k] = py[k - 1] * dy;
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = px[out.size() - 1 - k] * py[k];
  return out;
}

RatMatrix cofactor_matrix(std::span<const Point> coords, const EdgeSet& edges) {
  RatMatrix m(edges.size(), 3 * coords.size());
  std::size_t r = 0;
  for (const auto& e : edges) {
    if (e.v >= coords.size()) throw std::invalid_argument("edge endpoint without coordinates");
    const DVec d = d_vector(coords[e.u], coords[e.v]);
    for (std::size_t k = 0; k < 3; ++k) {
      m(r, 3 * e.u + k) = d[k];
      m(r, 3 * e.v + k) = -d[k];
    }
    ++r;
  }
  return m;
}

RatMatrix cofactor_matrix(const Framework& f) { return cofactor_matrix(f.coords(), f.graph().edges()); }

namespace {

void validate_pin_vertices(const Framework& f, PinTriple pins) {
  const std::size_t n = f.n();
  if (pins.a >= n || pins.b >= n || pins.c >= n) throw std::invalid_argument("pin vertex out of range");
  if (pins.a == pins.b || pins.a == pins.c || pins.b == pins.c) throw std::invalid_argument("pin vertices must be distinct");
}

}  // namespace

void validate_pins(const Framework& f, PinTriple pins) {
  validate_pin_vertices(f, pins);
  const auto& ya = f.at(pins.a).y;
  const auto& yb = f.at(pins.b).y;
  const auto& yc = f.at(pins.c).y;
  if (ya == yb || ya == yc || yb == yc) throw std::invalid_argument("pin vertices must have pairwise distinct y-coordinates");
}

RatMatrix extended_cofactor_matrix(const Framework& f, PinTriple pins, bool check_y) {
  if (check_y) validate_pins(f, pins);
  else validate_pin_vertices(f, pins);
  const RatMatrix c = cofactor_matrix(f);
  RatMatrix m(0, 3 * f.n());
  const std::array<std::pair<Vertex, std::size_t>, 6> units{
      {{pins.a, 0}, {pins.a, 1}, {pins.a, 2}, {pins.b, 0}, {pins.b, 1}, {pins.c, 0}}};
  for (const auto& [v, t] : units) {
    RatVector row(3 * f.n());
    row[3 * v + t] = 1;
    m.append_row(row);
  }
  for (std::size_t r = 0; r < c.rows(); ++r) m.append_row(c.row(r));
  return m;
}

std::array<Motion, 6> trivial_motion_basis(const Framework& f) {
  std::array<Motion, 6> out;
  for (auto& q : out) q.resize(f.n());
  for (std::size_t i = 0; i < f.n(); ++i) {
    const Rational& x = f.coords()[i].x;
    const Rational& y = f.coords()[i].y;
    out[0][i] = {1, 0, 0};
    out[1][i] = {0, 1, 0};
    out[2][i] = {0, 0, 1};
    out[3][i] = {y, -x, 0};
    out[4][i] = {0, -y, x};
    out[5][i] = {y * y, -2 * x * y, x * x};
  }
  return out;
}

RatMatrix pinned_trivial_matrix(const Point& pa, const Point& pb, const Point& pc) {
  return RatMatrix{
      {1, 0, 0, pa.y, 0, pa.y * pa.y},
      {0, 1, 0, -pa.x, -pa.y, -2 * pa.x * pa.y},
      {0, 0, 1, 0, pa.x, pa.x * pa.x},
      {1, 0, 0, pb.y, 0, pb.y * pb.y},
      {0, 1, 0, -pb.x, -pb.y, -2 * pb.x * pb.y},
      {1, 0, 0, pc.y, 0, pc.y * pc.y},
  };
}

bool is_motion(const Framework& f, const Motion& q) {
  if (q.size() != f.n()) {
    throw std::invalid_argument("motion has " + std::to_string(q.size()) + " entries for " + std::to_string(f.n()) +
                                " vertices");
  }
  for (const auto& e : f.graph().edges()) {
    if (!is_zero(dot3(d_vector(f.at(e.u), f.at(e.v)), q[e.u] - q[e.v]))) return false;
  }
  return true;
}

int dof(const Framework& f) {
  if (f.n() < 3) return 0;
  if (!f.spans_plane()) throw DegenerateFramework("points are collinear; the trivial motion space is not 6-dimensional");
  const auto r = rank(cofactor_matrix(f));
  return static_cast<int>(3 * f.n() - r) - 6;
}

std::vector<Motion> nontrivial_motion_basis(const Framework& f, PinTriple pins) {
  if (!f.spans_plane()) throw DegenerateFramework("points are collinear; pinning is undefined");
  const auto kernel = kernel_basis(extended_cofactor_matrix(f, pins));
  std::vector<Motion> out;
  out.reserve(kernel.size());
  for (const auto& z : kernel) out.push_back(unflatten(z));
  return out;
}

std::vector<Point> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr std::int64_t bound = std::int64_t{1} << 62;
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  std::vector<Point> pts(n);
  for (auto& p : pts) {
    const auto x = dist(rng);
    const auto y = dist(rng);
    static_assert(sizeof(long) == sizeof(std::int64_t));
    p.x = Rational(static_cast<long>(x));
    p.y = Rational(static_cast<long>(y));
  }
  return pts;
}

Framework random_generic_framework(const Graph& g, std::uint64_t seed) {
  return Framework(g, random_points(g.n(), seed));
}

}  // namespace cofmat
