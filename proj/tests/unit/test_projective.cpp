#include <doctest.h>

#include <stdexcept>

#include "cofmat/generators.hpp"
#include "cofmat/projective.hpp"

using namespace cofmat;

namespace {

Framework random_framework(const Graph& g, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < g.n(); ++i) pts.push_back(random_rational_point(rng));
    Framework f(g, pts);
    if (f.spans_plane()) return f;
  }
}

Mat3 random_mat(std::mt19937_64& rng) {
  for (;;) {
    Mat3 a;
    for (auto& row : a)
      for (auto& x : row) x = random_rational(rng, 7, 3);
    if (!is_zero(det(a))) return a;
  }
}

Sym3 random_sym(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng),
          random_rational(rng), random_rational(rng), random_rational(rng)};
}

const Framework& k4() {
  static const Framework f(complete_graph(4), {Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{-1, -1}});
  return f;
}

}  // namespace

TEST_CASE("lift and unlift") {
  const LiftedFramework lf = lift(Framework(Graph(1), {Point{0, 0}}));
  CHECK(lf.coords3()[0] == Vec3{0, 0, 1});
  CHECK(lift(k4()).graph() == k4().graph());
  CHECK(unlift(lift(k4())) == k4());
  const LiftedFramework scaled(complete_graph(2), {Vec3{2, 4, 2}, Vec3{3, 0, -3}});
  CHECK(unlift(scaled).coords() == std::vector<Point>{{1, 2}, {-1, 0}});
  CHECK_THROWS_AS(LiftedFramework(complete_graph(2), {Vec3{1, 1, 0}, Vec3{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(LiftedFramework(complete_graph(2), {Vec3{1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("symmetric storage") {
  Sym3 s{1, 2, 3, 4, 5, 6};
  CHECK(s(1, 0) == 2);
  CHECK(s(2, 1) == 5);
  CHECK(Sym3::from_matrix(s.matrix()) == s);
  Mat3 asym = s.matrix();
  asym[0][1] = 9;
  CHECK_THROWS_AS(Sym3::from_matrix(asym), std::invalid_argument);
  // Trace(AB) by full product.
  const Sym3 t{-1, 0, 2, 3, 1, -2};
  const Mat3 ab = s.matrix() * t.matrix();
  CHECK(trace_product(s, t) == ab[0][0] + ab[1][1] + ab[2][2]);
}

TEST_CASE("constant projective motions satisfy every pair") {
  const LiftedFramework lf = lift(k4());
  const ProjectiveMotion q(4, Sym3{1, 2, 3, 4, 5, 6});
  CHECK(is_projective_motion(lf, q, complete_edges(4)));
  CHECK_THROWS_AS(is_projective_motion(lf, ProjectiveMotion(3), complete_edges(4)), std::invalid_argument);
}

TEST_CASE("lifting motions") {
  CHECK(lift_motion(Motion(2, Vec3{0, 0, 0})) == ProjectiveMotion(2));
  const ProjectiveMotion q1 = lift_motion(Motion(3, Vec3{1, 0, 0}));
  CHECK(q1[0] == Sym3{0, 0, 0, 2, 0, 0});
  CHECK(lift_motion(Motion{Vec3{5, 7, 11}})[0] == Sym3{22, -7, 0, 10, 0, 0});

  std::mt19937_64 rng(1);
  Motion q;
  for (int i = 0; i < 5; ++i) q.push_back({random_rational(rng), random_rational(rng), random_rational(rng)});
  CHECK(unlift_motion(lift_motion(q)) == q);
  CHECK(unlift_motion(ProjectiveMotion(2)) == Motion(2, Vec3{0, 0, 0}));
  CHECK_THROWS_AS(unlift_motion({Sym3{0, 0, 1, 0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(unlift_motion({Sym3{0, 0, 0, 0, 0, 1}}), std::invalid_argument);
}

TEST_CASE("lifting equivalence and the trace identity") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const Framework f = random_framework(complete_graph(4 + t % 3).without_edges(std::array<Edge, 1>{Edge{0, 1}}), rng);
    Motion q = random_motion_of(f, rng);
    if (t % 2) q[0][1] += 1;
    const LiftedFramework lf = lift(f);
    const ProjectiveMotion lq = lift_motion(q);
    CHECK(is_motion(f, q) == is_projective_motion(lf, lq, f.graph().edges()));
    for (const auto& e : complete_edges(f.n())) {
      CHECK(projective_condition(lf.coords3()[e.u], lf.coords3()[e.v], lq[e.u], lq[e.v]) ==
            2 * dot3(d_vector(f.at(e.u), f.at(e.v)), q[e.u] - q[e.v]));
    }
  }
}

TEST_CASE("trivial projective motions") {
  std::mt19937_64 rng(3);
  const Framework f = random_framework(complete_graph(5), rng);
  std::vector<Vec3> c;
  for (const auto& p : f.coords()) {
    const Rational z = random_nonzero_rational(rng);
    c.push_back({p.x * z, p.y * z, z});
  }
  const LiftedFramework lf(f.graph(), c);
  const auto basis = trivial_projective_basis(lf);
  CHECK(basis.size() == 3 * 5 + 6);
  RatMatrix stacked(0, 30);
  for (const auto& q : basis) {
    CHECK(is_projective_motion(lf, q, complete_edges(5)));
    RatVector row;
    for (const auto& s : q)
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) row.push_back(s(i, j));
    stacked.append_row(row);
  }
  CHECK(rank(stacked) == 21);

  // The six global motions are the lifts of the planar trivial motions.
  const auto planar = trivial_motion_basis(f);
  const auto lifted = trivial_projective_basis(lift(f));
  for (std::size_t k = 0; k < 6; ++k) CHECK(lifted[k] == lift_motion(planar[k]));
}

TEST_CASE("projective motion space dimension") {
  const std::array<Edge, 1> e{Edge{0, 1}};
  CHECK(projective_motion_space_dimension(lift(k4())) == 18);
  CHECK(projective_motion_space_dimension(lift(Framework(complete_graph(4).without_edges(e), k4().coords()))) == 19);
}

TEST_CASE("cofactor matrix of a 3x3 map") {
  CHECK(cofactor3(identity3()) == identity3());
  const Mat3 d{Vec3{2, 0, 0}, Vec3{0, 3, 0}, Vec3{0, 0, 5}};
  CHECK(cofactor3(d) == Mat3{Vec3{15, 0, 0}, Vec3{0, 10, 0}, Vec3{0, 0, 6}});
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const Mat3 a = random_mat(rng);
    const Vec3 x{random_rational(rng), random_rational(rng), random_rational(rng)};
    const Vec3 y{random_rational(rng), random_rational(rng), random_rational(rng)};
    CHECK(cross(a * x, a * y) == cofactor3(a) * cross(x, y));
    CHECK(a * inverse(a) == identity3());
  }
  CHECK_THROWS_AS(inverse(Mat3{}), std::domain_error);
}

TEST_CASE("transforming motions") {
  std::mt19937_64 rng(5);
  const Framework f = random_framework(complete_graph(5).without_edges(std::array<Edge, 2>{Edge{0, 1}, Edge{2, 3}}), rng);
  const LiftedFramework lf = lift(f);
  const ProjectiveMotion q = lift_motion(random_motion_of(f, rng));
  CHECK(transform_motion(q, identity3()) == q);
  for (int t = 0; t < 10; ++t) {
    const Mat3 a = random_mat(rng);
    const ProjectiveMotion qa = transform_motion(q, a);
    CHECK(is_projective_motion(transform_points(lf.coords3(), a), qa, f.graph().edges()));
    CHECK(transform_motion(qa, inverse(a)) == q);
    ProjectiveMotion noise = q;
    noise[1] = noise[1] + random_sym(rng);
    CHECK_FALSE(is_projective_motion(transform_points(lf.coords3(), a), transform_motion(noise, a), f.graph().edges()));
  }
  CHECK_THROWS_AS(transform_motion(q, Mat3{}), std::domain_error);
}

TEST_CASE("pointwise scaling") {
  std::mt19937_64 rng(6);
  const Framework f = random_framework(complete_graph(5), rng);
  const LiftedFramework lf = lift(f);
  const std::vector<Rational> ones(5, Rational(1));
  ProjectiveMotion q;
  for (int i = 0; i < 5; ++i) q.push_back(random_sym(rng));
  CHECK(scale_invariance_check(lf, q, ones));
  std::vector<Rational> s;
  for (int i = 0; i < 5; ++i) s.push_back(random_nonzero_rational(rng));
  CHECK(scale_invariance_check(lf, q, s));
  CHECK(scale_invariance_check(lf, lift_motion(trivial_motion_basis(f)[5]), s));
  s[2] = 0;
  CHECK_THROWS_AS(scale_invariance_check(lf, q, s), std::invalid_argument);
}

TEST_CASE("four-point map") {
  const std::array<Point, 4> targets{Point{1, 0}, Point{0, 0}, Point{0, 1}, Point{1, 1}};
  CHECK(four_point_projective_map(targets) == identity3());

  std::mt19937_64 rng(7);
  for (int t = 0; t < 15; ++t) {
    std::array<Point, 4> src;
    for (auto& p : src) p = random_rational_point(rng);
    Mat3 m;
    try {
      m = four_point_projective_map(src);
    } catch (const std::invalid_argument&) {
      continue;
    }
    CHECK(m[2][2] == 1);
    const Framework quad(Graph(4), std::vector<Point>(src.begin(), src.end()));
    CHECK(apply_projective(m, quad).coords() == std::vector<Point>(targets.begin(), targets.end()));

    // Map the quad somewhere else with b, then the four-point map of the image composed with b equals m up to scale.
    const Mat3 b = random_mat(rng);
    try {
      const auto moved = apply_projective(b, quad).coords();
      const Mat3 mb = four_point_projective_map({moved[0], moved[1], moved[2], moved[3]}) * b;
      CHECK(apply_projective(mb, quad).coords() == std::vector<Point>(targets.begin(), targets.end()));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(mb[i][j] * m[2][2] == m[i][j] * mb[2][2]);
    } catch (const PointAtInfinity&) {
    }
  }
  const std::array<Point, 4> collinear{Point{0, 0}, Point{1, 1}, Point{2, 2}, Point{0, 1}};
  CHECK_THROWS_AS(four_point_projective_map(collinear), std::invalid_argument);
  const std::array<Point, 4> last_collinear{Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{2, 0}};
  CHECK_THROWS_AS(four_point_projective_map(last_collinear), std::invalid_argument);
}

TEST_CASE("applying a projective map") {
  CHECK(apply_projective(identity3(), k4()) == k4());
  const Mat3 shift{Vec3{1, 0, 2}, Vec3{0, 1, -3}, Vec3{0, 0, 1}};
  CHECK(apply_projective(shift, k4()).at(3) == Point{1, -4});
  // Sends the line x = 1 to infinity.
  const Mat3 bad{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{1, 0, -1}};
  try {
    apply_projective(bad, k4());
    FAIL("expected PointAtInfinity");
  } catch (const PointAtInfinity& e) {
    CHECK(e.vertex() == 1);
  }
  CHECK_THROWS_AS(apply_projective(Mat3{}, k4()), std::domain_error);

  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    const Framework f = random_framework(complete_graph(5).without_edges(std::array<Edge, 1>{Edge{0, 4}}), rng);
    try {
      CHECK(dof(apply_projective(random_mat(rng), f)) == dof(f));
    } catch (const PointAtInfinity&) {
    }
  }
}

TEST_CASE("motion conversion pipeline") {
  std::mt19937_64 rng(9);
  const Framework f = random_framework(complete_graph(5).without_edges(std::array<Edge, 3>{Edge{0, 1}, Edge{1, 2}, Edge{3, 4}}), rng);
  const Motion q = random_motion_of(f, rng);
  CHECK(convert_motion_pipeline(f.graph(), f, f, identity3(), q) == q);

  for (int t = 0; t < 10; ++t) {
    const Mat3 a = random_mat(rng);
    Framework g = f;
    try {
      g = apply_projective(a, f);
    } catch (const PointAtInfinity&) {
      continue;
    }
    const Motion out = convert_motion_pipeline(f.graph(), f, g, a, q);
    CHECK(is_motion(g, out));
    for (const auto& e : complete_edges(5)) {
      CHECK(is_zero(dot3(d_vector(f.at(e.u), f.at(e.v)), q[e.u] - q[e.v])) ==
            is_zero(dot3(d_vector(g.at(e.u), g.at(e.v)), out[e.u] - out[e.v])));
    }
    // Scaling the map rescales the result by one global factor.
    Mat3 a2 = a;
    for (auto& row : a2)
      for (auto& x : row) x *= 3;
    const RatVector o1 = flatten(out), o2 = flatten(convert_motion_pipeline(f.graph(), f, g, a2, q));
    RatMatrix both(0, o1.size());
    both.append_row(o1);
    both.append_row(o2);
    CHECK(rank(both) <= 1);
  }
  const Mat3 shift{Vec3{1, 0, 1}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  CHECK_THROWS_AS(convert_motion_pipeline(f.graph(), f, f, shift, q), std::invalid_argument);
}
