#include "verify.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "cofmat/badmap.hpp"
#include "cofmat/generators.hpp"
#include "cofmat/matroid.hpp"
#include "cofmat/projective.hpp"
#include "io.hpp"

namespace cofmat::verify {

using nlohmann::json;
using io::to_json;

namespace {

void fail(SuiteOutcome& out, json counterexample) {
  out.pass = false;
  out.counterexamples.push_back(std::move(counterexample));
}

json matroid_certificate(const GenericMatroid& m) {
  json pts = json::array();
  for (const auto& c : m.certificate()) pts.push_back(io::points_json(c));
  return {{"master_seed", m.master_seed()}, {"seeds", m.seeds()}, {"points", pts}};
}

Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  EdgeSet edges;
  for (const auto& e : complete_edges(n))
    if (coin(rng)) edges.insert(e);
  return Graph(n, edges);
}

Framework random_spanning_framework(const Graph& g, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < g.n(); ++i) pts.push_back(random_rational_point(rng));
    Framework f(g, std::move(pts));
    if (f.spans_plane()) return f;
  }
}

Mat3 random_nonsingular(std::mt19937_64& rng) {
  for (;;) {
    Mat3 a;
    for (auto& row : a)
      for (auto& x : row) x = random_rational(rng, 9, 4);
    if (!is_zero(det(a))) return a;
  }
}

std::size_t pick_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

SuiteOutcome vandermonde(std::size_t trials, std::uint64_t seed) {
  SuiteOutcome out;
  std::size_t checked = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    std::array<Point, 4> p;
    for (auto& q : p) q = random_rational_point(rng);
    const auto c = vandermonde_identity_check(p[0], p[1], p[2], p[3]);
    ++checked;
    if (!c.holds()) fail(out, {{"trial", t}, {"points", io::points_json(p)}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}});
  }
  json general = json::object();
  for (int d = 2; d <= 4; ++d) {
    std::size_t count = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      auto rng = trial_rng(seed, 1000000 * static_cast<std::uint64_t>(d) + t);
      std::vector<Point> pts;
      while (pts.size() < static_cast<std::size_t>(d) + 1) {
        Point q = random_rational_point(rng);
        if (std::none_of(pts.begin(), pts.end(), [&](const Point& r) { return r.x == q.x; })) pts.push_back(q);
      }
      const auto c = vandermonde_general_check(d, pts);
      ++count;
      if (!c.holds()) {
        fail(out, {{"trial", t}, {"d", d}, {"points", io::points_json(pts)}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}});
      }
    }
    general[std::to_string(d)] = count;
  }
  out.results = {{"four_point_checked", checked}, {"general_checked", general}};
  return out;
}

SuiteOutcome lifting(std::size_t trials, std::uint64_t seed) {
  SuiteOutcome out;
  std::size_t motions = 0, non_motions = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const Framework f = random_spanning_framework(random_graph(pick_size(rng, 3, 7), 0.6, rng), rng);
    Motion q;
    if (t % 2 == 0) {
      q = random_motion_of(f, rng);
    } else {
      for (std::size_t i = 0; i < f.n(); ++i) q.push_back({random_rational(rng), random_rational(rng), random_rational(rng)});
    }
    const bool planar = is_motion(f, q);
    (planar ? motions : non_motions) += 1;
    const LiftedFramework lf = lift(f);
    const ProjectiveMotion lq = lift_motion(q);
    bool entrywise = true;
    for (const auto& e : f.graph().edges()) {
      const Rational tr = projective_condition(lf.coords3()[e.u], lf.coords3()[e.v], lq[e.u], lq[e.v]);
      if (tr != 2 * dot3(d_vector(f.at(e.u), f.at(e.v)), q[e.u] - q[e.v])) entrywise = false;
    }
    if (planar != is_projective_motion(lf, lq, f.graph().edges()) || !entrywise || unlift_motion(lq) != q) {
      fail(out, {{"trial", t}, {"framework", to_json(f)}, {"motion", to_json(q)}});
    }
  }
  out.results = {{"motions", motions}, {"non_motions", non_motions}};
  return out;
}

SuiteOutcome trivial_motions(std::size_t trials, std::uint64_t seed) {
  SuiteOutcome out;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const std::size_t n = pick_size(rng, 3, 7);
    const Framework f = random_spanning_framework(complete_graph(n), rng);
    const auto basis = trivial_motion_basis(f);
    RatMatrix stacked(0, 3 * n);
    bool in_kernel = true;
    for (const auto& q : basis) {
      in_kernel = in_kernel && is_motion(f, q);
      stacked.append_row(flatten(q));
    }
    // Lift with random nonzero z so the 1/z factors are exercised.
    std::vector<Vec3> c3;
    for (const auto& p : f.coords()) {
      const Rational z = random_nonzero_rational(rng);
      c3.push_back({p.x * z, p.y * z, z});
    }
    const LiftedFramework lf(f.graph(), c3);
    const auto pbasis = trivial_projective_basis(lf);
    RatMatrix pstacked(0, 6 * n);
    bool all_pairs = pbasis.size() == 3 * n + 6;
    for (const auto& q : pbasis) {
      all_pairs = all_pairs && is_projective_motion(lf, q, complete_edges(n));
      RatVector row;
      for (const auto& s : q)
        for (int i = 0; i < 3; ++i)
          for (int j = i; j < 3; ++j) row.push_back(s(i, j));
      pstacked.append_row(row);
    }
    const std::size_t r = rank(stacked);
    const std::size_t pr = rank(pstacked);
    if (!in_kernel || r != 6 || !all_pairs || pr != 3 * n + 6) {
      fail(out, {{"trial", t}, {"framework", to_json(f)}, {"rank", r}, {"projective_rank", pr}, {"in_kernel", in_kernel},
                 {"projective_all_pairs", all_pairs}});
    }
  }
  out.results = {{"frameworks_checked", trials}};
  return out;
}

// Zero pattern of the projective condition over the edges.
std::vector<bool> pattern(std::span<const Vec3> pts, const ProjectiveMotion& q, const EdgeSet& pairs) {
  std::vector<bool> z;
  for (const auto& e : pairs) z.push_back(is_zero(projective_condition(pts[e.u], pts[e.v], q[e.u], q[e.v])));
  return z;
}

SuiteOutcome projective_invariance(std::size_t trials, std::uint64_t seed) {
  SuiteOutcome out;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const Framework f = random_spanning_framework(random_graph(pick_size(rng, 4, 7), 0.7, rng), rng);
    const std::size_t n = f.n();
    const LiftedFramework lf = lift(f);
    ProjectiveMotion q;
    if (t % 2 == 0) {
      q = lift_motion(random_motion_of(f, rng));
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        q.emplace_back(random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng),
                       random_rational(rng), random_rational(rng));
      }
    }
    std::vector<Rational> scalars;
    for (std::size_t i = 0; i < n; ++i) scalars.push_back(random_nonzero_rational(rng));
    const bool scaled_ok = scale_invariance_check(lf, q, scalars);

    const Mat3 a = random_nonsingular(rng);
    const auto moved = transform_points(lf.coords3(), a);
    const ProjectiveMotion qa = transform_motion(q, a);
    const bool transform_ok = pattern(lf.coords3(), q, f.graph().edges()) == pattern(moved, qa, f.graph().edges());
    const bool group_ok = transform_motion(qa, inverse(a)) == q;

    // Rigidity under projective maps, and the projective dimension count.
    bool dof_ok = true;
    int dof_before = dof(f), dof_after = 0;
    for (;;) {
      try {
        dof_after = dof(apply_projective(random_nonsingular(rng), f));
        break;
      } catch (const PointAtInfinity&) {
      }
    }
    dof_ok = dof_before == dof_after;
    const std::size_t pdim = projective_motion_space_dimension(lf);
    const bool dim_ok = pdim == 3 * n + 6 + static_cast<std::size_t>(dof_before);

    if (!scaled_ok || !transform_ok || !group_ok || !dof_ok || !dim_ok) {
      fail(out, {{"trial", t},           {"framework", to_json(f)}, {"matrix", to_json(a)},
                 {"scaling", scaled_ok}, {"transform", transform_ok}, {"group_action", group_ok},
                 {"dof_before", dof_before}, {"dof_after", dof_after}, {"projective_dimension", pdim}});
    }
  }
  out.results = {{"instances", trials}};
  return out;
}

SuiteOutcome ops_preserve(std::size_t trials, std::uint64_t seed) {
  SuiteOutcome out;
  const GenericMatroid m(12, seed);
  json counts = json::object();
  for (std::size_t k = 0; k < kAllOperations.size(); ++k) {
    const Operation op = kAllOperations[k];
    std::size_t ok = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      auto rng = trial_rng(seed, 8 * t + k);
      const OpTrial trial = random_op_trial(op, m, rng);
      if (m.check_op_preserves_independence(trial.before, trial.after)) {
        ++ok;
      } else {
        fail(out, {{"operation", to_string(op)}, {"trial", t}, {"before", to_json(trial.before)}, {"after", to_json(trial.after)}});
      }
    }
    counts[to_string(op)] = {{"trials", trials}, {"preserved", ok}};
  }
  out.results = counts;
  out.certificates["matroid"] = matroid_certificate(m);
  return out;
}

SuiteOutcome k5_circuit(std::size_t trials, std::uint64_t seed) {
  SuiteOutcome out;
  const GenericMatroid m(10, seed);
  const auto k5 = complete_graph(5).edges();
  const auto k55 = complete_bipartite(5, 5).edges();
  const auto k46 = complete_bipartite(4, 6).edges();
  const bool k5_circuit = m.is_circuit(k5);
  const bool k55_circuit = m.is_circuit(k55);
  const bool k46_base = k46.size() == 24 && m.independent(k46) && m.rank(k46) == 3 * 10 - 6;
  if (!k5_circuit) fail(out, {{"check", "K5 circuit"}});
  if (!k55_circuit) fail(out, {{"check", "K5,5 circuit"}});
  if (!k46_base) fail(out, {{"check", "K4,6 base"}});

  json ranks = json::object();
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto per_seed = m.rank_per_seed(complete_edges(n));
    ranks[std::to_string(n)] = per_seed;
    for (auto r : per_seed)
      if (r != 3 * n - 6) fail(out, {{"check", "rank K_n"}, {"n", n}, {"per_seed", per_seed}});
  }
  std::size_t copies = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    std::vector<Vertex> all(10);
    for (Vertex i = 0; i < 10; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(5);
    ++copies;
    if (!m.is_circuit(complete_edges(all))) fail(out, {{"check", "K5 copy circuit"}, {"vertices", all}});
  }
  out.results = {{"K5_circuit", k5_circuit}, {"K55_circuit", k55_circuit}, {"K46_base", k46_base},
                 {"rank_complete", ranks}, {"random_K5_copies", copies}};
  out.certificates["matroid"] = matroid_certificate(m);
  return out;
}

SuiteOutcome badmap_star(std::size_t trials, std::uint64_t seed) {
  SuiteOutcome out;
  std::size_t star = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_rng(seed, t)();
    const auto pts = random_points(6, s);
    const std::array<Point, 6> p{pts[0], pts[1], pts[2], pts[3], pts[4], pts[5]};
    const BadMapEval e = build_bad_map(p);
    bool ok = star_condition_check(e);
    for (int k = 1; k <= 5; ++k) ok = ok && is_zero(e.delta(0, k));
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) ok = ok && !is_zero(e.delta(i, j));
    ok = ok && e.b[1] == Vec3{0, 0, 0} && e.b[5] == Vec3{0, 0, 0};
    if (ok) {
      ++star;
    } else {
      json zeros = json::array();
      for (const auto& [ij, d] : e.deltas)
        if (is_zero(d)) zeros.push_back({ij.first, ij.second});
      fail(out, {{"trial", t}, {"points_seed", s}, {"points", io::points_json(pts)}, {"zero_deltas", zeros}});
    }
  }
  std::size_t t1_checked = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 500000 + t);
    for (;;) {
      const Point u5 = random_rational_point(rng);
      try {
        const auto c = t1_ratio_check(u5);
        ++t1_checked;
        if (!c.holds()) fail(out, {{"check", "t1 ratio"}, {"u5", to_json(u5)}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}});
        break;
      } catch (const std::domain_error&) {
      }
    }
  }
  out.results = {{"star_trials", trials}, {"star_passed", star}, {"t1_ratio_checked", t1_checked}};
  return out;
}

SuiteOutcome pin_determinant(std::size_t trials, std::uint64_t seed) {
  SuiteOutcome out;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    std::array<Point, 3> p;
    for (auto& q : p) q = random_rational_point(rng);
    const Rational lhs = det(pinned_trivial_matrix(p[0], p[1], p[2]));
    const Rational& ya = p[0].y;
    const Rational& yb = p[1].y;
    const Rational& yc = p[2].y;
    const Rational rhs = (ya - yb) * (ya - yb) * (yc - ya) * (yb - yc);
    if (lhs != rhs) fail(out, {{"check", "pin determinant"}, {"points", io::points_json(p)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
  }
  json by_k = {{"0", 0}, {"1", 0}, {"2", 0}};
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 700000 + t);
    const std::size_t n = pick_size(rng, 5, 8);
    const std::size_t k = t % 3;
    EdgeSet all = complete_edges(n);
    std::vector<Edge> order(all.begin(), all.end());
    std::shuffle(order.begin(), order.end(), rng);
    order.resize(3 * n - 6 - k);
    const Framework f = random_spanning_framework(Graph(n, order), rng);
    std::optional<PinTriple> pins;
    for (Vertex a = 0; a < n && !pins; ++a)
      for (Vertex b = 0; b < n && !pins; ++b)
        for (Vertex c = 0; c < n && !pins; ++c) {
          try {
            validate_pins(f, {a, b, c});
            pins = PinTriple{a, b, c};
          } catch (const std::invalid_argument&) {
          }
        }
    if (!pins) continue;
    const RatMatrix ext = extended_cofactor_matrix(f, *pins);
    const bool row_independent = rank(ext) == ext.rows();
    const int d = dof(f);
    const auto basis = nontrivial_motion_basis(f, *pins);
    bool basis_ok = basis.size() == static_cast<std::size_t>(d);
    for (const auto& q : basis) basis_ok = basis_ok && is_motion(f, q);
    by_k[std::to_string(k)] = by_k[std::to_string(k)].get<int>() + 1;
    if (row_independent != (d == static_cast<int>(k)) || !basis_ok) {
      fail(out, {{"check", "pinned equivalence"}, {"framework", to_json(f)}, {"k", k}, {"dof", d}, {"row_independent", row_independent}});
    }
  }
  out.results = {{"determinants_checked", trials}, {"equivalence_checked_by_k", by_k}};
  return out;
}

SuiteOutcome matroid_axioms(std::size_t trials, std::uint64_t seed) {
  SuiteOutcome out;
  const GenericMatroid m(5, seed);
  const auto check_pair = [&](const EdgeSet& a, const EdgeSet& b) {
    EdgeSet uni = a, inter;
    uni.insert(b.begin(), b.end());
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(inter, inter.end()));
    const auto ra = m.rank(a), rb = m.rank(b);
    bool ok = m.rank(uni) + m.rank(inter) <= ra + rb && ra <= a.size();
    if (std::includes(b.begin(), b.end(), a.begin(), a.end())) ok = ok && ra <= rb;
    for (const auto& e : b) {
      EdgeSet t = a;
      if (!t.insert(e).second) continue;
      const auto rt = m.rank(t);
      ok = ok && (rt == ra || rt == ra + 1);
    }
    if (!ok) fail(out, {{"A", to_json(a)}, {"B", to_json(b)}});
  };
  const auto subsets = [](const EdgeSet& ground) {
    const std::vector<Edge> g(ground.begin(), ground.end());
    std::vector<EdgeSet> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << g.size()); ++mask) {
      EdgeSet s;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (mask >> i & 1) s.insert(g[i]);
      out.push_back(std::move(s));
    }
    return out;
  };
  const auto k4 = subsets(complete_edges(4));
  for (const auto& a : k4)
    for (const auto& b : k4) check_pair(a, b);

  const EdgeSet k5_set = complete_edges(5);
  const std::vector<Edge> k5(k5_set.begin(), k5_set.end());
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    std::uniform_int_distribution<std::size_t> mask(0, (std::size_t{1} << k5.size()) - 1);
    EdgeSet a, b;
    const auto ma = mask(rng), mb = mask(rng);
    for (std::size_t i = 0; i < k5.size(); ++i) {
      if (ma >> i & 1) a.insert(k5[i]);
      if (mb >> i & 1) b.insert(k5[i]);
    }
    check_pair(a, b);
  }
  out.results = {{"K4_pairs", k4.size() * k4.size()}, {"K5_sampled_pairs", trials}};
  out.certificates["matroid"] = matroid_certificate(m);
  return out;
}

SuiteOutcome pipeline(std::size_t trials, std::uint64_t seed) {
  SuiteOutcome out;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const Framework src = random_spanning_framework(random_graph(pick_size(rng, 4, 7), 0.6, rng), rng);
    const Motion q = random_motion_of(src, rng);
    Mat3 a;
    std::optional<Framework> dst;
    while (!dst) {
      a = random_nonsingular(rng);
      try {
        dst = apply_projective(a, src);
      } catch (const PointAtInfinity&) {
      }
    }
    const Motion qd = convert_motion_pipeline(src.graph(), src, *dst, a, q);
    bool pattern_ok = true;
    for (const auto& e : complete_edges(src.n())) {
      const bool before = is_zero(dot3(d_vector(src.at(e.u), src.at(e.v)), q[e.u] - q[e.v]));
      const bool after = is_zero(dot3(d_vector(dst->at(e.u), dst->at(e.v)), qd[e.u] - qd[e.v]));
      pattern_ok = pattern_ok && before == after;
    }
    const bool motion_ok = is_motion(*dst, qd);
    if (!motion_ok || !pattern_ok) {
      fail(out, {{"trial", t}, {"framework", to_json(src)}, {"matrix", to_json(a)}, {"motion", to_json(q)},
                 {"is_motion", motion_ok}, {"pattern_preserved", pattern_ok}});
    }
  }
  out.results = {{"instances", trials}};
  return out;
}

using Runner = std::function<SuiteOutcome(std::size_t, std::uint64_t)>;

const std::map<std::string, std::pair<Runner, std::size_t>>& registry() {
  static const std::map<std::string, std::pair<Runner, std::size_t>> r{
      {"vandermonde", {vandermonde, 100}},
      {"lifting", {lifting, 50}},
      {"trivial-motions", {trivial_motions, 50}},
      {"projective-invariance", {projective_invariance, 20}},
      {"ops-preserve", {ops_preserve, 50}},
      {"k5-circuit", {k5_circuit, 20}},
      {"badmap-star", {badmap_star, 25}},
      {"pin-determinant", {pin_determinant, 50}},
      {"matroid-axioms", {matroid_axioms, 500}},
      {"pipeline", {pipeline, 20}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"vandermonde",  "lifting",     "trivial-motions", "projective-invariance",
                                              "ops-preserve", "k5-circuit",  "badmap-star",     "pin-determinant",
                                              "matroid-axioms", "pipeline"};
  return names;
}

std::size_t default_trials(const std::string& suite) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second.second;
}

SuiteOutcome run_suite(const std::string& suite, std::size_t trials, std::uint64_t seed) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  SuiteOutcome out = it->second.first(trials, seed);
  out.certificates["seed"] = seed;
  out.certificates["trials"] = trials;
  out.certificates["trial_rng"] = "mt19937_64 over seed_seq(seed lo, seed hi, trial lo, trial hi)";
  return out;
}

}  // namespace cofmat::verify
