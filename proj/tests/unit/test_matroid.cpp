#include <doctest.h>

#include <stdexcept>

#include <thread>

#include "cofmat/generators.hpp"
#include "cofmat/matroid.hpp"

using namespace cofmat;

namespace {

EdgeSet edges_of(std::initializer_list<std::pair<Vertex, Vertex>> list) {
  EdgeSet out;
  for (auto [a, b] : list) out.insert(make_edge(a, b));
  return out;
}

EdgeSet plus(EdgeSet e, std::initializer_list<Edge> extra) {
  e.insert(extra.begin(), extra.end());
  return e;
}

bool spans(const GenericMatroid& m, const EdgeSet& base, const Edge& e) {
  return base.contains(e) || m.rank(plus(base, {e})) == m.rank(base);
}

// Case conditions evaluated directly from rank queries.
bool has_k4(const GenericMatroid& m, const EdgeSet& base, const std::array<Vertex, 5>& u) {
  for (std::size_t skip = 0; skip < 5; ++skip) {
    std::vector<Vertex> four;
    for (std::size_t i = 0; i < 5; ++i)
      if (i != skip) four.push_back(u[i]);
    bool all = true;
    for (const auto& e : complete_edges(four)) all = all && spans(m, base, e);
    if (all) return true;
  }
  return false;
}

bool case_holds(const GenericMatroid& m, const EdgeSet& E, const std::array<Vertex, 5>& u, FiveSetCase kind) {
  const EdgeSet k = complete_edges(u);
  const auto addable = [&](const Edge& a, const Edge& b) {
    return !E.contains(a) && !E.contains(b) && m.independent(plus(E, {a, b}));
  };
  switch (kind) {
    case FiveSetCase::k4_in_closure: return has_k4(m, E, u);
    case FiveSetCase::spanned_plus_one:
      for (const auto& e : k) {
        bool all = true;
        for (const auto& f : k) all = all && spans(m, plus(E, {e}), f);
        if (all) return true;
      }
      return false;
    case FiveSetCase::two_nonadjacent:
      for (const auto& a : k)
        for (const auto& b : k)
          if (a < b && !a.adjacent_to(b) && addable(a, b)) return true;
      return false;
    case FiveSetCase::two_adjacent_star_center:
      for (const auto& a : k)
        for (const auto& b : k) {
          if (!(a < b) || !a.adjacent_to(b) || !addable(a, b)) continue;
          const Vertex c = AdjacentPair{a, b}.common();
          int deg = 0;
          for (const auto& e : k) deg += e.touches(c) && spans(m, E, e);
          if (deg >= 2) return true;
        }
      return false;
    case FiveSetCase::star_case: {
      EdgeSet in;
      for (const auto& e : k)
        if (spans(m, E, e)) in.insert(e);
      bool star = false;
      for (auto c : u) {
        star = star || (in.size() == 4 && std::all_of(in.begin(), in.end(), [c](const Edge& e) { return e.touches(c); }));
      }
      if (!star) return false;
      for (const auto& e : k)
        if (has_k4(m, plus(E, {e}), u)) return false;
      return true;
    }
  }
  return false;
}

void check_classification(const GenericMatroid& m, const Graph& h, std::array<Vertex, 5> u, FiveSetCase expected) {
  const auto c = m.classify_five_set(h, u);
  CHECK(to_string(c.kind) == to_string(expected));
  for (FiveSetCase earlier : {FiveSetCase::k4_in_closure, FiveSetCase::spanned_plus_one, FiveSetCase::two_nonadjacent,
                              FiveSetCase::two_adjacent_star_center}) {
    if (earlier == expected) break;
    CHECK_FALSE(case_holds(m, h.edges(), u, earlier));
  }
  CHECK(case_holds(m, h.edges(), u, expected));
}

}  // namespace

TEST_CASE("rank of complete graphs") {
  const GenericMatroid m(9, 1);
  for (std::size_t n = 3; n <= 9; ++n) {
    CHECK(m.rank(complete_edges(n)) == 3 * n - 6);
    for (auto r : m.rank_per_seed(complete_edges(n))) CHECK(r == 3 * n - 6);
  }
  CHECK(m.rank({}) == 0);
  CHECK(m.rank(edges_of({{0, 1}})) == 1);
  CHECK(m.is_rigid(complete_graph(4)));
  CHECK(m.is_rigid(Graph(2)));
}

TEST_CASE("K5 is a circuit and closure of K5 minus an edge is K5") {
  const GenericMatroid m(5, 2);
  const EdgeSet k5 = complete_edges(5);
  CHECK(m.is_circuit(k5));
  CHECK_FALSE(m.independent(k5));
  EdgeSet minus = k5;
  minus.erase({0, 1});
  CHECK(m.independent(minus));
  CHECK(m.closure(minus) == k5);
  CHECK(m.closure({}).empty());
  CHECK_FALSE(m.is_circuit(minus));
  CHECK_FALSE(m.is_circuit({}));
}

TEST_CASE("triangle is closed inside K4") {
  const GenericMatroid m(4, 3);
  const EdgeSet tri = edges_of({{0, 1}, {0, 2}, {1, 2}});
  CHECK(m.closure(tri) == tri);
  CHECK(m.closure(complete_edges(4)) == complete_edges(4));
}

TEST_CASE("bipartite anchors") {
  const GenericMatroid m(10, 4);
  CHECK(m.is_circuit(complete_bipartite(5, 5).edges()));
  const Graph k46 = complete_bipartite(4, 6);
  CHECK(m.independent(k46.edges()));
  CHECK(m.is_rigid(k46));
}

TEST_CASE("ground set is checked") {
  const GenericMatroid m(4, 5);
  CHECK_THROWS_AS(m.rank(edges_of({{0, 4}})), std::invalid_argument);
  CHECK_THROWS_AS(m.rank(EdgeSet{Edge{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(m.classify_five_set(complete_graph(6), {0, 1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("seeds are deterministic and cached ranks are reused") {
  const GenericMatroid a(6, 77), b(6, 77), c(6, 78);
  CHECK(a.seeds() == b.seeds());
  CHECK(a.certificate() == b.certificate());
  CHECK(a.seeds() != c.seeds());
  const EdgeSet k5 = complete_edges(5);
  (void)a.rank(k5);
  const auto size = a.cache_size();
  (void)a.rank(k5);
  CHECK(a.cache_size() == size);
}

TEST_CASE("concurrent queries agree") {
  const GenericMatroid m(8, 9);
  std::vector<std::size_t> ranks(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    threads.emplace_back([&, i] { ranks[i] = m.rank(complete_edges(5 + i)); });
  }
  for (auto& t : threads) t.join();
  CHECK(ranks == std::vector<std::size_t>{9, 12, 15, 18});
}

TEST_CASE("local degrees of freedom") {
  const GenericMatroid m(6, 6);
  const std::array<Edge, 1> e{Edge{0, 1}};
  const Graph g = complete_graph(4).without_edges(e);
  const std::vector<Vertex> all{0, 1, 2, 3};
  CHECK(m.local_dof(g, all) == 1);
  const std::vector<Vertex> tri{1, 2, 3};
  CHECK(m.local_dof(g, tri) == 0);
  CHECK(m.local_dof(Graph(6), std::vector<Vertex>{0, 1, 2, 3, 4}) == 9);
}

TEST_CASE("contracted closure") {
  const GenericMatroid m(6, 8);
  const EdgeSet e0 = complete_edges(4);
  // K4 plus a degree-three vertex is rigid on five vertices; its closure is
  // K5, and the part outside cl(K4) is the star at vertex 4.
  const EdgeSet f = edges_of({{0, 4}, {1, 4}, {2, 4}});
  CHECK(m.contracted_closure(e0, f) == edges_of({{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  CHECK_THROWS_AS(m.contracted_closure(e0, edges_of({{0, 1}})), std::invalid_argument);
}

TEST_CASE("five-set classifier on known instances") {
  const GenericMatroid m(8, 10);
  check_classification(m, Graph(6, edges_of({{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}})),
                       {0, 2, 3, 4, 5}, FiveSetCase::k4_in_closure);
  // K5 minus two disjoint edges: no K4 in the closure, and re-adding 01 gives a base of K5.
  const Graph ii(5, edges_of({{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}));
  check_classification(m, ii, {0, 1, 2, 3, 4}, FiveSetCase::spanned_plus_one);
  CHECK(m.classify_five_set(ii, {0, 1, 2, 3, 4}).edges == std::vector<Edge>{{0, 1}});
  // The empty graph: the first disjoint pair is 01, 23.
  const auto empty = m.classify_five_set(Graph(5), {4, 3, 2, 1, 0});
  CHECK(empty.kind == FiveSetCase::two_nonadjacent);
  CHECK(empty.edges == std::vector<Edge>{{0, 1}, {2, 3}});
  check_classification(m, Graph(5, edges_of({{0, 3}, {0, 4}, {1, 3}, {1, 4}})), {0, 1, 2, 3, 4},
                       FiveSetCase::two_nonadjacent);
  check_classification(m, Graph(5, edges_of({{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}})), {0, 1, 2, 3, 4},
                       FiveSetCase::two_adjacent_star_center);
}

TEST_CASE("five-set classifier rejects bad input") {
  const GenericMatroid m(6, 11);
  CHECK_THROWS_AS(m.classify_five_set(complete_graph(5), {0, 1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(m.classify_five_set(Graph(5), {0, 1, 2, 3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(m.classify_five_set(Graph(5), {0, 1, 2, 3, 5}), std::invalid_argument);
}

TEST_CASE("five-set classifier witnesses validate on random graphs") {
  const GenericMatroid m(10, 12);
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto rng = trial_rng(12, t);
    const std::size_t n = 5 + t % 5;
    const Graph h = random_independent_graph(m, n, (t * 7) % (3 * n - 5), rng);
    std::vector<Vertex> vs(n);
    for (Vertex i = 0; i < n; ++i) vs[i] = i;
    std::shuffle(vs.begin(), vs.end(), rng);
    std::array<Vertex, 5> u{vs[0], vs[1], vs[2], vs[3], vs[4]};
    std::sort(u.begin(), u.end());
    check_classification(m, h, u, m.classify_five_set(h, u).kind);
  }
}

TEST_CASE("type-star vertex") {
  const GenericMatroid m(10, 13);
  // Core K4 on {5,6,7,8}; v1..v4 each see v5 and one core vertex; vertex 9
  // sees v1..v4 and 6; vertex 0 sees v1..v5.
  EdgeSet e = complete_edges(std::vector<Vertex>{5, 6, 7, 8});
  const Vertex core[4]{6, 7, 8, 6};
  for (Vertex i = 1; i <= 4; ++i) e.insert({{i, 5}, {i, core[i - 1]}, {i, 9}});
  e.insert({6, 9});
  for (Vertex i = 1; i <= 5; ++i) e.insert({0, i});
  const Graph g(10, e);
  CHECK(g.edge_count() == 24);
  CHECK(m.is_type_star(g, 0));
  CHECK(m.is_rigid(g));
  CHECK(m.independent(g.edges()));

  CHECK_FALSE(m.is_type_star(g, 9));
  CHECK_FALSE(m.is_type_star(complete_graph(6), 0));
}

TEST_CASE("operation harness") {
  const GenericMatroid m(6, 14);
  const Graph k5 = complete_graph(5);
  CHECK_THROWS_AS(m.check_op_preserves_independence(k5, k5), std::invalid_argument);
  CHECK(m.check_op_preserves_independence(complete_graph(4), zero_extension(complete_graph(4), {0, 1, 2})));
  CHECK_FALSE(m.check_op_preserves_independence(complete_graph(4), complete_graph(5)));
}

TEST_CASE("generated operation instances preserve independence") {
  const GenericMatroid m(12, 15);
  for (auto op : kAllOperations) {
    for (std::uint64_t t = 0; t < 5; ++t) {
      auto rng = trial_rng(15, t);
      const OpTrial trial = random_op_trial(op, m, rng);
      CHECK(trial.after.n() == trial.before.n() + 1);
      CHECK(m.check_op_preserves_independence(trial.before, trial.after));
    }
  }
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(random_op_trial(Operation::zero_extension, GenericMatroid(6, 1), rng), std::invalid_argument);
}
