#include "cofmat/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cofmat {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  const long num = std::uniform_int_distribution<long>(-max_num, max_num)(rng);
  const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational random_nonzero_rational(std::mt19937_64& rng, long max_num, long max_den) {
  for (;;) {
    Rational r = random_rational(rng, max_num, max_den);
    if (!is_zero(r)) return r;
  }
}

Point random_rational_point(std::mt19937_64& rng) {
  Rational x = random_rational(rng);
  return {std::move(x), random_rational(rng)};
}

Motion random_motion_of(const Framework& f, std::mt19937_64& rng) {
  const auto kernel = kernel_basis(cofactor_matrix(f));
  RatVector v(3 * f.n());
  std::uniform_int_distribution<long> w(-5, 5);
  for (const auto& z : kernel) {
    const Rational c(w(rng));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * z[i];
  }
  return unflatten(v);
}

Graph random_independent_graph(const GenericMatroid& m, std::size_t n, std::size_t target, std::mt19937_64& rng) {
  if (n > m.n()) throw std::invalid_argument("graph larger than the matroid ground set");
  const EdgeSet all = complete_edges(n);
  std::vector<Edge> order(all.begin(), all.end());
  std::shuffle(order.begin(), order.end(), rng);
  EdgeSet kept;
  for (const auto& e : order) {
    if (kept.size() >= target) break;
    kept.insert(e);
    if (!m.independent(kept)) kept.erase(e);
  }
  return Graph(n, kept);
}

std::string to_string(Operation op) {
  switch (op) {
    case Operation::zero_extension: return "0-extension";
    case Operation::one_extension: return "1-extension";
    case Operation::x_replacement: return "X-replacement";
    case Operation::vertex_split: return "vertex-split";
    case Operation::v_replacement: return "V-replacement";
    case Operation::double_v: return "double-V-replacement";
  }
  return "unknown";
}

namespace {

constexpr int kAttempts = 200;

template <typename T>
T pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::vector<Vertex> sample_vertices(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<Vertex> all(n);
  for (Vertex i = 0; i < n; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

Graph base_graph(const GenericMatroid& m, std::mt19937_64& rng, std::size_t slack) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(5, 9)(rng);
  return random_independent_graph(m, n, 3 * n - 6 - slack, rng);
}

std::vector<Edge> edge_list(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

std::optional<OpTrial> try_once(Operation op, const GenericMatroid& m, std::mt19937_64& rng) {
  const std::size_t slack = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  switch (op) {
    case Operation::zero_extension: {
      Graph h = base_graph(m, rng, slack);
      const auto t = sample_vertices(h.n(), 3, rng);
      Graph g = zero_extension(h, {t[0], t[1], t[2]});
      return OpTrial{op, std::move(h), std::move(g)};
    }
    case Operation::one_extension: {
      Graph h = base_graph(m, rng, slack);
      const Edge e = pick(edge_list(h), rng);
      std::vector<Vertex> rest;
      for (Vertex w = 0; w < h.n(); ++w)
        if (!e.touches(w)) rest.push_back(w);
      std::shuffle(rest.begin(), rest.end(), rng);
      Graph g = one_extension(h, e, {e.u, e.v, rest[0], rest[1]});
      return OpTrial{op, std::move(h), std::move(g)};
    }
    case Operation::x_replacement: {
      Graph h = base_graph(m, rng, slack);
      const auto edges = edge_list(h);
      const Edge e = pick(edges, rng);
      std::vector<Edge> disjoint;
      for (const auto& f : edges)
        if (!f.adjacent_to(e)) disjoint.push_back(f);
      if (disjoint.empty()) return std::nullopt;
      const Edge f = pick(disjoint, rng);
      std::vector<Vertex> rest;
      for (Vertex w = 0; w < h.n(); ++w)
        if (!e.touches(w) && !f.touches(w)) rest.push_back(w);
      if (rest.empty()) return std::nullopt;
      Graph g = x_replacement(h, e, f, pick(rest, rng));
      return OpTrial{op, std::move(h), std::move(g)};
    }
    case Operation::vertex_split: {
      Graph h = base_graph(m, rng, slack);
      const Vertex u = std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(h.n() - 1))(rng);
      auto nbrs = h.neighbors(u);
      if (nbrs.size() < 2) return std::nullopt;
      std::shuffle(nbrs.begin(), nbrs.end(), rng);
      std::vector<Vertex> u1, u3;
      std::bernoulli_distribution coin(0.5);
      for (std::size_t i = 2; i < nbrs.size(); ++i) (coin(rng) ? u1 : u3).push_back(nbrs[i]);
      Graph g = vertex_split(h, u, u1, {nbrs[0], nbrs[1]}, u3);
      return OpTrial{op, std::move(h), std::move(g)};
    }
    case Operation::v_replacement: {
      Graph h = base_graph(m, rng, slack);
      const Vertex v1 = std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(h.n() - 1))(rng);
      auto nbrs = h.neighbors(v1);
      if (nbrs.size() < 2) return std::nullopt;
      std::shuffle(nbrs.begin(), nbrs.end(), rng);
      const Edge e = make_edge(v1, nbrs[0]);
      const Edge f = make_edge(v1, nbrs[1]);
      EdgeSet reduced = h.edges();
      reduced.erase(e);
      reduced.erase(f);
      const std::size_t r = m.rank(reduced);
      std::vector<Vertex> spanned;
      for (Vertex w = 0; w < h.n(); ++w) {
        if (w == v1 || w == nbrs[0] || w == nbrs[1]) continue;
        EdgeSet t = reduced;
        t.insert(make_edge(v1, w));
        if (m.rank(t) == r) spanned.push_back(w);
      }
      if (spanned.size() < 2) return std::nullopt;
      std::shuffle(spanned.begin(), spanned.end(), rng);
      Graph g = v_replacement(h, e, f, {spanned[0], spanned[1]});
      return OpTrial{op, std::move(h), std::move(g)};
    }
    case Operation::double_v: {
      Graph h = base_graph(m, rng, 2 + slack);
      if (h.n() < 5) return std::nullopt;
      const auto u = sample_vertices(h.n(), 5, rng);
      const EdgeSet k = complete_edges(u);
      std::vector<AdjacentPair> pairs;
      for (auto i = k.begin(); i != k.end(); ++i)
        for (auto j = std::next(i); j != k.end(); ++j) {
          if (!i->adjacent_to(*j) || h.has_edge(*i) || h.has_edge(*j)) continue;
          EdgeSet t = h.edges();
          t.insert(*i);
          t.insert(*j);
          if (m.independent(t)) pairs.push_back({*i, *j});
        }
      if (pairs.size() < 2) return std::nullopt;
      const AdjacentPair p1 = pick(pairs, rng);
      std::vector<AdjacentPair> others;
      for (const auto& p : pairs)
        if (p.common() != p1.common()) others.push_back(p);
      if (others.empty()) return std::nullopt;
      const AdjacentPair p2 = pick(others, rng);
      const std::array<Edge, 2> add{p1.first, p1.second};
      Graph before = h.with_edges(add);
      Graph g = double_v_replacement(before, p1, p2, {u[0], u[1], u[2], u[3], u[4]});
      return OpTrial{op, std::move(before), std::move(g)};
    }
  }
  return std::nullopt;
}

}  // namespace

OpTrial random_op_trial(Operation op, const GenericMatroid& m, std::mt19937_64& rng) {
  if (m.n() < 10) throw std::invalid_argument("operation trials need a ground set of at least 10 vertices");
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    if (auto t = try_once(op, m, rng)) return std::move(*t);
  }
  throw std::runtime_error("no valid " + to_string(op) + " instance found");
}

}  // namespace cofmat
