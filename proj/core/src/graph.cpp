#include "cofmat/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cofmat {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

EdgeSet complete_edges(std::span<const Vertex> vertices) {
  EdgeSet out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) out.insert(make_edge(vertices[i], vertices[j]));
  return out;
}

EdgeSet complete_edges(std::size_t n) {
  EdgeSet out;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) out.insert({i, j});
  return out;
}

std::set<Vertex> vertices_of(const EdgeSet& edges) {
  std::set<Vertex> vs;
  for (const auto& e : edges) {
    vs.insert(e.u);
    vs.insert(e.v);
  }
  return vs;
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
  for (const auto& e : edges) insert_checked(e);
}

Graph::Graph(std::size_t n, const EdgeSet& edges) : n_(n) {
  for (const auto& e : edges) insert_checked(e);
}

void Graph::insert_checked(Edge e) {
  const Edge c = make_edge(e.u, e.v);
  if (c.v >= n_) {
    throw std::invalid_argument("edge " + std::to_string(c.u) + "-" + std::to_string(c.v) +
                                " out of range for " + std::to_string(n_) + " vertices");
  }
  if (!edges_.insert(c).second) {
    throw std::invalid_argument("duplicate edge " + std::to_string(c.u) + "-" + std::to_string(c.v));
  }
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const auto& e : edges_) {
    if (e.u == v) out.push_back(e.v);
    else if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Graph::degree(Vertex v) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.touches(v); }));
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  Graph g = *this;
  for (const auto& e : extra) g.insert_checked(e);
  return g;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  Graph g = *this;
  for (const auto& e : removed) {
    if (g.edges_.erase(make_edge(e.u, e.v)) == 0) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in graph");
    }
  }
  return g;
}

Graph Graph::without_vertex_edges(Vertex v) const {
  Graph g = *this;
  std::erase_if(g.edges_, [v](const Edge& e) { return e.touches(v); });
  return g;
}

Graph complete_graph(std::size_t n) { return Graph(n, complete_edges(n)); }

Graph complete_bipartite(std::size_t a, std::size_t b) {
  EdgeSet edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) edges.insert({i, static_cast<Vertex>(a + j)});
  return Graph(a + b, edges);
}

namespace {

template <std::size_t N>
void require_distinct_in_range(const Graph& g, const std::array<Vertex, N>& vs, const char* what) {
  for (std::size_t i = 0; i < N; ++i) {
    if (vs[i] >= g.n()) throw std::invalid_argument(std::string(what) + ": vertex out of range");
    for (std::size_t j = i + 1; j < N; ++j)
      if (vs[i] == vs[j]) throw std::invalid_argument(std::string(what) + ": vertices not distinct");
  }
}

void require_edge(const Graph& g, Edge e, const char* what) {
  if (!g.has_edge(make_edge(e.u, e.v))) throw std::invalid_argument(std::string(what) + ": edge not in graph");
}

template <std::size_t N>
Graph attach_new_vertex(const Graph& base, const std::array<Vertex, N>& targets) {
  const auto v = static_cast<Vertex>(base.n());
  EdgeSet edges = base.edges();
  for (auto t : targets) edges.insert(make_edge(v, t));
  return Graph(base.n() + 1, edges);
}

}  // namespace

Graph zero_extension(const Graph& g, std::array<Vertex, 3> targets) {
  require_distinct_in_range(g, targets, "0-extension");
  return attach_new_vertex(g, targets);
}

Graph one_extension(const Graph& g, Edge removed, std::array<Vertex, 4> targets) {
  require_distinct_in_range(g, targets, "1-extension");
  require_edge(g, removed, "1-extension");
  const auto has = [&](Vertex w) { return std::find(targets.begin(), targets.end(), w) != targets.end(); };
  if (!has(removed.u) || !has(removed.v)) {
    throw std::invalid_argument("1-extension: targets must contain both endpoints of the removed edge");
  }
  const std::array<Edge, 1> rm{removed};
  return attach_new_vertex(g.without_edges(rm), targets);
}

Graph x_replacement(const Graph& g, Edge e, Edge f, Vertex fifth) {
  require_edge(g, e, "X-replacement");
  require_edge(g, f, "X-replacement");
  e = make_edge(e.u, e.v);
  f = make_edge(f.u, f.v);
  if (e.adjacent_to(f)) throw std::invalid_argument("X-replacement: edges must be non-adjacent");
  const std::array<Vertex, 5> targets{e.u, e.v, f.u, f.v, fifth};
  require_distinct_in_range(g, targets, "X-replacement");
  const std::array<Edge, 2> rm{e, f};
  return attach_new_vertex(g.without_edges(rm), targets);
}

Graph vertex_split(const Graph& g, Vertex u, std::span<const Vertex> u1, std::array<Vertex, 2> u2,
                   std::span<const Vertex> u3) {
  if (u >= g.n()) throw std::invalid_argument("vertex split: vertex out of range");
  std::vector<Vertex> all(u1.begin(), u1.end());
  all.insert(all.end(), u2.begin(), u2.end());
  all.insert(all.end(), u3.begin(), u3.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("vertex split: parts are not pairwise disjoint");
  }
  if (all != g.neighbors(u)) throw std::invalid_argument("vertex split: parts do not partition N(u)");

  const auto v = static_cast<Vertex>(g.n());
  EdgeSet edges = g.edges();
  for (auto w : u3) edges.erase(make_edge(u, w));
  edges.insert(make_edge(v, u));
  for (auto w : u2) edges.insert(make_edge(v, w));
  for (auto w : u3) edges.insert(make_edge(v, w));
  return Graph(g.n() + 1, edges);
}

Vertex AdjacentPair::common() const {
  const Edge a = make_edge(first.u, first.v);
  const Edge b = make_edge(second.u, second.v);
  if (a == b) throw std::invalid_argument("adjacent pair: edges coincide");
  if (b.touches(a.u)) return a.u;
  if (b.touches(a.v)) return a.v;
  throw std::invalid_argument("adjacent pair: edges are not adjacent");
}

Graph v_replacement(const Graph& g, Edge e, Edge f, std::array<Vertex, 2> others) {
  require_edge(g, e, "V-replacement");
  require_edge(g, f, "V-replacement");
  const Vertex c = AdjacentPair{e, f}.common();
  const Vertex a = e.u == c ? e.v : e.u;
  const Vertex b = f.u == c ? f.v : f.u;
  const std::array<Vertex, 5> targets{c, a, b, others[0], others[1]};
  require_distinct_in_range(g, targets, "V-replacement");
  const std::array<Edge, 2> rm{e, f};
  return attach_new_vertex(g.without_edges(rm), targets);
}

Graph double_v_replacement(const Graph& h, AdjacentPair pair1, AdjacentPair pair2, std::array<Vertex, 5> neighbors) {
  require_distinct_in_range(h, neighbors, "double V-replacement");
  if (pair1.common() == pair2.common()) {
    throw std::invalid_argument("double V-replacement: the two pairs share their common endpoint");
  }
  const auto in_nbrs = [&](Vertex w) { return std::find(neighbors.begin(), neighbors.end(), w) != neighbors.end(); };
  for (const Edge& e : {pair1.first, pair1.second, pair2.first, pair2.second}) {
    if (!in_nbrs(e.u) || !in_nbrs(e.v)) {
      throw std::invalid_argument("double V-replacement: edge endpoints must lie in the neighbour set");
    }
  }
  require_edge(h, pair1.first, "double V-replacement");
  require_edge(h, pair1.second, "double V-replacement");
  const std::array<Edge, 2> rm{pair1.first, pair1.second};
  return attach_new_vertex(h.without_edges(rm), neighbors);
}

}  // namespace cofmat
