#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

namespace cofmat {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored as (min, max).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;

  bool touches(Vertex w) const { return u == w || v == w; }
  bool adjacent_to(const Edge& other) const {
    return touches(other.u) || touches(other.v);
  }
};

/// Throws std::invalid_argument for a self-loop.
Edge make_edge(Vertex a, Vertex b);

/// Lexicographically ordered set of edges.
using EdgeSet = std::set<Edge>;

EdgeSet complete_edges(std::span<const Vertex> vertices);
EdgeSet complete_edges(std::size_t n);

std::set<Vertex> vertices_of(const EdgeSet& edges);

/// Simple undirected graph on the dense labels 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n) {}
  /// Validates endpoints and rejects duplicate edges.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, const EdgeSet& edges);

  std::size_t n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const EdgeSet& edges() const { return edges_; }

  bool has_edge(Edge e) const { return edges_.contains(e); }
  std::vector<Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;

  Graph with_edges(std::span<const Edge> extra) const;
  Graph without_edges(std::span<const Edge> removed) const;
  /// Removes every edge incident to v; the label stays in place.
  Graph without_vertex_edges(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void insert_checked(Edge e);

  std::size_t n_ = 0;
  EdgeSet edges_;
};

Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);

// Extension operations. Each adds a vertex labelled g.n() and returns a fresh
// graph; precondition violations throw std::invalid_argument.

Graph zero_extension(const Graph& g, std::array<Vertex, 3> targets);

Graph one_extension(const Graph& g, Edge removed, std::array<Vertex, 4> targets);

Graph x_replacement(const Graph& g, Edge e, Edge f, Vertex fifth);

/// Splits u: edges u-w for w in u3 move to the new vertex v, which is also
/// joined to u and to both vertices of u2.
Graph vertex_split(const Graph& g, Vertex u, std::span<const Vertex> u1,
                   std::array<Vertex, 2> u2, std::span<const Vertex> u3);

Graph v_replacement(const Graph& g, Edge e, Edge f, std::array<Vertex, 2> others);

struct AdjacentPair {
  Edge first;
  Edge second;
  /// Shared endpoint; throws if the edges are not adjacent or coincide.
  Vertex common() const;
};

/// `h` must contain pair1. The result is h - pair1 plus a new vertex joined
/// to all five `neighbors`; pair2 only constrains the instance.
Graph double_v_replacement(const Graph& h, AdjacentPair pair1, AdjacentPair pair2,
                           std::array<Vertex, 5> neighbors);

}  // namespace cofmat
