#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cofmat/framework.hpp"
#include "cofmat/graph.hpp"

namespace cofmat {

/// The five possible outcomes for a five-vertex set, in checking order.
enum class FiveSetCase {
  k4_in_closure,             // cl(E) ∩ K(U) contains a K4
  spanned_plus_one,          // K(U) ⊆ cl(E + e) for some e in K(U)
  two_nonadjacent,           // E + e1 + e2 independent, e1 and e2 disjoint
  two_adjacent_star_center,  // E + e1 + e2 independent, shared endpoint has degree 2 in cl(E) ∩ K(U)
  star_case,                 // cl(E) ∩ K(U) is a spanning star and no cl(E + e) ∩ K(U) has a K4
};

std::string to_string(FiveSetCase c);

struct FiveSetClassification {
  FiveSetCase kind;
  std::vector<Vertex> vertices;  // K4 vertices for case (i); star centre for case (v)
  std::vector<Edge> edges;       // e for case (ii); e1, e2 for cases (iii) and (iv)
};

/// Generic C¹₂-cofactor matroid on K(V), |V| = n.
///
/// The rank of an edge set is the maximum row rank of its cofactor rows over
/// three independent random integer realizations. A random realization never
/// exceeds the generic rank, so the maximum is a certified lower bound and is
/// exact with overwhelming probability.
///
/// Thread safety: queries may be issued concurrently; the rank cache is
/// guarded by a mutex and identical queries always return identical answers.
class GenericMatroid {
 public:
  static constexpr std::size_t kSeeds = 3;

  GenericMatroid(std::size_t n, std::uint64_t master_seed);

  std::size_t n() const { return n_; }
  std::uint64_t master_seed() const { return master_seed_; }
  const std::array<std::uint64_t, kSeeds>& seeds() const { return seeds_; }
  /// Sampled coordinates per seed; enough to replay every rank query.
  const std::array<std::vector<Point>, kSeeds>& certificate() const { return points_; }

  std::size_t rank(const EdgeSet& f) const;
  /// Rank at each sampled realization, without early exit.
  std::array<std::size_t, kSeeds> rank_per_seed(const EdgeSet& f) const;

  bool independent(const EdgeSet& f) const;
  EdgeSet closure(const EdgeSet& f) const;
  bool is_circuit(const EdgeSet& f) const;
  bool is_rigid(const Graph& g) const;

  /// rank(E(g) ∪ K(x)) - rank(E(g)).
  std::size_t local_dof(const Graph& g, std::span<const Vertex> x) const;

  /// Closure of f in the contraction by cl(e0). Throws std::invalid_argument
  /// when f meets cl(e0).
  EdgeSet contracted_closure(const EdgeSet& e0, const EdgeSet& f) const;

  /// Returns the first case in order (i)..(v) that holds. Throws
  /// std::invalid_argument if E(h) is dependent or u is not 5 distinct vertices.
  FiveSetClassification classify_five_set(const Graph& h, std::array<Vertex, 5> u) const;

  /// Degree-five vertex whose neighbourhood closure is a star centred on one
  /// neighbour, with the two rigidity conditions for some labelling.
  bool is_type_star(const Graph& g, Vertex v0) const;

  /// Throws std::invalid_argument if `before` is dependent.
  bool check_op_preserves_independence(const Graph& before, const Graph& after) const;

  std::size_t cache_size() const;

 private:
  void check_ground(const EdgeSet& f) const;
  std::size_t rank_at(std::size_t seed_index, const EdgeSet& f) const;

  std::size_t n_;
  std::uint64_t master_seed_;
  std::array<std::uint64_t, kSeeds> seeds_{};
  std::array<std::vector<Point>, kSeeds> points_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::vector<Edge>, std::size_t> cache_;
};

}  // namespace cofmat
