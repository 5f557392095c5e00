#include "cofmat/matroid.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cofmat {

std::string to_string(FiveSetCase c) {
  switch (c) {
    case FiveSetCase::k4_in_closure: return "K4_in_closure";
    case FiveSetCase::spanned_plus_one: return "spanned_plus_one";
    case FiveSetCase::two_nonadjacent: return "two_nonadjacent";
    case FiveSetCase::two_adjacent_star_center: return "two_adjacent_star_center";
    case FiveSetCase::star_case: return "star_case";
  }
  return "unknown";
}

GenericMatroid::GenericMatroid(std::size_t n, std::uint64_t master_seed) : n_(n), master_seed_(master_seed) {
  std::mt19937_64 gen(master_seed);
  for (std::size_t i = 0; i < kSeeds; ++i) {
    seeds_[i] = gen();
    points_[i] = random_points(n, seeds_[i]);
  }
}

void GenericMatroid::check_ground(const EdgeSet& f) const {
  for (const auto& e : f) {
    if (e.u >= e.v || e.v >= n_) throw std::invalid_argument("edge outside the ground set K(V)");
  }
}

std::size_t GenericMatroid::rank_at(std::size_t seed_index, const EdgeSet& f) const {
  // Restrict columns to the vertices actually touched by f.
  const auto vs = vertices_of(f);
  std::vector<Point> pts;
  std::map<Vertex, Vertex> relabel;
  for (auto v : vs) {
    relabel[v] = static_cast<Vertex>(pts.size());
    pts.push_back(points_[seed_index][v]);
  }
  EdgeSet local;
  for (const auto& e : f) local.insert({relabel[e.u], relabel[e.v]});
  return cofmat::rank(cofactor_matrix(pts, local));
}

std::size_t GenericMatroid::rank(const EdgeSet& f) const {
  check_ground(f);
  if (f.empty()) return 0;
  std::vector<Edge> key(f.begin(), f.end());
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const std::size_t nv = vertices_of(f).size();
  std::size_t bound = f.size();
  if (nv >= 3) bound = std::min(bound, 3 * nv - 6);

  std::size_t best = 0;
  for (std::size_t s = 0; s < kSeeds && best < bound; ++s) best = std::max(best, rank_at(s, f));

  std::lock_guard lock(cache_mutex_);
  cache_.emplace(std::move(key), best);
  return best;
}

std::array<std::size_t, GenericMatroid::kSeeds> GenericMatroid::rank_per_seed(const EdgeSet& f) const {
  check_ground(f);
  std::array<std::size_t, kSeeds> out{};
  if (f.empty()) return out;
  for (std::size_t s = 0; s < kSeeds; ++s) out[s] = rank_at(s, f);
  return out;
}

bool GenericMatroid::independent(const EdgeSet& f) const { return rank(f) == f.size(); }

EdgeSet GenericMatroid::closure(const EdgeSet& f) const {
  const std::size_t r = rank(f);
  EdgeSet out = f;
  for (const auto& e : complete_edges(n_)) {
    if (f.contains(e)) continue;
    EdgeSet g = f;
    g.insert(e);
    if (rank(g) == r) out.insert(e);
  }
  return out;
}

bool GenericMatroid::is_circuit(const EdgeSet& f) const {
  if (f.empty() || rank(f) != f.size() - 1) return false;
  for (const auto& e : f) {
    EdgeSet g = f;
    g.erase(e);
    if (!independent(g)) return false;
  }
  return true;
}

bool GenericMatroid::is_rigid(const Graph& g) const {
  if (g.n() < 3) return true;
  return rank(g.edges()) == 3 * g.n() - 6;
}

std::size_t GenericMatroid::local_dof(const Graph& g, std::span<const Vertex> x) const {
  EdgeSet both = g.edges();
  const EdgeSet kx = complete_edges(x);
  both.insert(kx.begin(), kx.end());
  return rank(both) - rank(g.edges());
}

EdgeSet GenericMatroid::contracted_closure(const EdgeSet& e0, const EdgeSet& f) const {
  const EdgeSet cl0 = closure(e0);
  for (const auto& e : f) {
    if (cl0.contains(e)) throw std::invalid_argument("contracted closure: F meets cl(E0)");
  }
  EdgeSet base = e0;
  base.insert(f.begin(), f.end());
  const std::size_t r = rank(base);
  EdgeSet out;
  for (const auto& e : complete_edges(n_)) {
    if (cl0.contains(e)) continue;
    EdgeSet g = base;
    g.insert(e);
    if (rank(g) == r) out.insert(e);
  }
  return out;
}

namespace {

bool contains_k4(const EdgeSet& s, std::span<const Vertex> u, std::vector<Vertex>* witness) {
  for (std::size_t skip = u.size(); skip-- > 0;) {
    // Iterate 4-subsets lexicographically: dropping the last vertex first.
    std::vector<Vertex> four;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (i != skip) four.push_back(u[i]);
    const EdgeSet k4 = complete_edges(four);
    if (std::all_of(k4.begin(), k4.end(), [&](const Edge& e) { return s.contains(e); })) {
      if (witness) *witness = four;
      return true;
    }
  }
  return false;
}

std::optional<Vertex> spanning_star_center(const EdgeSet& s, std::span<const Vertex> u) {
  if (s.size() != u.size() - 1) return std::nullopt;
  for (auto c : u) {
    if (std::all_of(s.begin(), s.end(), [c](const Edge& e) { return e.touches(c); })) return c;
  }
  return std::nullopt;
}

}  // namespace

FiveSetClassification GenericMatroid::classify_five_set(const Graph& h, std::array<Vertex, 5> u) const {
  if (h.n() > n_) throw std::invalid_argument("graph larger than the matroid ground set");
  std::sort(u.begin(), u.end());
  if (std::adjacent_find(u.begin(), u.end()) != u.end() || u.back() >= h.n()) {
    throw std::invalid_argument("five-set must consist of 5 distinct vertices of the graph");
  }
  const EdgeSet& E = h.edges();
  if (!independent(E)) throw std::invalid_argument("five-set classification requires an independent graph");

  const EdgeSet K = complete_edges(u);
  const auto closure_within_k = [&](const EdgeSet& base) {
    const std::size_t r = rank(base);
    EdgeSet out;
    for (const auto& e : K) {
      if (base.contains(e)) {
        out.insert(e);
        continue;
      }
      EdgeSet g = base;
      g.insert(e);
      if (rank(g) == r) out.insert(e);
    }
    return out;
  };
  const auto plus = [&](std::initializer_list<Edge> extra) {
    EdgeSet g = E;
    g.insert(extra.begin(), extra.end());
    return g;
  };

  const EdgeSet clE = closure_within_k(E);

  FiveSetClassification out{FiveSetCase::k4_in_closure, {}, {}};
  if (contains_k4(clE, u, &out.vertices)) return out;

  for (const auto& e : K) {
    if (closure_within_k(plus({e})).size() == K.size()) {
      return {FiveSetCase::spanned_plus_one, {}, {e}};
    }
  }

  const auto addable = [&](const Edge& a, const Edge& b) {
    return !E.contains(a) && !E.contains(b) && independent(plus({a, b}));
  };

  for (auto i = K.begin(); i != K.end(); ++i)
    for (auto j = std::next(i); j != K.end(); ++j)
      if (!i->adjacent_to(*j) && addable(*i, *j)) return {FiveSetCase::two_nonadjacent, {}, {*i, *j}};

  for (auto i = K.begin(); i != K.end(); ++i)
    for (auto j = std::next(i); j != K.end(); ++j) {
      if (!i->adjacent_to(*j)) continue;
      const Vertex c = AdjacentPair{*i, *j}.common();
      const auto deg = std::count_if(clE.begin(), clE.end(), [c](const Edge& e) { return e.touches(c); });
      if (deg >= 2 && addable(*i, *j)) return {FiveSetCase::two_adjacent_star_center, {c}, {*i, *j}};
    }

  if (auto c = spanning_star_center(clE, u)) {
    const bool no_k4 = std::none_of(K.begin(), K.end(),
                                    [&](const Edge& e) { return contains_k4(closure_within_k(plus({e})), u, nullptr); });
    if (no_k4) return {FiveSetCase::star_case, {*c}, {}};
  }
  throw std::logic_error("five-set classification found no case; the rank oracle is inconsistent");
}

bool GenericMatroid::is_type_star(const Graph& g, Vertex v0) const {
  if (g.n() > n_) throw std::invalid_argument("graph larger than the matroid ground set");
  if (v0 >= g.n() || g.degree(v0) != 5 || g.n() < 4) return false;
  const auto nbrs = g.neighbors(v0);
  const EdgeSet E = g.without_vertex_edges(v0).edges();
  const std::size_t rE = rank(E);

  EdgeSet star;
  for (const auto& e : complete_edges(nbrs)) {
    EdgeSet t = E;
    t.insert(e);
    if (E.contains(e) || rank(t) == rE) star.insert(e);
  }
  const auto center = spanning_star_center(star, nbrs);
  if (!center) return false;

  std::vector<Vertex> rest;
  for (auto w : nbrs)
    if (w != *center) rest.push_back(w);
  const std::size_t rigid_rank = 3 * (g.n() - 1) - 6;
  const auto rigid_with = [&](Edge a, Edge b) {
    EdgeSet t = E;
    t.insert(a);
    t.insert(b);
    return rank(t) == rigid_rank;
  };
  std::sort(rest.begin(), rest.end());
  do {
    const Vertex v1 = rest[0], v2 = rest[1], v3 = rest[2], v4 = rest[3];
    if (rigid_with(make_edge(v1, v2), make_edge(v1, v3)) && rigid_with(make_edge(v1, v3), make_edge(v3, v4))) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

bool GenericMatroid::check_op_preserves_independence(const Graph& before, const Graph& after) const {
  if (!independent(before.edges())) throw std::invalid_argument("operation harness requires an independent input");
  return independent(after.edges());
}

std::size_t GenericMatroid::cache_size() const {
  std::lock_guard lock(cache_mutex_);
  return cache_.size();
}

}  // namespace cofmat
