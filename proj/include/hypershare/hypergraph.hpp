#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "hypershare/combinatorics.hpp"
#include "hypershare/error.hpp"
#include "hypershare/gf2.hpp"

namespace hypershare {

/// A sorted set of 1-based vertices. Ordered by size, then colexicographically.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  explicit VertexSet(std::vector<Vertex> vs) : v_(std::move(vs)) {
    std::sort(v_.begin(), v_.end());
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
      throw Error(ErrorCode::InvalidHypergraph, "repeated vertex in " + to_string());
  }

  [[nodiscard]] std::size_t size() const { return v_.size(); }
  [[nodiscard]] bool empty() const { return v_.empty(); }
  [[nodiscard]] auto begin() const { return v_.begin(); }
  [[nodiscard]] auto end() const { return v_.end(); }
  [[nodiscard]] Vertex front() const { return v_.front(); }
  [[nodiscard]] Vertex back() const { return v_.back(); }
  [[nodiscard]] const std::vector<Vertex>& vertices() const { return v_; }

  [[nodiscard]] bool contains(Vertex x) const { return std::binary_search(v_.begin(), v_.end(), x); }

  [[nodiscard]] bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
  }

  [[nodiscard]] std::size_t intersection_size(const VertexSet& other) const {
    std::size_t n = 0;
    auto a = v_.begin();
    auto b = other.v_.begin();
    while (a != v_.end() && b != other.v_.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++n;
        ++a;
        ++b;
      }
    }
    return n;
  }

  [[nodiscard]] VertexSet without(Vertex x) const {
    VertexSet out;
    out.v_.reserve(v_.size());
    std::copy_if(v_.begin(), v_.end(), std::back_inserter(out.v_), [x](Vertex y) { return y != x; });
    return out;
  }

  [[nodiscard]] VertexSet with(Vertex x) const {
    if (contains(x)) return *this;
    VertexSet out = *this;
    out.v_.insert(std::upper_bound(out.v_.begin(), out.v_.end(), x), x);
    return out;
  }

  /// Vertices joined by `sep`, e.g. "1-2-3".
  [[nodiscard]] std::string to_string(char sep = '-') const {
    std::string s;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) s += sep;
      s += std::to_string(v_[i]);
    }
    return s;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.v_.rbegin(), a.v_.rend(), b.v_.rbegin(), b.v_.rend());
  }

 private:
  std::vector<Vertex> v_;
};

using Edge = VertexSet;

/// Hypergraph on vertices 1..n with an ordered edge list. Uniformity k > 0
/// forces every edge to have exactly k vertices; k == 0 allows any size.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(Vertex n, std::size_t k, std::vector<Edge> edges) : n_(n), k_(k), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
      if (e.empty()) throw Error(ErrorCode::InvalidHypergraph, "empty hyperedge");
      if (e.front() < 1 || e.back() > n_)
        throw Error(ErrorCode::InvalidHypergraph, "hyperedge " + e.to_string() + " outside 1.." + std::to_string(n_));
      if (k_ > 0 && e.size() != k_)
        throw Error(ErrorCode::UniformityError,
                    "hyperedge " + e.to_string() + " does not have " + std::to_string(k_) + " vertices");
    }
    auto sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    if (auto d = std::adjacent_find(sorted.begin(), sorted.end()); d != sorted.end())
      throw Error(ErrorCode::InvalidHypergraph, "duplicate hyperedge " + d->to_string());
  }

  [[nodiscard]] Vertex n() const { return n_; }
  [[nodiscard]] std::size_t k() const { return k_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }

  [[nodiscard]] bool contains_edge(const Edge& e) const {
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
  }

  [[nodiscard]] std::size_t degree(Vertex v) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.contains(v); }));
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  Vertex n_ = 0;
  std::size_t k_ = 0;
  std::vector<Edge> edges_;
};

inline Hypergraph complete_hypergraph(Vertex n, std::size_t k) {
  std::vector<Edge> edges;
  for (auto& s : colex_subsets(n, k)) edges.emplace_back(std::move(s));
  return {n, k, std::move(edges)};
}

/// All k-edges through vertex 1, in colex order.
inline Hypergraph star_hypergraph(Vertex n, std::size_t k) {
  std::vector<Edge> edges;
  for (auto& s : colex_subsets(n, k))
    if (s.front() == 1) edges.emplace_back(std::move(s));
  return {n, k, std::move(edges)};
}

namespace detail {

inline void require_uniform(const Hypergraph& g, std::size_t min_k) {
  if (g.k() < min_k)
    throw Error(ErrorCode::UniformityError,
                "need a k-uniform hypergraph with k >= " + std::to_string(min_k) + ", got k=" + std::to_string(g.k()));
}

inline void require_vertex(const Hypergraph& g, Vertex v) {
  if (v < 1 || v > g.n())
    throw Error(ErrorCode::InvalidHypergraph, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.n()));
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// Returns false when a and b were already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Edge-by-(k-1)-tuple incidence matrix over GF(2). Columns enumerate the
/// (k-1)-subsets of 1..n in colex order; entry (e, t) is 1 iff t ⊂ e.
struct IncidenceMatrix {
  gf2::BitMatrix matrix;
  std::vector<VertexSet> tuples;

  [[nodiscard]] std::size_t column_of(const VertexSet& t) const { return colex_rank(t.vertices()); }
};

/// Incidence row of a single k-edge over the colex (k-1)-tuples of 1..n.
inline gf2::BitVector incidence_row(Vertex n, const Edge& e) {
  gf2::BitVector row(binomial(n, static_cast<std::int64_t>(e.size()) - 1));
  for (Vertex v : e) row.set(colex_rank(e.without(v).vertices()));
  return row;
}

inline IncidenceMatrix incidence_matrix(const Hypergraph& g) {
  detail::require_uniform(g, 2);
  IncidenceMatrix out;
  for (auto& t : colex_subsets(g.n(), g.k() - 1)) out.tuples.emplace_back(std::move(t));
  out.matrix = gf2::BitMatrix(0, out.tuples.size());
  for (const auto& e : g.edges()) out.matrix.append_row(incidence_row(g.n(), e));
  return out;
}

/// Topological k-connectivity via the rank characterisation:
/// rank(A) == C(n-1, k-1).
inline bool is_topologically_connected(const Hypergraph& g) {
  detail::require_uniform(g, 2);
  return gf2::rank(incidence_matrix(g).matrix) == binomial(g.n() - 1, static_cast<std::int64_t>(g.k()) - 1);
}

/// Greedy basis of the incidence rows, scanning edges in g's order.
inline Hypergraph minimal_connected_subgraph(const Hypergraph& g) {
  detail::require_uniform(g, 2);
  gf2::EchelonBasis basis(binomial(g.n(), static_cast<std::int64_t>(g.k()) - 1));
  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (basis.insert(incidence_row(g.n(), e))) kept.push_back(e);
  if (kept.size() != binomial(g.n() - 1, static_cast<std::int64_t>(g.k()) - 1))
    throw Error(ErrorCode::NotConnected, "hypergraph is not topologically " + std::to_string(g.k()) + "-connected");
  return {g.n(), g.k(), std::move(kept)};
}

/// A hypergraph whose vertices were renumbered densely from an original one.
struct RelabeledHypergraph {
  Hypergraph graph;
  std::vector<Vertex> to_original;        ///< local vertex v maps to to_original[v - 1]
  std::vector<std::size_t> source_edges;  ///< index of the originating edge, per local edge

  [[nodiscard]] Vertex original(Vertex local) const { return to_original.at(local - 1); }

  [[nodiscard]] VertexSet lift(const VertexSet& local) const {
    std::vector<Vertex> vs;
    for (Vertex v : local) vs.push_back(original(v));
    return VertexSet(std::move(vs));
  }
};

/// Induced hypergraph G_i: edges e∖{i} for every edge e containing i, on the
/// remaining n-1 vertices relabelled in increasing order.
inline RelabeledHypergraph induced_hypergraph(const Hypergraph& g, Vertex i) {
  detail::require_uniform(g, 3);
  detail::require_vertex(g, i);
  RelabeledHypergraph out;
  std::vector<Vertex> to_local(g.n() + 1, 0);
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (v == i) continue;
    out.to_original.push_back(v);
    to_local[v] = static_cast<Vertex>(out.to_original.size());
  }
  std::vector<Edge> edges;
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    const auto& e = g.edges()[idx];
    if (!e.contains(i)) continue;
    std::vector<Vertex> local;
    for (Vertex v : e)
      if (v != i) local.push_back(to_local[v]);
    edges.emplace_back(std::move(local));
    out.source_edges.push_back(idx);
  }
  out.graph = Hypergraph(g.n() - 1, g.k() - 1, std::move(edges));
  return out;
}

/// Restriction of g to the edges lying inside `vertices`, relabelled densely.
inline RelabeledHypergraph restrict_to(const Hypergraph& g, const VertexSet& vertices) {
  RelabeledHypergraph out;
  std::vector<Vertex> to_local(g.n() + 1, 0);
  for (Vertex v : vertices) {
    detail::require_vertex(g, v);
    out.to_original.push_back(v);
    to_local[v] = static_cast<Vertex>(out.to_original.size());
  }
  std::vector<Edge> edges;
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    const auto& e = g.edges()[idx];
    if (!e.is_subset_of(vertices)) continue;
    std::vector<Vertex> local;
    for (Vertex v : e) local.push_back(to_local[v]);
    edges.emplace_back(std::move(local));
    out.source_edges.push_back(idx);
  }
  out.graph = Hypergraph(static_cast<Vertex>(vertices.size()), g.k(), std::move(edges));
  return out;
}

/// Every pair of vertices joined by a simple path. Isolated vertices make the
/// answer false whenever n >= 2.
inline bool is_path_connected(const Hypergraph& g) {
  if (g.n() <= 1) return true;
  // Bipartite vertex/edge graph: vertex v -> node v-1, edge j -> node n+j.
  detail::DisjointSets sets(g.n() + g.edge_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j)
    for (Vertex v : g.edges()[j]) sets.unite(g.n() + j, v - 1);
  const auto root = sets.find(0);
  for (Vertex v = 2; v <= g.n(); ++v)
    if (sets.find(v - 1) != root) return false;
  return true;
}

/// No simple cycle: no two edges share two or more vertices and the
/// bipartite vertex/edge incidence graph is a forest.
inline bool is_cycle_free(const Hypergraph& g) {
  const auto& es = g.edges();
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b)
      if (es[a].intersection_size(es[b]) >= 2) return false;
  detail::DisjointSets sets(g.n() + es.size());
  for (std::size_t j = 0; j < es.size(); ++j)
    for (Vertex v : es[j])
      if (!sets.unite(g.n() + j, v - 1)) return false;
  return true;
}

/// A k-uniform base hypergraph together with a validated cluster hypergraph
/// G_c = (V, {A_1..A_m}).
struct ClusterSpec {
  Hypergraph base;
  std::vector<VertexSet> components;
  std::vector<std::size_t> edge_component;  ///< owning component per base edge

  [[nodiscard]] Hypergraph cluster_graph() const { return {base.n(), 0, components}; }

  /// deg_{G_c}(v): number of components containing v.
  [[nodiscard]] std::size_t component_degree(Vertex v) const {
    return static_cast<std::size_t>(
        std::count_if(components.begin(), components.end(), [v](const VertexSet& a) { return a.contains(v); }));
  }
};

inline ClusterSpec validate_cluster(const Hypergraph& base, std::vector<VertexSet> components) {
  detail::require_uniform(base, 2);
  if (components.empty()) throw Error(ErrorCode::InvalidCluster, "no components given");
  Hypergraph gc;
  try {
    gc = Hypergraph(base.n(), 0, components);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidCluster, e.what());
  }
  if (!is_path_connected(gc)) throw Error(ErrorCode::NotPathConnected, "component hypergraph is not path-connected");
  if (!is_cycle_free(gc)) throw Error(ErrorCode::HasCycle, "component hypergraph contains a simple cycle");

  for (const auto& a : components) {
    const auto restricted = restrict_to(base, a);
    if (a.size() < base.k() || !is_topologically_connected(restricted.graph))
      throw Error(ErrorCode::ComponentNotConnected,
                  "restriction to {" + a.to_string(',') + "} is not topologically " + std::to_string(base.k()) +
                      "-connected");
  }

  ClusterSpec spec{base, std::move(components), {}};
  for (const auto& e : base.edges()) {
    auto it = std::find_if(spec.components.begin(), spec.components.end(),
                           [&e](const VertexSet& a) { return e.is_subset_of(a); });
    if (it == spec.components.end())
      throw Error(ErrorCode::EdgeOutsideComponents, "edge " + e.to_string() + " lies in no component");
    spec.edge_component.push_back(static_cast<std::size_t>(it - spec.components.begin()));
  }

  std::size_t size_sum = 0;
  for (const auto& a : spec.components) size_sum += a.size() - 1;
  std::size_t degree_sum = 0;
  for (Vertex v = 1; v <= base.n(); ++v) degree_sum += spec.component_degree(v) - 1;
  if (size_sum != base.n() - 1 || degree_sum != spec.components.size() - 1)
    throw Error(ErrorCode::InvalidCluster, "component counting identities fail");
  return spec;
}

}  // namespace hypershare
