#pragma once

// One-shot blackboard strategies: every broadcast bit is the XOR of a fixed
// set of coin tosses held by its speaker.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypershare/error.hpp"
#include "hypershare/gf2.hpp"
#include "hypershare/hypergraph.hpp"
#include "hypershare/rational.hpp"

namespace hypershare {

/// One toss of the coin shared by the vertices of `edge`.
struct CoinSymbol {
  Edge edge;
  std::uint32_t repetition = 0;

  [[nodiscard]] std::string to_string() const { return edge.to_string() + "/" + std::to_string(repetition); }

  friend bool operator==(const CoinSymbol&, const CoinSymbol&) = default;
  friend std::strong_ordering operator<=>(const CoinSymbol& a, const CoinSymbol& b) {
    if (auto c = a.edge <=> b.edge; c != 0) return c;
    return a.repetition <=> b.repetition;
  }
};

/// One blackboard bit: the XOR of `parity_set`, written by `speaker`.
struct Broadcast {
  Vertex speaker = 0;
  std::vector<CoinSymbol> parity_set;  ///< kept sorted

  Broadcast() = default;
  Broadcast(Vertex who, std::vector<CoinSymbol> symbols) : speaker(who), parity_set(std::move(symbols)) {
    std::sort(parity_set.begin(), parity_set.end());
  }

  friend bool operator==(const Broadcast&, const Broadcast&) = default;
};

enum class Scheme { Tree, Topological, Forehead, Cluster, Handcrafted, Parsed };

constexpr std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::Tree: return "tree";
    case Scheme::Topological: return "topological";
    case Scheme::Forehead: return "forehead";
    case Scheme::Cluster: return "cluster";
    case Scheme::Handcrafted: return "handcrafted";
    case Scheme::Parsed: return "parsed";
  }
  return "unknown";
}

/// The minimal (k-1)-connected subgraph G_i* picked by `user` inside a
/// component, as (k-1)-sets in original vertex labels.
struct GStarChoice {
  Vertex user = 0;
  std::size_t component = 0;
  std::vector<VertexSet> edges;
};

class Strategy {
 public:
  Strategy(Hypergraph graph, std::vector<CoinSymbol> coins, std::vector<Broadcast> broadcasts, Scheme scheme)
      : graph_(std::move(graph)), coins_(std::move(coins)), broadcasts_(std::move(broadcasts)), scheme_(scheme) {
    for (std::size_t i = 0; i < coins_.size(); ++i) {
      const auto& c = coins_[i];
      if (c.edge.empty() || c.edge.back() > graph_.n() || c.edge.front() < 1)
        throw Error(ErrorCode::InvalidStrategy, "coin " + c.to_string() + " outside the vertex range");
      if (!index_.emplace(c, i).second) throw Error(ErrorCode::InvalidStrategy, "duplicate coin " + c.to_string());
    }
    for (const auto& b : broadcasts_) {
      if (b.speaker < 1 || b.speaker > graph_.n())
        throw Error(ErrorCode::InvalidStrategy, "speaker " + std::to_string(b.speaker) + " outside the vertex range");
      if (b.parity_set.empty()) throw Error(ErrorCode::InvalidStrategy, "empty broadcast");
      if (std::adjacent_find(b.parity_set.begin(), b.parity_set.end()) != b.parity_set.end())
        throw Error(ErrorCode::InvalidStrategy, "repeated symbol in a broadcast");
      for (const auto& s : b.parity_set) {
        if (!index_.contains(s)) throw Error(ErrorCode::InvalidStrategy, "unknown coin " + s.to_string());
        if (!s.edge.contains(b.speaker))
          throw Error(ErrorCode::InvalidStrategy,
                      "user " + std::to_string(b.speaker) + " does not hold coin " + s.to_string());
      }
    }
  }

  [[nodiscard]] const Hypergraph& graph() const { return graph_; }
  [[nodiscard]] Vertex n() const { return graph_.n(); }
  [[nodiscard]] std::size_t k() const { return graph_.k(); }
  [[nodiscard]] Scheme scheme() const { return scheme_; }
  [[nodiscard]] const std::vector<CoinSymbol>& coins() const { return coins_; }
  [[nodiscard]] const std::vector<Broadcast>& broadcasts() const { return broadcasts_; }

  [[nodiscard]] std::size_t coin_index(const CoinSymbol& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw Error(ErrorCode::DomainMismatch, "unknown coin " + s.to_string());
    return it->second;
  }

  /// Indices of coins whose edge contains `user`, in coin order.
  [[nodiscard]] std::vector<std::size_t> held_coins(Vertex user) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coins_.size(); ++i)
      if (coins_[i].edge.contains(user)) out.push_back(i);
    return out;
  }

  /// Row j holds the parity pattern of broadcast j over the coin order.
  [[nodiscard]] gf2::BitMatrix parity_matrix() const {
    gf2::BitMatrix m(broadcasts_.size(), coins_.size());
    for (std::size_t j = 0; j < broadcasts_.size(); ++j)
      for (const auto& s : broadcasts_[j].parity_set) m.set(j, coin_index(s));
    return m;
  }

  /// |M| / |X| in bits.
  [[nodiscard]] Rational rate() const {
    if (coins_.empty()) throw Error(ErrorCode::InvalidStrategy, "strategy has no coins");
    return {static_cast<std::int64_t>(broadcasts_.size()), static_cast<std::int64_t>(coins_.size())};
  }

  /// The lower bound (n-k)/(n-1) on the rate.
  [[nodiscard]] Rational bound() const {
    if (n() < 2) throw Error(ErrorCode::InvalidStrategy, "bound needs n >= 2");
    return {static_cast<std::int64_t>(n()) - static_cast<std::int64_t>(k()), static_cast<std::int64_t>(n()) - 1};
  }

  // Synthesis metadata; empty for parsed strategies.
  std::optional<ClusterSpec> cluster;
  std::vector<std::uint32_t> repetitions;  ///< M_i per component
  std::uint64_t common_length = 0;         ///< C for cluster strategies
  std::vector<GStarChoice> g_star;

 private:
  Hypergraph graph_;
  std::vector<CoinSymbol> coins_;
  std::vector<Broadcast> broadcasts_;
  Scheme scheme_;
  std::map<CoinSymbol, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Spanning-tree scheme (k = 2)

inline Strategy synthesize_tree(const Hypergraph& g) {
  if (g.k() != 2) throw Error(ErrorCode::UniformityError, "tree scheme needs a 2-uniform graph");
  if (g.n() < 2 || !is_path_connected(g)) throw Error(ErrorCode::NotConnected, "graph is not connected");

  detail::DisjointSets sets(g.n() + 1);
  std::vector<Edge> tree;
  for (const auto& e : g.edges())
    if (sets.unite(e.front(), e.back())) tree.push_back(e);

  std::vector<CoinSymbol> coins;
  for (const auto& e : tree) coins.push_back({e, 0});

  std::vector<Broadcast> broadcasts;
  for (Vertex v = 1; v <= g.n(); ++v) {
    std::vector<const Edge*> incident;
    for (const auto& e : tree)
      if (e.contains(v)) incident.push_back(&e);
    for (std::size_t j = 1; j < incident.size(); ++j)
      broadcasts.emplace_back(v, std::vector<CoinSymbol>{{*incident[0], 0}, {*incident[j], 0}});
  }
  return {g, std::move(coins), std::move(broadcasts), Scheme::Tree};
}

// ---------------------------------------------------------------------------
// Topological scheme (k >= 3)

namespace detail {

struct UserPlan {
  Vertex user = 0;
  std::vector<Edge> g_star;                  ///< k-edges e ∪ {user}, colex order
  std::vector<std::vector<Edge>> broadcasts;  ///< k-edges XORed by each bit
};

struct TopologicalPlan {
  Hypergraph minimal;
  std::vector<UserPlan> users;
};

/// Runs the per-user construction on a topologically connected k-uniform
/// graph (k >= 3). All labels stay in g's vertex numbering.
inline TopologicalPlan plan_topological(const Hypergraph& g) {
  require_uniform(g, 3);
  TopologicalPlan plan{minimal_connected_subgraph(g), {}};
  const auto& minimal = plan.minimal;
  for (Vertex i = 1; i <= minimal.n(); ++i) {
    const auto induced = induced_hypergraph(minimal, i);
    const auto star = minimal_connected_subgraph(induced.graph);
    const auto star_rows = incidence_matrix(star).matrix;

    UserPlan up{i, {}, {}};
    for (const auto& e : star.edges()) up.g_star.push_back(induced.lift(e).with(i));
    std::sort(up.g_star.begin(), up.g_star.end());

    for (const auto& e : induced.graph.edges()) {
      if (star.contains_edge(e)) continue;
      const auto membership = gf2::in_row_space(star_rows, incidence_row(star.n(), e));
      if (!membership.member)
        throw Error(ErrorCode::NotConnected, "induced hypergraph of user " + std::to_string(i) + " is not connected");
      std::vector<Edge> parity{induced.lift(e).with(i)};
      for (auto r : membership.combination) parity.push_back(induced.lift(star.edges()[r]).with(i));
      up.broadcasts.push_back(std::move(parity));
    }
    plan.users.push_back(std::move(up));
  }
  return plan;
}

}  // namespace detail

inline Strategy synthesize_topological(const Hypergraph& g) {
  const auto plan = detail::plan_topological(g);
  std::vector<CoinSymbol> coins;
  for (const auto& e : plan.minimal.edges()) coins.push_back({e, 0});

  std::vector<Broadcast> broadcasts;
  std::vector<GStarChoice> g_star;
  for (const auto& up : plan.users) {
    for (const auto& parity : up.broadcasts) {
      std::vector<CoinSymbol> symbols;
      for (const auto& e : parity) symbols.push_back({e, 0});
      broadcasts.emplace_back(up.user, std::move(symbols));
    }
    GStarChoice choice{up.user, 0, {}};
    for (const auto& e : up.g_star) choice.edges.push_back(e.without(up.user));
    g_star.push_back(std::move(choice));
  }
  Strategy s(plan.minimal, std::move(coins), std::move(broadcasts), Scheme::Topological);
  s.g_star = std::move(g_star);
  return s;
}

// ---------------------------------------------------------------------------
// Forehead scheme (complete (n-1)-uniform)

inline Strategy synthesize_forehead(Vertex n) {
  if (n < 2) throw Error(ErrorCode::InvalidHypergraph, "forehead scheme needs n >= 2");
  auto graph = complete_hypergraph(n, n - 1);
  VertexSet everyone;
  for (Vertex v = 1; v <= n; ++v) everyone = everyone.with(v);

  std::vector<CoinSymbol> coins;
  for (Vertex i = 2; i <= n; ++i) coins.push_back({everyone.without(i), 0});
  std::vector<Broadcast> broadcasts{Broadcast(1, coins)};
  return {std::move(graph), std::move(coins), std::move(broadcasts), Scheme::Forehead};
}

// ---------------------------------------------------------------------------
// Cluster-of-components scheme

inline Strategy synthesize_cluster(const ClusterSpec& spec) {
  const auto& base = spec.base;
  if (base.k() == 2) {
    auto s = synthesize_tree(base);
    s.cluster = spec;
    return s;
  }
  if (base.k() < 3) throw Error(ErrorCode::InvalidCluster, "cluster scheme needs k >= 2");
  const auto k = static_cast<std::int64_t>(base.k());
  const std::size_t m = spec.components.size();

  struct ComponentPlan {
    RelabeledHypergraph local;
    detail::TopologicalPlan plan;
    std::uint64_t star_size = 0;
  };
  std::vector<ComponentPlan> parts;
  std::uint64_t common = 1;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Edge> owned;
    for (std::size_t e = 0; e < base.edge_count(); ++e)
      if (spec.edge_component[e] == j) owned.push_back(base.edges()[e]);
    ComponentPlan part;
    part.local = restrict_to(Hypergraph(base.n(), base.k(), std::move(owned)), spec.components[j]);
    try {
      part.plan = detail::plan_topological(part.local.graph);
    } catch (const Error& err) {
      throw Error(ErrorCode::InvalidCluster,
                  "component {" + spec.components[j].to_string(',') + "}: " + std::string(err.what()));
    }
    part.star_size = binomial(static_cast<std::int64_t>(spec.components[j].size()) - 2, k - 2);
    common = std::lcm(common, part.star_size);
    parts.push_back(std::move(part));
  }

  std::vector<std::uint32_t> reps;
  for (const auto& part : parts) reps.push_back(static_cast<std::uint32_t>(common / part.star_size));

  std::vector<CoinSymbol> coins;
  std::vector<Broadcast> broadcasts;
  std::vector<GStarChoice> g_star;
  // Per vertex and component: the C-bit vector R_j of G*-coins.
  std::map<std::pair<Vertex, std::size_t>, std::vector<CoinSymbol>> cross_vectors;

  for (std::size_t j = 0; j < m; ++j) {
    const auto& part = parts[j];
    for (const auto& e : part.plan.minimal.edges())
      for (std::uint32_t r = 0; r < reps[j]; ++r) coins.push_back({part.local.lift(e), r});

    for (std::uint32_t r = 0; r < reps[j]; ++r)
      for (const auto& up : part.plan.users)
        for (const auto& parity : up.broadcasts) {
          std::vector<CoinSymbol> symbols;
          for (const auto& e : parity) symbols.push_back({part.local.lift(e), r});
          broadcasts.emplace_back(part.local.original(up.user), std::move(symbols));
        }

    for (const auto& up : part.plan.users) {
      const Vertex v = part.local.original(up.user);
      std::vector<Edge> star;
      for (const auto& e : up.g_star) star.push_back(part.local.lift(e));
      std::sort(star.begin(), star.end());
      GStarChoice choice{v, j, {}};
      auto& vec = cross_vectors[{v, j}];
      for (const auto& e : star) {
        choice.edges.push_back(e.without(v));
        for (std::uint32_t r = 0; r < reps[j]; ++r) vec.push_back({e, r});
      }
      g_star.push_back(std::move(choice));
    }
  }

  for (Vertex v = 1; v <= base.n(); ++v) {
    std::vector<std::size_t> mine;
    for (std::size_t j = 0; j < m; ++j)
      if (spec.components[j].contains(v)) mine.push_back(j);
    if (mine.size() < 2) continue;
    const auto& first = cross_vectors.at({v, mine[0]});
    for (std::size_t t = 1; t < mine.size(); ++t) {
      const auto& other = cross_vectors.at({v, mine[t]});
      for (std::size_t c = 0; c < common; ++c)
        broadcasts.emplace_back(v, std::vector<CoinSymbol>{first[c], other[c]});
    }
  }

  Strategy s(base, std::move(coins), std::move(broadcasts), Scheme::Cluster);
  s.cluster = spec;
  s.repetitions = std::move(reps);
  s.common_length = common;
  s.g_star = std::move(g_star);
  return s;
}

// ---------------------------------------------------------------------------
// Fixed rate-2/3 schemes for the two hypergraphs that are not clusters.

struct NonexampleSchemes {
  Strategy g1;
  Strategy g2;
};

inline Hypergraph nonexample_g1() { return {6, 3, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}}}; }
inline Hypergraph nonexample_g2() { return {6, 3, {{1, 2, 4}, {1, 3, 5}, {2, 3, 6}}}; }

inline NonexampleSchemes handcrafted_nonexample_schemes() {
  const CoinSymbol r123{{1, 2, 3}, 0}, r134{{1, 3, 4}, 0}, r156{{1, 5, 6}, 0};
  Strategy g1(nonexample_g1(), {r123, r134, r156}, {Broadcast(1, {r123, r134}), Broadcast(1, {r134, r156})},
              Scheme::Handcrafted);

  const CoinSymbol r124{{1, 2, 4}, 0}, r135{{1, 3, 5}, 0}, r236{{2, 3, 6}, 0};
  Strategy g2(nonexample_g2(), {r124, r135, r236}, {Broadcast(1, {r124, r135}), Broadcast(2, {r124, r236})},
              Scheme::Handcrafted);
  return {std::move(g1), std::move(g2)};
}

}  // namespace hypershare
