#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace curveres {

/// Vertices 1..r are the exceptional components in creation order (vertex i
/// appeared at the i-th blow-up); edges are pairs of components that meet.
class DualGraph {
 public:
  using Edge = std::pair<int, int>;

  DualGraph() = default;
  /// Edges may be given in either orientation; they are stored as (i, j) with
  /// i < j. Self-loops and endpoints outside 1..r throw std::invalid_argument.
  DualGraph(int vertex_count, const std::set<Edge>& edges);

  int vertex_count() const noexcept { return vertex_count_; }
  const std::set<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(int i, int j) const;

  friend bool operator==(const DualGraph&, const DualGraph&) = default;

 private:
  int vertex_count_ = 0;
  std::set<Edge> edges_;
};

bool equals_labeled(const DualGraph& g, const DualGraph& h);

inline constexpr int kMaxIsomorphismVertices = 12;

/// Brute-force search for a vertex bijection carrying edges onto edges.
/// Throws CurveError(TooLarge) above kMaxIsomorphismVertices.
bool isomorphic_unlabeled(const DualGraph& g, const DualGraph& h);

/// Every triangle (i, j, k), i < j < k, in lexicographic order.
std::vector<std::array<int, 3>> triple_cliques(const DualGraph& g);

/// Single-line DOT, e.g. `graph G { E1; E2; E3; E1 -- E3; E2 -- E3; }`.
std::string to_dot(const DualGraph& g);

/// {"r": r, "edges": [[i, j], ...]} with edges sorted.
nlohmann::json to_json(const DualGraph& g);

}  // namespace curveres
