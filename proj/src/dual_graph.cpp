#include "curveres/dual_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "curveres/error.hpp"

namespace curveres {

DualGraph::DualGraph(int vertex_count, const std::set<Edge>& edges) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loop at E" + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (a < 1 || b > vertex_count) {
      throw std::invalid_argument("edge endpoint outside 1.." + std::to_string(vertex_count));
    }
    edges_.emplace(a, b);
  }
}

bool DualGraph::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  return edges_.contains({i, j});
}

bool equals_labeled(const DualGraph& g, const DualGraph& h) { return g == h; }

namespace {

using Adjacency = std::vector<std::vector<bool>>;

Adjacency adjacency(const DualGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Adjacency adj(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : g.edges()) {
    adj[a - 1][b - 1] = true;
    adj[b - 1][a - 1] = true;
  }
  return adj;
}

std::vector<int> degrees(const Adjacency& adj) {
  std::vector<int> d;
  for (const auto& row : adj) d.push_back(static_cast<int>(std::count(row.begin(), row.end(), true)));
  return d;
}

// Extends the partial map image[0..v) one vertex at a time; every new pair is
// checked against all previously mapped vertices.
bool extend(std::size_t v, const Adjacency& ga, const Adjacency& ha, const std::vector<int>& gd,
            const std::vector<int>& hd, std::vector<int>& image, std::vector<bool>& used) {
  if (v == ga.size()) return true;
  for (std::size_t w = 0; w < ha.size(); ++w) {
    if (used[w] || gd[v] != hd[w]) continue;
    bool ok = true;
    for (std::size_t u = 0; u < v && ok; ++u) {
      ok = ga[v][u] == ha[w][static_cast<std::size_t>(image[u])];
    }
    if (!ok) continue;
    image[v] = static_cast<int>(w);
    used[w] = true;
    if (extend(v + 1, ga, ha, gd, hd, image, used)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool isomorphic_unlabeled(const DualGraph& g, const DualGraph& h) {
  if (g.vertex_count() > kMaxIsomorphismVertices || h.vertex_count() > kMaxIsomorphismVertices) {
    throw CurveError(ErrorKind::TooLarge, "brute-force isomorphism is limited to " +
                                              std::to_string(kMaxIsomorphismVertices) + " vertices");
  }
  if (g.vertex_count() != h.vertex_count() || g.edges().size() != h.edges().size()) return false;
  const Adjacency ga = adjacency(g);
  const Adjacency ha = adjacency(h);
  const auto gd = degrees(ga);
  const auto hd = degrees(ha);
  auto gs = gd;
  auto hs = hd;
  std::sort(gs.begin(), gs.end());
  std::sort(hs.begin(), hs.end());
  if (gs != hs) return false;
  std::vector<int> image(ga.size(), -1);
  std::vector<bool> used(ga.size(), false);
  return extend(0, ga, ha, gd, hd, image, used);
}

std::vector<std::array<int, 3>> triple_cliques(const DualGraph& g) {
  std::vector<std::array<int, 3>> out;
  for (const auto& [i, j] : g.edges()) {
    for (int k = j + 1; k <= g.vertex_count(); ++k) {
      if (g.adjacent(i, k) && g.adjacent(j, k)) out.push_back({i, j, k});
    }
  }
  return out;
}

std::string to_dot(const DualGraph& g) {
  std::ostringstream os;
  os << "graph G {";
  for (int v = 1; v <= g.vertex_count(); ++v) os << " E" << v << ";";
  for (const auto& [a, b] : g.edges()) os << " E" << a << " -- E" << b << ";";
  os << " }";
  return os.str();
}

nlohmann::json to_json(const DualGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return {{"r", g.vertex_count()}, {"edges", edges}};
}

}  // namespace curveres
