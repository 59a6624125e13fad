#include "domgame/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "domgame/errors.hpp"

namespace domgame {

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g;
  g.adj_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  int twice = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice += static_cast<int>(list.size());
  }
  g.edge_count_ = twice / 2;
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v < 0 || v >= order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Vertex> Graph::closed_neighborhood(Vertex v) const {
  auto open = neighbors(v);
  std::vector<Vertex> result(open.begin(), open.end());
  result.insert(std::upper_bound(result.begin(), result.end(), v), v);
  return result;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](const auto& l) { return l.empty(); });
}

std::vector<int> component_ids(const Graph& g) {
  std::vector<int> id(g.order(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (id[s] >= 0) continue;
    id[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (id[u] < 0) {
          id[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return id;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  auto id = component_ids(g);
  int count = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  std::vector<std::vector<Vertex>> result(count);
  for (Vertex v = 0; v < g.order(); ++v) result[id[v]].push_back(v);
  return result;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph gen_cycle(int n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, e);
}

Graph gen_path(int n) {
  if (n < 2) throw GraphError("path needs n >= 2");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}

Graph gen_complete(int n) {
  if (n < 2) throw GraphError("complete graph needs n >= 2");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(n, e);
}

Graph gen_petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    e.emplace_back(i, 5 + i);                // spokes
  }
  return Graph::from_edge_list(10, e);
}

Graph disjoint_union(const Graph& first, const Graph& second) {
  auto e = first.edges();
  const int offset = first.order();
  for (auto [u, v] : second.edges()) e.emplace_back(u + offset, v + offset);
  return Graph::from_edge_list(offset + second.order(), e);
}

Graph gen_random_isolate_free(int n, double p, std::uint64_t seed) {
  if (n < 2) throw GraphError("random graph needs n >= 2");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        e.emplace_back(i, j);
        ++deg[i];
        ++deg[j];
      }
    }
  }
  std::uniform_int_distribution<int> pick(0, n - 2);
  for (int v = 0; v < n; ++v) {
    if (deg[v] > 0) continue;
    int u = pick(rng);
    if (u >= v) ++u;
    e.emplace_back(v, u);
    ++deg[v];
    ++deg[u];
  }
  return Graph::from_edge_list(n, e);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("permutation size mismatch");
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph::from_edge_list(g.order(), e);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex u : g.neighbors(vertices[i])) {
      if (index[u] > static_cast<int>(i)) e.emplace_back(static_cast<int>(i), index[u]);
    }
  }
  return Graph::from_edge_list(static_cast<int>(vertices.size()), e);
}

std::pair<Graph, SubdivisionMap> subdivide3(const Graph& g) {
  SubdivisionMap map{g, {}};
  std::vector<Edge> e;
  Vertex next = g.order();
  for (auto [w, z] : g.edges()) {
    SubdividedEdge path{w, z, next, next + 1};
    next += 2;
    e.emplace_back(w, path.x);
    e.emplace_back(path.x, path.y);
    e.emplace_back(path.y, z);
    map.paths.push_back(path);
  }
  return {Graph::from_edge_list(next, e), std::move(map)};
}

}  // namespace domgame
