#include "domgame/matching.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "domgame/errors.hpp"

namespace domgame {

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<Edge> run() {
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      Vertex u = find_path(v);
      while (u != -1) {
        Vertex pv = parent_[u];
        Vertex next = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = next;
      }
    }
    std::vector<Edge> pairs;
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] > v) pairs.emplace_back(v, match_[v]);
    }
    return pairs;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          Vertex shared = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, shared, to);
          mark_path(to, shared, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = shared;
            if (!used_[i]) {
              used_[i] = 1;
              queue.push(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace

Vertex MatchingStructure::partner(Vertex v) const {
  int e = edge_of[v];
  if (e < 0) return -1;
  return edges[e].u == v ? edges[e].v : edges[e].u;
}

std::vector<Edge> maximum_matching(const Graph& g) { return Blossom(g).run(); }

MatchingStructure classify_matching(const Graph& g, std::span<const Edge> pairs) {
  MatchingStructure ms;
  ms.edge_of.assign(g.order(), -1);
  for (auto [a, b] : pairs) {
    if (!g.adjacent(a, b)) {
      throw GraphError("matching pair (" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge");
    }
    if (ms.edge_of[a] >= 0 || ms.edge_of[b] >= 0) throw GraphError("matching pairs share a vertex");
    ms.edge_of[a] = ms.edge_of[b] = static_cast<int>(ms.edges.size());
    ms.edges.push_back({std::min(a, b), std::max(a, b)});
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (ms.edge_of[v] >= 0) continue;
    ms.external.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (ms.edge_of[u] < 0) {
        throw GraphError("external vertices " + std::to_string(v) + " and " + std::to_string(u) +
                         " are adjacent; matching is not maximum");
      }
    }
  }

  auto external_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex u : g.neighbors(v)) {
      if (ms.edge_of[u] < 0) out.push_back(u);
    }
    return out;
  };

  for (auto& e : ms.edges) {
    auto at_u = external_neighbors(e.u);
    auto at_v = external_neighbors(e.v);
    if (at_u.empty() && at_v.empty()) continue;
    if (at_v.empty()) {
      e.kind = EdgeKind::star;
      e.center = e.u;
      continue;
    }
    if (at_u.empty()) {
      e.kind = EdgeKind::star;
      e.center = e.v;
      continue;
    }
    if (at_u.size() == 1 && at_v.size() == 1 && at_u[0] == at_v[0]) {
      e.kind = EdgeKind::triangle;
      e.apex = at_u[0];
      continue;
    }
    throw GraphError("matching edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") has external neighbours on both ends; matching is not maximum");
  }
  return ms;
}

}  // namespace domgame
