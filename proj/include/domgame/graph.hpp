#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace domgame {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Adjacency lists are sorted and duplicate free. Isolated vertices are
 * allowed here; the game engine rejects them when a game is created.
 */
class Graph {
 public:
  Graph() = default;

  // Throws GraphError on out-of-range endpoints or self-loops. Parallel
  // edges are merged.
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  // N[v] in ascending order.
  std::vector<Vertex> closed_neighborhood(Vertex v) const;

  // Every edge once, as (u, v) with u < v, ordered lexicographically.
  std::vector<Edge> edges() const;

  int min_degree() const;
  bool has_isolated_vertex() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

// Partition of V into maximal connected sets, each sorted, ordered by their
// smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

// Component index of every vertex, consistent with components().
std::vector<int> component_ids(const Graph& g);

Graph gen_cycle(int n);
Graph gen_path(int n);
Graph gen_complete(int n);
Graph gen_petersen();
Graph disjoint_union(const Graph& first, const Graph& second);

// G(n, p) with a seeded generator; every isolated vertex is then joined to a
// uniformly chosen other vertex so the result is isolate free.
Graph gen_random_isolate_free(int n, double p, std::uint64_t seed);

// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// Subgraph induced by `vertices`; vertex vertices[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

struct SubdividedEdge {
  Vertex w;  // base endpoint (smaller id)
  Vertex z;  // base endpoint (larger id)
  Vertex x;  // inserted vertex adjacent to w
  Vertex y;  // inserted vertex adjacent to z
};

/// Result of replacing every edge wz by a path w-x-y-z. Base vertices keep
/// their ids; the two inserted vertices of the i-th base edge (in
/// Graph::edges() order) are n + 2i and n + 2i + 1.
struct SubdivisionMap {
  Graph base;
  std::vector<SubdividedEdge> paths;

  bool is_base_vertex(Vertex v) const { return v < base.order(); }
  // Index into `paths` for an inserted vertex.
  int path_of(Vertex v) const { return (v - base.order()) / 2; }
};

std::pair<Graph, SubdivisionMap> subdivide3(const Graph& g);

}  // namespace domgame
