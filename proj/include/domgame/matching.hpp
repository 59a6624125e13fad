#pragma once

#include <span>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

// How the external (unmatched) vertices attach to one matching edge.
enum class EdgeKind {
  bare,      // no external neighbour
  triangle,  // one external vertex adjacent to both ends, no other
  star,      // all external neighbours hang off one end, the center
};

struct MatchingEdge {
  Vertex u;
  Vertex v;
  EdgeKind kind = EdgeKind::bare;
  Vertex center = -1;  // star edges only
  Vertex apex = -1;    // triangle edges only: the shared external vertex
};

struct MatchingStructure {
  std::vector<MatchingEdge> edges;
  std::vector<Vertex> external;
  std::vector<int> edge_of;  // per vertex: index into edges, -1 if external

  bool is_perfect() const { return external.empty(); }
  bool is_external(Vertex v) const { return edge_of[v] < 0; }
  // The other endpoint of v's matching edge; -1 for external vertices.
  Vertex partner(Vertex v) const;
};

// Maximum-cardinality matching (Edmonds' blossom algorithm). Pairs come out
// as (u, v) with u < v, sorted. Free vertices are scanned in index order, so
// the result is deterministic.
std::vector<Edge> maximum_matching(const Graph& g);

// Splits V into matched and external vertices and classifies every matching
// edge. Throws GraphError if the pairs are not a matching of g, or if the
// external structure is impossible for a maximum matching (two external
// vertices adjacent, or external neighbours on both ends of one edge that
// are not a single shared vertex).
MatchingStructure classify_matching(const Graph& g, std::span<const Edge> pairs);

inline MatchingStructure analyze_matching(const Graph& g) {
  return classify_matching(g, maximum_matching(g));
}

}  // namespace domgame
