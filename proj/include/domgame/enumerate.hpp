#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

inline constexpr int kMaxEnumerationOrder = 8;

// Smallest upper-triangle adjacency bitstring (pairs (i,j), i<j, in
// lexicographic order, first pair most significant) over all vertex orders
// that respect a label-independent refinement of the degree partition.
// Equal codes <=> isomorphic graphs. Needs n <= 11.
std::uint64_t canonical_code(const Graph& g);

// All graphs on n vertices up to isomorphism, one canonical representative
// each, sorted by canonical code. 1 <= n <= kMaxEnumerationOrder.
std::vector<Graph> enumerate_graphs(int n);
std::vector<Graph> enumerate_connected_graphs(int n);
std::vector<Graph> enumerate_isolate_free_graphs(int n);

struct CorpusEntry {
  std::string name;  // "<family>:<n>:<graph6>"
  Graph graph;
};

// "connected:6" (orders 2..6), "connected:4-6", "isolatefree:N",
// "perfectmatching:N" (isolate free with a perfect matching), "all:N".
std::vector<CorpusEntry> corpus(std::string_view spec);

}  // namespace domgame
