#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "domgame/graph.hpp"

namespace domgame {

// graph6 encoding (n <= 258047). Throws ParseError with the byte offset of
// the first offending character.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Edge-list text: "n m" header, then m lines "u v". '#' starts a comment.
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

/// A graph together with where it came from. Generator specs of the form
/// "subdiv2:<spec>" also carry the subdivision map, which the subdivision
/// strategy needs.
struct LoadedGraph {
  Graph graph;
  std::string name;
  std::optional<SubdivisionMap> subdivision;
};

// Generator specs: "cycle:8", "path:5", "complete:4", "petersen",
// "subdiv2:cycle:3", "union:cycle:4+cycle:8", "random:10:0.3:7"
// (n, edge probability, seed).
LoadedGraph generate(std::string_view spec);

// Edge-list file, or graph6 when the extension is .g6.
LoadedGraph load_graph_file(const std::string& path);

}  // namespace domgame
