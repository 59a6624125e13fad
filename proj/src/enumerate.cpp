#include "domgame/enumerate.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "domgame/errors.hpp"
#include "domgame/graph_io.hpp"
#include "domgame/matching.hpp"

namespace domgame {

namespace {

// Colour refinement starting from degrees. Returns cells in a label
// independent order.
std::vector<std::vector<Vertex>> refined_cells(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::pair<std::vector<int>, Vertex>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      std::vector<int> around;
      for (Vertex u : g.neighbors(v)) around.push_back(color[u]);
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> rank;
    for (auto& [s, v] : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, value] : rank) value = r++;
    for (auto& [s, v] : sig) color[v] = rank[s];
    if (r == classes) break;
    classes = r;
  }
  std::vector<std::vector<Vertex>> cells(classes);
  for (Vertex v = 0; v < n; ++v) cells[color[v]].push_back(v);
  return cells;
}

std::uint64_t code_for(const std::vector<std::uint32_t>& adj, const std::vector<Vertex>& order) {
  std::uint64_t code = 0;
  const int n = static_cast<int>(order.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) code = (code << 1) | ((adj[order[i]] >> order[j]) & 1u);
  }
  return code;
}

std::vector<Vertex> best_order(const Graph& g, std::uint64_t* best_code) {
  const int n = g.order();
  if (n > 11) throw GraphError("canonical form supports n <= 11");
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  auto cells = refined_cells(g);
  std::vector<Vertex> order;
  for (auto& c : cells) order.insert(order.end(), c.begin(), c.end());
  std::vector<std::size_t> start;
  std::size_t off = 0;
  for (auto& c : cells) {
    start.push_back(off);
    off += c.size();
  }

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<Vertex> best_ord = order;
  // Odometer over the per-cell permutations.
  auto visit = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      auto code = code_for(adj, order);
      if (code < best) {
        best = code;
        best_ord = order;
      }
      return;
    }
    auto first = order.begin() + static_cast<long>(start[cell]);
    auto last = first + static_cast<long>(cells[cell].size());
    std::sort(first, last);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(first, last));
  };
  visit(visit, 0);
  *best_code = best;
  return best_ord;
}

Graph from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int bit = n * (n - 1) / 2 - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, --bit) {
      if ((code >> bit) & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(n, edges);
}

int parse_count(std::string_view s) {
  int value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size()) throw GraphError("bad corpus order '" + std::string(s) + "'");
  return value;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  std::uint64_t code = 0;
  best_order(g, &code);
  return code;
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw GraphError("graph enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
  }
  std::vector<Graph> current{Graph::from_edge_list(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> codes;
    for (const auto& g : current) {
      auto base = g.edges();
      for (std::uint32_t subset = 0; subset < (1u << (k - 1)); ++subset) {
        auto e = base;
        for (int u = 0; u < k - 1; ++u) {
          if ((subset >> u) & 1u) e.emplace_back(u, k - 1);
        }
        codes.insert(canonical_code(Graph::from_edge_list(k, e)));
      }
    }
    current.clear();
    for (auto code : codes) current.push_back(from_code(k, code));
  }
  return current;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 2) throw GraphError("connected enumeration supports n >= 2");
  std::vector<Graph> out;
  for (auto& g : enumerate_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> enumerate_isolate_free_graphs(int n) {
  if (n < 2) throw GraphError("isolate-free enumeration supports n >= 2");
  std::vector<Graph> out;
  for (auto& g : enumerate_graphs(n)) {
    if (!g.has_isolated_vertex()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<CorpusEntry> corpus(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw GraphError("corpus spec is <family>:<n> or <family>:<lo>-<hi>");
  auto family = spec.substr(0, colon);
  auto range = spec.substr(colon + 1);
  int lo = 0;
  int hi = 0;
  if (auto dash = range.find('-'); dash != std::string_view::npos) {
    lo = parse_count(range.substr(0, dash));
    hi = parse_count(range.substr(dash + 1));
  } else {
    hi = parse_count(range);
    lo = family == "all" ? 1 : 2;
  }
  if (family != "connected" && family != "isolatefree" && family != "perfectmatching" && family != "all") {
    throw GraphError("unknown corpus family '" + std::string(family) + "'");
  }
  std::vector<CorpusEntry> out;
  for (int n = lo; n <= hi; ++n) {
    for (auto& g : enumerate_graphs(n)) {
      bool keep = true;
      if (family == "connected") keep = n >= 2 && is_connected(g);
      if (family == "isolatefree") keep = n >= 2 && !g.has_isolated_vertex();
      if (family == "perfectmatching") {
        keep = n >= 2 && !g.has_isolated_vertex() &&
               static_cast<int>(maximum_matching(g).size()) * 2 == n;
      }
      if (!keep) continue;
      out.push_back({std::string(family) + ":" + std::to_string(n) + ":" + emit_graph6(g), std::move(g)});
    }
  }
  return out;
}

}  // namespace domgame
