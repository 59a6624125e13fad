#include "domgame/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "domgame/errors.hpp"

namespace domgame {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int char_value(std::string_view text, std::size_t pos) {
  auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6 character outside [63,126]", pos);
  return c - 63;
}

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw GraphError("bad " + std::string(what) + ": '" + std::string(token) + "'");
  }
  return value;
}

double parse_double(std::string_view token) {
  try {
    std::size_t used = 0;
    double value = std::stod(std::string(token), &used);
    if (used != token.size()) throw GraphError("bad probability '" + std::string(token) + "'");
    return value;
  } catch (const std::logic_error&) {
    throw GraphError("bad probability '" + std::string(token) + "'");
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  if (pos >= text.size()) throw ParseError("empty graph6 input", pos);

  long n = 0;
  if (text[pos] != '~') {
    n = char_value(text, pos++);
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    throw ParseError("graph6 order above 258047 not supported", pos);
  } else {
    if (pos + 4 > text.size()) throw ParseError("truncated graph6 order", text.size());
    for (int k = 1; k <= 3; ++k) n = (n << 6) | char_value(text, pos + k);
    pos += 4;
  }

  const long bits = n * (n - 1) / 2;
  const long expected = (bits + 5) / 6;
  const long available = static_cast<long>(text.size() - pos);
  if (available != expected) {
    throw ParseError("graph6 body has " + std::to_string(available) + " bytes, expected " +
                         std::to_string(expected),
                     available < expected ? text.size() : pos + expected);
  }

  std::vector<Edge> edges;
  long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = char_value(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (long b = 0; b < expected; ++b) char_value(text, pos + b);
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw GraphError("graph6 order above 258047 not supported");
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::vector<int> numbers;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) numbers.push_back(parse_int(token, "integer"));
  }
  if (numbers.size() < 2) throw GraphError("edge list needs an 'n m' header");
  const int n = numbers[0];
  const int m = numbers[1];
  if (m < 0 || numbers.size() != 2 + 2 * static_cast<std::size_t>(m)) {
    throw GraphError("edge list declares " + std::to_string(m) + " edges but has " +
                     std::to_string((numbers.size() - 2) / 2));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(numbers[2 + 2 * i], numbers[3 + 2 * i]);
  return Graph::from_edge_list(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

LoadedGraph generate(std::string_view spec) {
  const std::string name(spec);
  if (spec.starts_with("union:")) {
    auto rest = spec.substr(6);
    std::optional<Graph> acc;
    while (true) {
      auto plus = rest.find('+');
      auto part = generate(rest.substr(0, plus)).graph;
      acc = acc ? disjoint_union(*acc, part) : part;
      if (plus == std::string_view::npos) break;
      rest = rest.substr(plus + 1);
    }
    return {*acc, name, std::nullopt};
  }
  if (spec.starts_with("subdiv2:")) {
    auto [g, map] = subdivide3(generate(spec.substr(8)).graph);
    return {std::move(g), name, std::move(map)};
  }
  if (spec == "petersen") return {gen_petersen(), name, std::nullopt};

  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw GraphError("unknown graph spec '" + name + "'");
  auto kind = spec.substr(0, colon);
  auto arg = spec.substr(colon + 1);
  if (kind == "cycle") return {gen_cycle(parse_int(arg, "cycle order")), name, std::nullopt};
  if (kind == "path") return {gen_path(parse_int(arg, "path order")), name, std::nullopt};
  if (kind == "complete") return {gen_complete(parse_int(arg, "clique order")), name, std::nullopt};
  if (kind == "g6") return {parse_graph6(arg), name, std::nullopt};
  if (kind == "random") {
    auto c1 = arg.find(':');
    auto c2 = c1 == std::string_view::npos ? c1 : arg.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw GraphError("random spec is random:n:p:seed");
    int n = parse_int(arg.substr(0, c1), "order");
    double p = parse_double(arg.substr(c1 + 1, c2 - c1 - 1));
    auto seed = static_cast<std::uint64_t>(parse_int(arg.substr(c2 + 1), "seed"));
    return {gen_random_isolate_free(n, p, seed), name, std::nullopt};
  }
  throw GraphError("unknown graph spec '" + name + "'");
}

LoadedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  if (path.ends_with(".g6")) {
    std::string line;
    std::getline(in, line);
    return {parse_graph6(line), path, std::nullopt};
  }
  return {read_edge_list(in), path, std::nullopt};
}

}  // namespace domgame
