#include "domgame/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "domgame/enumerate.hpp"
#include "domgame/errors.hpp"
#include "domgame/game.hpp"
#include "domgame/graph_io.hpp"
#include "domgame/matching.hpp"
#include "domgame/solver.hpp"
#include "domgame/strategies.hpp"
#include "domgame/verify.hpp"

namespace domgame {

namespace {

using GraphPtr = std::shared_ptr<const Graph>;

void check(bool ok, const std::string& what) {
  if (!ok) throw SuiteFailure(what);
}

GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

GameConfig ddg(Player start, PassRights pass = PassRights::none) {
  GameConfig c;
  c.starter = start;
  c.pass = pass;
  return c;
}

GameConfig bdg(Player start) {
  GameConfig c;
  c.variant = Variant::bdg;
  c.starter = start;
  return c;
}

constexpr Player kStarts[] = {Player::dom, Player::sepy};

std::string describe(const GameConfig& c) {
  std::string s = to_string(c.variant) + " " + to_string(c.starter) + "-start";
  if (c.dom_picks != 1 || c.sepy_picks != 1) {
    s += " (" + std::to_string(c.dom_picks) + ":" + std::to_string(c.sepy_picks) + ")";
  }
  if (c.pass != PassRights::none) s += " pass=" + to_string(c.pass);
  return s;
}

std::string name_of(const Graph& g) { return emit_graph6(g); }

const std::vector<Graph>& graphs_of_order(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_graphs(n)).first;
  return it->second;
}

std::vector<Graph> connected_graphs(int lo, int hi) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) {
    for (const auto& g : graphs_of_order(n)) {
      if (is_connected(g)) out.push_back(g);
    }
  }
  return out;
}

std::vector<Graph> isolate_free_graphs(int lo, int hi) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) {
    for (const auto& g : graphs_of_order(n)) {
      if (!g.has_isolated_vertex()) out.push_back(g);
    }
  }
  return out;
}

std::string moves_of(const GameState& s) {
  std::string out;
  for (const auto& p : s.history()) {
    if (!out.empty()) out += ", ";
    out += to_string(p.actor) + ":" + to_string(p.move);
  }
  return out;
}

std::uint64_t expect_verified(StrategyId id, Player role, const GameConfig& config, const Graph& g,
                              const StrategyOptions& options = {}, const MoveObserver& observer = {}) {
  VerificationReport r;
  try {
    r = verify_strategy(id, role, config, share(g), options, name_of(g), observer);
  } catch (const NotApplicable& e) {
    throw SuiteFailure(to_string(id) + " not applicable on " + name_of(g) + " " + describe(config) + ": " + e.what());
  }
  if (!r.verified) {
    throw SuiteFailure(to_string(id) + " failed on " + name_of(g) + " " + describe(config) + ": " + r.failure +
                       " after [" + moves_of(*r.counterexample) + "]");
  }
  return r.branches;
}

void expect_winner(const GameConfig& config, const Graph& g, Player expected) {
  SolverOptions opts;
  opts.max_order = std::max(opts.max_order, g.order());
  const auto r = solve(config, g, opts);
  check(r.winner == expected, "solver: " + to_string(r.winner) + " wins on " + name_of(g) + " " + describe(config) +
                                  ", expected " + to_string(expected));
}

MoveObserver opposite_neighbor_observer() {
  return [](const GameState&, const Move&, const GameState& after) -> std::optional<std::string> {
    if (every_colored_vertex_has_opposite_neighbor(after)) return std::nullopt;
    return "a coloured vertex lacks a neighbour of the other colour after Dom's move";
  };
}

MoveObserver bdg_observer(const Graph& g) {
  const auto pairs = maximum_matching(g);
  return [pairs](const GameState&, const Move&, const GameState& after) -> std::optional<std::string> {
    std::set<Vertex> mine;
    for (const auto& p : after.history()) {
      if (p.actor == Player::dom && !p.move.is_pass) mine.insert(p.move.vertex);
    }
    for (auto [u, v] : pairs) {
      if (mine.count(u) && mine.count(v)) return "Dom coloured both ends of a matching edge";
    }
    for (Vertex v = 0; v < after.order(); ++v) {
      if (after.color_of(v) == Color::blue && !after.dominated(v, Color::purple)) {
        return "a blue vertex has no purple neighbour after Dom's move";
      }
    }
    return std::nullopt;
  };
}

// ---------------------------------------------------------------------------
// Rule checks recomputed from the colouring alone.

struct RuleCheck {
  std::uint64_t states = 0;

  static bool mono(const GameState& s, Vertex v, Color c) {
    if (s.color_of(v) != c) return false;
    for (Vertex u : s.graph().neighbors(v)) {
      if (s.color_of(u) != c) return false;
    }
    return true;
  }

  static int count(const GameState& s, Vertex v, Color c) {
    int k = s.color_of(v) == c ? 1 : 0;
    for (Vertex u : s.graph().neighbors(v)) k += s.color_of(u) == c ? 1 : 0;
    return k;
  }

  static bool can_select(const GameState& s, Vertex v, Color c) {
    if (s.color_of(v)) return false;
    if (count(s, v, c) == 0) return true;
    for (Vertex u : s.graph().neighbors(v)) {
      if (count(s, u, c) == 0) return true;
    }
    return false;
  }

  void state(const GameState& s, const std::string& where) {
    ++states;
    const int n = s.order();
    bool any_mono = false;
    bool all_double = true;
    bool some_selection = false;
    for (Vertex v = 0; v < n; ++v) {
      for (Color c : kColors) {
        check(s.ledger(v, c) == count(s, v, c), "ledger-consistency: ledger differs from recount at " + where);
        any_mono = any_mono || mono(s, v, c);
        all_double = all_double && count(s, v, c) > 0;
        some_selection = some_selection || can_select(s, v, c);
      }
    }
    const bool bdg_game = s.config().variant == Variant::bdg;
    const bool dom_end = !any_mono && (bdg_game ? !some_selection : all_double);
    check(!(any_mono && all_double && !bdg_game), "both end conditions hold at " + where);
    const auto kind = s.status().kind;
    check((kind == Status::Kind::sepy_win) == any_mono, "status disagrees with recount (Sepy win) at " + where);
    check((kind == Status::Kind::dom_win) == dom_end, "status disagrees with recount (Dom win) at " + where);
    if (bdg_game && kind == Status::Kind::dom_win) {
      bool covered = true;
      for (Vertex v = 0; v < n; ++v) covered = covered && count(s, v, Color::purple) > 0;
      bool covered_blue = true;
      for (Vertex v = 0; v < n; ++v) covered_blue = covered_blue && count(s, v, Color::blue) > 0;
      check(covered || covered_blue, "bicolored end without a dominating colour at " + where);
    }
    if (s.status().ongoing()) check(!legal_moves(s).empty(), "ongoing state without a legal move at " + where);
  }

  void move(const GameState& after, const Move& m, const std::string& where) {
    if (m.is_pass) return;
    check(!mono(after, m.vertex, m.color), "legal selection made its own neighbourhood monochromatic at " + where);
  }
};

std::vector<GameConfig> all_variants() {
  std::vector<GameConfig> out;
  for (Player start : kStarts) {
    for (PassRights p : {PassRights::none, PassRights::dom, PassRights::sepy}) out.push_back(ddg(start, p));
    out.push_back(bdg(start));
    out.push_back(GameConfig::biased(2, 1, start));
    out.push_back(GameConfig::biased(1, 2, start));
  }
  return out;
}

std::string state_key(const GameState& s) {
  std::string k(s.raw_colors().begin(), s.raw_colors().end());
  k += static_cast<char>(s.actor());
  k += static_cast<char>(s.selections_this_turn());
  k += static_cast<char>(s.any_move_made());
  return k;
}

void explore(const GameState& s, RuleCheck& rc, std::set<std::string>& seen, const std::string& where) {
  if (!seen.insert(state_key(s)).second) return;
  rc.state(s, where);
  for (const Move& m : legal_moves(s)) {
    GameState next = apply(s, m);
    rc.move(next, m, where);
    explore(next, rc, seen, where);
  }
}

// ---------------------------------------------------------------------------
// Independent oracles for the graph layer.

int brute_matching(const Graph& g, std::vector<bool>& used, Vertex from) {
  Vertex v = from;
  while (v < g.order() && used[v]) ++v;
  if (v >= g.order()) return 0;
  used[v] = true;
  int best = brute_matching(g, used, v + 1);
  for (Vertex u : g.neighbors(v)) {
    if (used[u]) continue;
    used[u] = true;
    best = std::max(best, 1 + brute_matching(g, used, v + 1));
    used[u] = false;
  }
  used[v] = false;
  return best;
}

bool is_matching_of(const Graph& g, const std::vector<Edge>& pairs) {
  std::vector<bool> used(g.order(), false);
  for (auto [u, v] : pairs) {
    if (!g.adjacent(u, v) || used[u] || used[v]) return false;
    used[u] = used[v] = true;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::string cycles() {
  std::uint64_t branches = 0;
  for (int n = 8; n <= 11; ++n) {
    const Graph g = gen_cycle(n);
    expect_winner(ddg(Player::dom), g, Player::sepy);
    branches += expect_verified(StrategyId::sepy_cycle, Player::sepy, ddg(Player::dom), g);
  }
  return "C8..C11 solved and sepy-cycle verified, " + std::to_string(branches) + " lines";
}

std::string connected_ons(PassRights pass, StrategyId id) {
  const auto graphs = connected_graphs(2, 6);
  std::uint64_t branches = 0;
  for (const auto& g : graphs) {
    expect_winner(ddg(Player::sepy, pass), g, Player::dom);
    branches += expect_verified(id, Player::dom, ddg(Player::sepy, pass), g, {}, opposite_neighbor_observer());
  }
  return std::to_string(graphs.size()) + " connected graphs, " + std::to_string(branches) + " lines";
}

std::string dom_pass() {
  const Graph c4c8 = disjoint_union(gen_cycle(4), gen_cycle(8));
  expect_winner(ddg(Player::dom, PassRights::dom), c4c8, Player::dom);
  std::uint64_t branches = expect_verified(StrategyId::dom_pass, Player::dom, ddg(Player::dom, PassRights::dom), c4c8);
  branches += expect_verified(StrategyId::dom_pass, Player::dom, ddg(Player::sepy, PassRights::dom), c4c8);
  const auto parts = connected_graphs(2, 6);
  int unions = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      if (parts[i].order() + parts[j].order() > 8) continue;
      branches += expect_verified(StrategyId::dom_pass, Player::dom, ddg(Player::sepy, PassRights::dom),
                                  disjoint_union(parts[i], parts[j]));
      ++unions;
    }
  }
  return "C4+C8 both starts and " + std::to_string(unions) + " two-component unions, " + std::to_string(branches) +
         " lines";
}

std::string c4_c8_passing() {
  const Graph g = disjoint_union(gen_cycle(4), gen_cycle(8));
  expect_winner(ddg(Player::sepy, PassRights::sepy), g, Player::sepy);
  expect_winner(ddg(Player::sepy, PassRights::none), g, Player::dom);
  return "Sepy wins with passing, Dom wins without";
}

std::string safe_start() {
  std::vector<Graph> graphs;
  for (int n = 2; n <= 6; ++n) graphs.push_back(gen_complete(n));
  for (int n = 2; n <= 7; ++n) graphs.push_back(gen_path(n));
  int with_pair = 0;
  for (const auto& g : connected_graphs(2, 6)) {
    if (safe_opening_vertex(g)) {
      graphs.push_back(g);
      ++with_pair;
    }
  }
  std::uint64_t branches = 0;
  for (const auto& g : graphs) {
    expect_winner(ddg(Player::dom), g, Player::dom);
    branches += expect_verified(StrategyId::dom_start_safe, Player::dom, ddg(Player::dom), g);
  }
  return "K2..K6, P2..P7 and " + std::to_string(with_pair) + " connected graphs with a pair, " +
         std::to_string(branches) + " lines";
}

std::string subdivisions() {
  expect_winner(ddg(Player::dom), gen_cycle(9), Player::sepy);
  std::uint64_t branches = 0;
  for (const Graph& base : {gen_cycle(3), gen_cycle(4), gen_complete(4)}) {
    auto [g, map] = subdivide3(base);
    StrategyOptions opts;
    opts.subdivision = map;
    branches += expect_verified(StrategyId::sepy_subdiv, Player::sepy, ddg(Player::dom), g, opts);
  }
  return "C3, C4 and K4 subdivided, " + std::to_string(branches) + " lines";
}

std::string biased() {
  const auto graphs = isolate_free_graphs(2, 6);
  std::uint64_t branches = 0;
  for (const auto& g : graphs) {
    for (Player start : kStarts) {
      branches += expect_verified(StrategyId::biased_dom, Player::dom, GameConfig::biased(2, 1, start), g);
    }
  }
  std::vector<Graph> solved = isolate_free_graphs(2, 8);
  const std::size_t enumerated = solved.size();
  for (int n = 9; n <= 10; ++n) {
    solved.push_back(gen_cycle(n));
    solved.push_back(gen_path(n));
    solved.push_back(gen_complete(n));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) solved.push_back(gen_random_isolate_free(n, 0.3, seed * 31 + n));
  }
  solved.push_back(gen_petersen());
  solved.push_back(disjoint_union(gen_cycle(4), gen_cycle(6)));
  for (const auto& g : solved) {
    for (Player start : kStarts) expect_winner(GameConfig::biased(2, 1, start), g, Player::dom);
  }
  return std::to_string(graphs.size()) + " graphs verified both starts; solver agrees on " +
         std::to_string(enumerated) + " enumerated (n <= 8) and " + std::to_string(solved.size() - enumerated) +
         " sampled (n = 9, 10), " + std::to_string(branches) + " lines";
}

std::string bdg_matching() {
  std::uint64_t branches = 0;
  int count = 0;
  for (int n : {2, 4, 6}) {
    for (const auto& g : graphs_of_order(n)) {
      if (g.has_isolated_vertex() || static_cast<int>(maximum_matching(g).size()) * 2 != n) continue;
      ++count;
      for (Player start : kStarts) {
        branches += expect_verified(StrategyId::bdg_matching, Player::dom, bdg(start), g, {}, bdg_observer(g));
      }
    }
  }
  return std::to_string(count) + " graphs with a perfect matching, " + std::to_string(branches) + " lines";
}

std::string bdg_general() {
  const auto graphs = isolate_free_graphs(2, 6);
  std::uint64_t branches = 0;
  for (const auto& g : graphs) {
    for (Player start : kStarts) {
      branches += expect_verified(StrategyId::bdg_general, Player::dom, bdg(start), g, {}, bdg_observer(g));
      expect_winner(bdg(start), g, Player::dom);
    }
  }
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 9;
    const Graph g = gen_random_isolate_free(n, 0.2 + 0.05 * (i % 7), 1000 + i);
    for (Player start : kStarts) expect_winner(bdg(start), g, Player::dom);
  }
  return std::to_string(graphs.size()) + " graphs verified both starts, 100 random graphs solved, " +
         std::to_string(branches) + " lines";
}

std::string properties() {
  const auto variants = all_variants();
  const auto small = isolate_free_graphs(2, 5);

  RuleCheck rc;
  for (const auto& g : small) {
    auto shared = share(g);
    for (const auto& config : variants) {
      std::set<std::string> seen;
      explore(new_game(config, shared), rc, seen, name_of(g) + " " + describe(config));
    }
  }
  const std::uint64_t tree_states = rc.states;

  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 10000; ++i) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const double p = 0.15 + 0.1 * static_cast<double>(rng() % 5);
    const Graph g = gen_random_isolate_free(n, p, rng());
    const GameConfig config = variants[rng() % variants.size()];
    GameState s = new_game(config, g);
    const std::string where = "random playout " + std::to_string(i);
    rc.state(s, where);
    while (s.status().ongoing()) {
      const auto moves = legal_moves(s);
      const Move m = moves[rng() % moves.size()];
      s.play(m);
      rc.move(s, m, where);
      rc.state(s, where);
    }
  }

  int solved = 0;
  for (const auto& g : small) {
    for (const auto& config : variants) {
      SolverOptions plain;
      plain.memoize = false;
      const auto a = solve(config, g);
      const auto b = solve(config, g, plain);
      check(a.winner == b.winner, "memoized and plain solver disagree on " + name_of(g) + " " + describe(config));
      ++solved;
    }
  }

  // Palette swap on random positions of a few fixtures.
  int swaps = 0;
  for (const Graph& g : {gen_cycle(5), gen_cycle(6), gen_path(6), gen_petersen(), gen_random_isolate_free(8, 0.3, 5)}) {
    auto shared = share(g);
    for (const auto& config : {ddg(Player::dom), ddg(Player::sepy, PassRights::sepy), GameConfig::biased(2, 1, Player::sepy)}) {
      for (int k = 0; k < 10; ++k) {
        GameState s = new_game(config, shared);
        for (int step = 0; step < 2 && s.status().ongoing(); ++step) {
          const auto moves = legal_moves(s);
          s.play(moves[rng() % moves.size()]);
        }
        if (!s.status().ongoing()) continue;
        auto pos = SolverPosition::from_state(s);
        auto swapped = pos;
        for (auto& c : swapped.colors) c = c == 0 ? 0 : 3 - c;
        Solver solver(config, shared);
        const auto r = solver.solve(pos);
        const auto rs = solver.solve(swapped);
        check(r.winner == rs.winner, "palette swap changes the winner on " + name_of(g) + " " + describe(config));
        if (r.winner == pos.actor) {
          Move mirrored = *r.best_move;
          if (!mirrored.is_pass) mirrored.color = complement(mirrored.color);
          bool found = false;
          for (auto& [m, w] : solver.evaluate_moves(swapped)) {
            if (m == mirrored) found = w == pos.actor;
          }
          check(found, "swapped best move does not win on " + name_of(g) + " " + describe(config));
        }
        ++swaps;
      }
    }
  }

  struct Fixture {
    Graph g;
    GameConfig config;
  };
  const std::vector<Fixture> fixtures = {
      {gen_cycle(8), ddg(Player::dom)},
      {gen_path(6), ddg(Player::dom)},
      {disjoint_union(gen_cycle(3), gen_path(4)), ddg(Player::sepy, PassRights::sepy)},
      {gen_random_isolate_free(8, 0.35, 77), bdg(Player::sepy)},
      {gen_random_isolate_free(7, 0.3, 78), GameConfig::biased(2, 1, Player::dom)},
  };
  for (const auto& f : fixtures) {
    const Player base = solve(f.config, f.g).winner;
    std::vector<Vertex> perm(f.g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < 100; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      check(solve(f.config, relabel(f.g, perm)).winner == base,
            "relabelling changes the winner on " + name_of(f.g) + " " + describe(f.config));
    }
  }

  return std::to_string(tree_states) + " tree states, 10000 playouts (" + std::to_string(rc.states - tree_states) +
         " states), " + std::to_string(solved) + " memo checks, " + std::to_string(swaps) + " palette swaps, " +
         std::to_string(fixtures.size()) + "x100 relabelings";
}

std::string graph_core() {
  int matched = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& g : graphs_of_order(n)) {
      const auto m = maximum_matching(g);
      std::vector<bool> used(n, false);
      check(is_matching_of(g, m), "maximum_matching returned a non-matching on " + name_of(g));
      check(static_cast<int>(m.size()) == brute_matching(g, used, 0), "matching is not maximum on " + name_of(g));
      classify_matching(g, m);
      ++matched;
    }
  }
  check(maximum_matching(gen_petersen()).size() == 5, "Petersen matching size is not 5");
  int round_trips = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : graphs_of_order(n)) {
      const auto text = emit_graph6(g);
      check(parse_graph6(text) == g, "graph6 round trip failed for " + text);
      ++round_trips;
    }
  }
  const int expected[] = {1, 2, 6, 21, 112};
  for (int n = 2; n <= 6; ++n) {
    const auto got = enumerate_connected_graphs(n).size();
    check(static_cast<int>(got) == expected[n - 2],
          "connected graphs on " + std::to_string(n) + " vertices: " + std::to_string(got));
  }
  return std::to_string(matched) + " matchings checked, " + std::to_string(round_trips) +
         " graph6 round trips, connected counts 1 2 6 21 112";
}

}  // namespace

std::vector<SuiteItem> acceptance_items() {
  return {
      {1, "cycles", "Sepy wins Dom-start on C8..C11; sepy-cycle verified", cycles},
      {2, "connected", "Dom wins Sepy-start on connected graphs n <= 6; ons verified",
       [] { return connected_ons(PassRights::none, StrategyId::ons); }},
      {3, "connected-pass", "as item 2 with Sepy passing; onsp verified",
       [] { return connected_ons(PassRights::sepy, StrategyId::onsp); }},
      {4, "dom-pass", "Dom passing: C4+C8 Dom-start and two-component unions n <= 8", dom_pass},
      {5, "c4-c8", "C4+C8 Sepy-start: Sepy wins with passing, Dom without", c4_c8_passing},
      {6, "safe-start", "dom-start-safe verified on Kn, Pn and graphs with N[u] in N[v]", safe_start},
      {7, "subdivisions", "Sepy wins on subdivided C3, C4, K4", subdivisions},
      {8, "biased", "(2:1) game: biased-dom verified n <= 6, solver agrees", biased},
      {9, "bdg-matching", "bicolored game with a perfect matching: bdg-matching verified", bdg_matching},
      {10, "bdg-general", "bicolored game: bdg-general verified n <= 6, solver agrees", bdg_general},
      {11, "properties", "rule invariants, solver memo, palette and relabeling checks", properties},
      {12, "graph-core", "matching, graph6 and enumeration oracles", graph_core},
  };
}

bool item_selected(const SuiteItem& item, std::string_view only) {
  if (only.empty()) return true;
  std::stringstream ss{std::string(only)};
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token == item.name || token == std::to_string(item.number)) return true;
  }
  return false;
}

std::vector<ItemOutcome> run_suite(std::string_view only, std::ostream& out) {
  std::vector<ItemOutcome> outcomes;
  for (const auto& item : acceptance_items()) {
    if (!item_selected(item, only)) continue;
    ItemOutcome o;
    o.number = item.number;
    o.name = item.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o.detail = item.run();
      o.passed = true;
    } catch (const std::exception& e) {
      o.detail = e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << format_outcome(o) << std::endl;
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

std::string format_outcome(const ItemOutcome& o) {
  std::ostringstream s;
  s << (o.passed ? "PASS" : "FAIL") << "  " << o.number << " " << o.name << ": " << o.detail;
  s.setf(std::ios::fixed);
  s.precision(1);
  s << " [" << o.seconds << "s]";
  return s.str();
}

}  // namespace domgame
