#include "domgame/strategies.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "domgame/errors.hpp"

namespace domgame {

namespace {

struct NamedId {
  std::string_view name;
  StrategyId id;
};

constexpr NamedId kNames[] = {
    {"ons", StrategyId::ons},
    {"onsp", StrategyId::onsp},
    {"dom-start-safe", StrategyId::dom_start_safe},
    {"dom-pass", StrategyId::dom_pass},
    {"biased-dom", StrategyId::biased_dom},
    {"bdg-matching", StrategyId::bdg_matching},
    {"bdg-general", StrategyId::bdg_general},
    {"sepy-cycle", StrategyId::sepy_cycle},
    {"sepy-subdiv", StrategyId::sepy_subdiv},
    {"random", StrategyId::random},
    {"greedy", StrategyId::greedy_win},
    {"solver", StrategyId::solver},
};

bool doubly_dominated(const GameState& s, Vertex v) {
  return s.dominated(v, Color::purple) && s.dominated(v, Color::blue);
}

bool untouched(const GameState& s, std::span<const Vertex> comp) {
  return std::none_of(comp.begin(), comp.end(), [&](Vertex v) { return s.is_colored(v); });
}

bool finished(const GameState& s, std::span<const Vertex> comp) {
  return std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return doubly_dominated(s, v); });
}

bool has_selection_in(const GameState& s, std::span<const Vertex> comp) {
  for (Vertex v : comp) {
    for (Color c : kColors) {
      if (s.selectable(v, c)) return true;
    }
  }
  return false;
}

void require_dom_turn(const GameState& s, Variant variant) {
  if (!s.status().ongoing()) throw std::invalid_argument("strategy asked to move in a finished game");
  if (s.actor() != Player::dom) throw std::invalid_argument("Dom's strategy asked to move on Sepy's turn");
  if (s.config().variant != variant) throw NotApplicable("strategy used in the wrong game variant");
}

void require_sepy_turn(const GameState& s) {
  if (!s.status().ongoing()) throw std::invalid_argument("strategy asked to move in a finished game");
  if (s.actor() != Player::sepy) throw std::invalid_argument("Sepy's strategy asked to move on Dom's turn");
}

}  // namespace

std::string to_string(StrategyId id) {
  for (const auto& n : kNames) {
    if (n.id == id) return std::string(n.name);
  }
  return "unknown";
}

std::optional<StrategyId> parse_strategy_id(std::string_view name) {
  if (name == "cycle") return StrategyId::sepy_cycle;
  if (name == "subdiv") return StrategyId::sepy_subdiv;
  if (name == "greedy-win") return StrategyId::greedy_win;
  for (const auto& n : kNames) {
    if (n.name == name) return n.id;
  }
  return std::nullopt;
}

// --------------------------------------------------------------------------

std::optional<Move> opposite_answer(const GameState& state, const Ply& anchor) {
  if (anchor.move.is_pass) return std::nullopt;
  const Color target = complement(anchor.move.color);
  for (Vertex u : state.graph().neighbors(anchor.move.vertex)) {
    if (state.selectable(u, target)) return Move::select(u, target);
  }
  return std::nullopt;
}

std::optional<Move> frontier_move(const GameState& state, std::span<const Vertex> within) {
  const Graph& g = state.graph();
  auto levels = domination_levels(state, within);
  auto undominated = [&](Vertex w) {
    return !state.dominated(w, Color::purple) && !state.dominated(w, Color::blue);
  };

  if (!levels.none.empty()) {
    for (Vertex u : levels.some) {
      if (state.is_colored(u)) continue;
      auto nb = g.neighbors(u);
      if (std::none_of(nb.begin(), nb.end(), undominated)) continue;
      for (Color c : kColors) {
        const bool opposite_neighbor = std::any_of(nb.begin(), nb.end(), [&](Vertex w) {
          return state.color_of(w) == complement(c);
        });
        if (opposite_neighbor && state.selectable(u, c)) return Move::select(u, c);
      }
    }
  }

  for (Vertex u : levels.one) {
    const Color have = state.dominated(u, Color::purple) ? Color::purple : Color::blue;
    const Color want = complement(have);
    if (!state.is_colored(u)) {
      if (state.selectable(u, want)) return Move::select(u, want);
      continue;
    }
    for (Vertex w : g.neighbors(u)) {
      if (state.selectable(w, want)) return Move::select(w, want);
    }
  }
  return std::nullopt;
}

Move ons_move(const GameState& state) {
  require_dom_turn(state, Variant::ddg);
  if (auto anchor = state.last_selection_by(Player::sepy)) {
    if (auto m = opposite_answer(state, *anchor)) return *m;
  }
  if (auto m = frontier_move(state)) return *m;
  throw StrategyViolation("no opposite-neighbour move available");
}

Move onsp_move(const GameState& state) {
  require_dom_turn(state, Variant::ddg);
  auto anchor = state.last_selection();
  if (!anchor) throw std::invalid_argument("onsp needs a previous selection to answer");
  if (auto m = opposite_answer(state, *anchor)) return *m;
  if (auto m = frontier_move(state)) return *m;
  throw StrategyViolation("no opposite-neighbour move available");
}

std::optional<Vertex> safe_opening_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    auto big = g.closed_neighborhood(v);
    for (Vertex u : g.neighbors(v)) {
      auto small = g.closed_neighborhood(u);
      if (std::includes(big.begin(), big.end(), small.begin(), small.end())) return v;
    }
  }
  return std::nullopt;
}

Move dom_start_safe_move(const GameState& state) {
  require_dom_turn(state, Variant::ddg);
  if (!state.last_selection_by(Player::dom)) {
    auto v = safe_opening_vertex(state.graph());
    if (!v) throw NotApplicable("no vertices u != v with N[u] contained in N[v]");
    return Move::select(*v, Color::purple);
  }
  return ons_move(state);
}

// --------------------------------------------------------------------------

ComponentOutlook ComponentOutlook::analyze(const Graph& g, int solve_limit) {
  ComponentOutlook out;
  out.components = domgame::components(g);
  out.component_of = component_ids(g);
  GameConfig dom_start;
  dom_start.starter = Player::dom;
  for (const auto& comp : out.components) {
    auto sub = std::make_shared<const Graph>(induced_subgraph(g, comp));
    bool wins = false;
    if (static_cast<int>(comp.size()) <= solve_limit && !sub->has_isolated_vertex()) {
      SolverOptions opts;
      opts.max_order = std::max(opts.max_order, solve_limit);
      wins = Solver(dom_start, sub, opts).solve().winner == Player::dom;
    }
    out.subgraphs.push_back(std::move(sub));
    out.dom_wins_starting.push_back(wins);
  }
  return out;
}

std::optional<int> ComponentOutlook::first_dom_win() const {
  for (std::size_t i = 0; i < dom_wins_starting.size(); ++i) {
    if (dom_wins_starting[i]) return static_cast<int>(i);
  }
  return std::nullopt;
}

namespace {

// Dom's optimal move in the stand-alone Dom-start game on one component.
Move local_solver_move(const GameState& state, const ComponentOutlook& outlook, int comp) {
  const auto& verts = outlook.components[comp];
  SolverPosition pos;
  for (Vertex v : verts) pos.colors.push_back(state.raw_colors()[v]);
  pos.actor = Player::dom;
  pos.any_move_made = std::any_of(pos.colors.begin(), pos.colors.end(), [](auto c) { return c != 0; });
  GameConfig local;
  local.starter = Player::dom;
  SolverOptions opts;
  opts.max_order = std::max<int>(opts.max_order, static_cast<int>(verts.size()));
  auto r = Solver(local, outlook.subgraphs[comp], opts).solve(pos);
  if (!r.best_move) throw StrategyViolation("component game already decided");
  return Move::select(verts[r.best_move->vertex], r.best_move->color);
}

}  // namespace

Move dom_pass_move(const GameState& state, const ComponentOutlook& outlook) {
  require_dom_turn(state, Variant::ddg);
  const auto history = state.history();
  if (history.empty()) {
    auto comp = outlook.first_dom_win();
    if (!comp) throw NotApplicable("no component is a Dom win when Dom starts");
    return local_solver_move(state, outlook, *comp);
  }
  auto anchor = state.last_selection_by(Player::sepy);
  if (!anchor) throw StrategyViolation("no Sepy selection to answer");
  const int comp = outlook.component_of[anchor->move.vertex];
  const auto& verts = outlook.components[comp];
  if (!has_selection_in(state, verts)) return Move::pass();
  if (auto m = opposite_answer(state, *anchor)) return *m;
  if (auto m = frontier_move(state, verts)) return *m;
  throw StrategyViolation("no opposite-neighbour move inside the component");
}

bool component_safe(const GameState& state, std::span<const Vertex> comp) {
  if (finished(state, comp)) return true;
  const Graph& g = state.graph();
  for (Vertex u : comp) {
    for (Color c : kColors) {
      if (!state.selectable(u, c)) continue;
      bool completes = true;
      for (Vertex w : comp) {
        const bool gains = w == u || g.adjacent(w, u);
        const bool has_c = state.dominated(w, c) || gains;
        if (!has_c || !state.dominated(w, complement(c))) {
          completes = false;
          break;
        }
      }
      if (completes) return true;
    }
  }
  return false;
}

Move biased_dom_move(const GameState& state) {
  require_dom_turn(state, Variant::ddg);
  const auto& cfg = state.config();
  const int remaining = cfg.dom_picks - state.selections_this_turn();
  const auto comps = components(state.graph());

  std::optional<int> fresh;
  for (std::size_t i = 0; i < comps.size() && !fresh; ++i) {
    if (untouched(state, comps[i])) fresh = static_cast<int>(i);
  }
  auto open_fresh = [&] { return Move::select(comps[*fresh].front(), Color::purple); };

  std::optional<Move> candidate;
  if (auto anchor = state.last_selection()) candidate = opposite_answer(state, *anchor);
  if (!candidate) candidate = frontier_move(state);

  if (!candidate) {
    if (fresh) return open_fresh();
    throw StrategyViolation("no move for the biased strategy");
  }
  // If this selection would finish every opened component and leave a
  // single selection for a new one, spend both on the new component. The
  // opened component stays one move from finished, hence safe.
  if (remaining == 2 && fresh) {
    GameState after = state;
    after.play(*candidate);
    if (after.status().ongoing()) {
      bool all_finished = true;
      for (const auto& comp : comps) {
        if (!untouched(after, comp) && !finished(after, comp)) {
          all_finished = false;
          break;
        }
      }
      if (all_finished) return open_fresh();
    }
  }
  return *candidate;
}

// --------------------------------------------------------------------------

BdgPlan BdgPlan::from_state(const GameState& state, MatchingStructure matching) {
  BdgPlan plan;
  plan.dom_vertex.assign(matching.edges.size(), -1);
  for (const auto& ply : state.history()) {
    if (ply.actor != Player::dom || ply.move.is_pass) continue;
    if (int e = matching.edge_of[ply.move.vertex]; e >= 0) plan.dom_vertex[e] = ply.move.vertex;
  }
  const auto history = state.history();
  if (!history.empty() && history.back().actor == Player::sepy && !history.back().move.is_pass) {
    plan.sepy_last = history.back().move.vertex;
  }
  plan.matching = std::move(matching);
  return plan;
}

namespace {

std::optional<Move> partner_reply(const GameState& state, const BdgPlan& plan) {
  if (!plan.sepy_last) return std::nullopt;
  const Vertex p = plan.matching.partner(*plan.sepy_last);
  if (p >= 0 && state.selectable(p, Color::purple)) return Move::select(p, Color::purple);
  return std::nullopt;
}

bool purple_covers_blue_after(const GameState& state, Vertex v) {
  const Graph& g = state.graph();
  for (Vertex b = 0; b < state.order(); ++b) {
    if (state.color_of(b) != Color::blue || state.dominated(b, Color::purple)) continue;
    if (!g.adjacent(b, v)) return false;
  }
  return true;
}

}  // namespace

Move bdg_matching_move(const GameState& state, const BdgPlan& plan) {
  require_dom_turn(state, Variant::bdg);
  if (!plan.matching.is_perfect()) throw NotApplicable("graph has no perfect matching");
  if (auto m = partner_reply(state, plan)) return *m;
  for (Vertex v = 0; v < state.order(); ++v) {
    const auto& e = plan.matching.edges[plan.matching.edge_of[v]];
    if (state.is_colored(e.u) || state.is_colored(e.v)) continue;
    if (state.selectable(v, Color::purple)) return Move::select(v, Color::purple);
  }
  throw StrategyViolation("no untouched matching pair offers a legal move");
}

Move bdg_general_move(const GameState& state, const BdgPlan& plan) {
  require_dom_turn(state, Variant::bdg);
  const auto& ms = plan.matching;
  if (auto m = partner_reply(state, plan)) return *m;
  for (Vertex v = 0; v < state.order(); ++v) {
    const int ei = ms.edge_of[v];
    if (ei < 0 || !state.selectable(v, Color::purple)) continue;
    const auto& e = ms.edges[ei];
    if (plan.dom_vertex[ei] >= 0) continue;  // incompleteness
    const bool opening = !state.is_colored(e.u) && !state.is_colored(e.v);
    if (opening && e.kind == EdgeKind::star && v != e.center) continue;  // center
    if (!purple_covers_blue_after(state, v)) continue;                   // neighbour
    return Move::select(v, Color::purple);
  }
  for (Vertex v : ms.external) {
    if (state.selectable(v, Color::purple) && purple_covers_blue_after(state, v)) {
      return Move::select(v, Color::purple);
    }
  }
  throw StrategyViolation("no move keeps the center, incompleteness, neighbour and matching rules");
}

// --------------------------------------------------------------------------

std::optional<std::vector<Vertex>> cycle_order(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return std::nullopt;
  }
  std::vector<Vertex> order{0};
  Vertex prev = 0;
  Vertex cur = g.neighbors(0)[0];
  while (cur != 0) {
    order.push_back(cur);
    auto nb = g.neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

CycleMemory CycleMemory::fix(const Graph& g, const Move& dom_opening) {
  auto order = cycle_order(g);
  if (!order) throw NotApplicable("graph is not a cycle");
  if (dom_opening.is_pass) throw NotApplicable("Dom's opening is not a selection");
  CycleMemory mem;
  mem.order = std::move(*order);
  const int n = static_cast<int>(mem.order.size());
  mem.rotation = static_cast<int>(std::find(mem.order.begin(), mem.order.end(), dom_opening.vertex) - mem.order.begin());
  const Vertex after = mem.order[(mem.rotation + 1) % n];
  const Vertex before = mem.order[(mem.rotation + n - 1) % n];
  mem.reflected = before < after;
  mem.swap_colors = dom_opening.color == Color::blue;
  return mem;
}

Vertex CycleMemory::vertex_at(int position) const {
  const int n = static_cast<int>(order.size());
  const int offset = position - 1;
  const int idx = reflected ? rotation - offset : rotation + offset;
  return order[((idx % n) + n) % n];
}

int CycleMemory::position_of(Vertex v) const {
  const int n = static_cast<int>(order.size());
  const int idx = static_cast<int>(std::find(order.begin(), order.end(), v) - order.begin());
  const int offset = reflected ? rotation - idx : idx - rotation;
  return ((offset % n) + n) % n + 1;
}

Move sepy_cycle_move(const GameState& state, const CycleMemory& memory) {
  require_sepy_turn(state);
  const auto history = state.history();
  const int n = static_cast<int>(memory.order.size());
  const Color c = memory.actual(Color::purple);
  std::optional<Move> reply;
  if (history.size() == 1) {
    reply = Move::select(memory.vertex_at(2), c);
  } else if (history.size() == 3 && !history[2].move.is_pass) {
    const int k = memory.position_of(history[2].move.vertex);
    reply = Move::select(memory.vertex_at(k >= 3 && k <= 5 ? n : 3), c);
  }
  if (!reply || !is_legal(state, *reply)) {
    throw StrategyViolation("cycle strategy has no planned reply at ply " + std::to_string(history.size()));
  }
  return *reply;
}

std::optional<Move> monochromatizing_move(const GameState& state) {
  const Graph& g = state.graph();
  for (Vertex v = 0; v < state.order(); ++v) {
    if (state.is_colored(v)) continue;
    for (Color c : kColors) {
      if (!is_legal(state, Move::select(v, c))) continue;
      for (Vertex u : g.neighbors(v)) {
        if (state.ledger(u, c) == g.degree(u)) return Move::select(v, c);
      }
    }
  }
  return std::nullopt;
}

Move sepy_subdiv_move(const GameState& state, const SubdivisionMap& map) {
  require_sepy_turn(state);
  if (auto win = monochromatizing_move(state)) return *win;
  const auto history = state.history();
  if (history.empty() || history.front().actor != Player::dom || history.front().move.is_pass) {
    throw StrategyViolation("subdivision strategy needs Dom's opening selection");
  }
  const Move opening = history.front().move;
  const Color c = opening.color;
  if (!map.is_base_vertex(opening.vertex)) {
    // Opening on an inner path vertex: take the other inner vertex, threatening
    // both path ends.
    const auto& path = map.paths[map.path_of(opening.vertex)];
    const Vertex other = opening.vertex == path.x ? path.y : path.x;
    if (state.selectable(other, c)) return Move::select(other, c);
    throw StrategyViolation("double threat square is unavailable");
  }
  // Opening on a base vertex w: colour its path neighbours one at a time.
  std::vector<Vertex> inner;
  for (const auto& path : map.paths) {
    if (path.w == opening.vertex) inner.push_back(path.x);
    if (path.z == opening.vertex) inner.push_back(path.y);
  }
  std::sort(inner.begin(), inner.end());
  for (Vertex x : inner) {
    if (state.selectable(x, c)) return Move::select(x, c);
  }
  throw StrategyViolation("no threat left around the opened base vertex");
}

// --------------------------------------------------------------------------

Move random_move(const GameState& state, std::uint64_t seed) {
  auto moves = legal_moves(state);
  if (moves.empty()) throw std::invalid_argument("no legal move");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(state.history().size())};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
  return moves[pick(rng)];
}

Move greedy_win_move(const GameState& state, std::uint64_t seed) {
  const Player me = state.actor();
  for (const auto& m : legal_moves(state)) {
    if (m.is_pass) continue;
    if (apply(state, m).status().winner() == me) return m;
  }
  return random_move(state, seed);
}

// --------------------------------------------------------------------------

namespace {

class FnStrategy : public Strategy {
 public:
  FnStrategy(StrategyId id, std::function<Move(const GameState&)> fn) : id_(id), fn_(std::move(fn)) {}
  StrategyId id() const override { return id_; }
  Move choose(const GameState& state) const override { return fn_(state); }

 private:
  StrategyId id_;
  std::function<Move(const GameState&)> fn_;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw NotApplicable(why);
}

bool plain_turns(const GameConfig& c) { return c.dom_picks == 1 && c.sepy_picks == 1; }

}  // namespace

std::unique_ptr<Strategy> make_strategy(StrategyId id, Player role, const GameConfig& config,
                                        std::shared_ptr<const Graph> g, const StrategyOptions& options) {
  const bool ddg = config.variant == Variant::ddg;
  const std::string name = to_string(id);
  auto for_dom = [&] { require(role == Player::dom, name + " plays for Dom"); };
  auto for_sepy = [&] { require(role == Player::sepy, name + " plays for Sepy"); };

  switch (id) {
    case StrategyId::ons:
    case StrategyId::onsp: {
      for_dom();
      require(ddg && plain_turns(config), name + " needs the non-biased disjoint game");
      require(config.starter == Player::sepy, name + " needs Sepy to start");
      const bool pass_ok = config.pass == PassRights::none ||
                           (id == StrategyId::onsp && config.pass == PassRights::sepy);
      require(pass_ok, name + " does not support these pass rights");
      require(is_connected(*g), name + " needs a connected graph");
      if (id == StrategyId::ons) return std::make_unique<FnStrategy>(id, ons_move);
      return std::make_unique<FnStrategy>(id, onsp_move);
    }
    case StrategyId::dom_start_safe: {
      for_dom();
      require(ddg && plain_turns(config) && config.pass == PassRights::none,
              name + " needs the non-biased disjoint game without passing");
      require(config.starter == Player::dom, name + " needs Dom to start");
      require(is_connected(*g), name + " needs a connected graph");
      require(safe_opening_vertex(*g).has_value(), "no vertices u != v with N[u] contained in N[v]");
      return std::make_unique<FnStrategy>(id, dom_start_safe_move);
    }
    case StrategyId::dom_pass: {
      for_dom();
      require(ddg && plain_turns(config) && config.pass == PassRights::dom,
              name + " needs the disjoint game where only Dom may pass");
      auto outlook = std::make_shared<const ComponentOutlook>(ComponentOutlook::analyze(*g));
      if (config.starter == Player::dom) {
        require(outlook->first_dom_win().has_value(), "no component is a Dom win when Dom starts");
      }
      return std::make_unique<FnStrategy>(id, [outlook](const GameState& s) { return dom_pass_move(s, *outlook); });
    }
    case StrategyId::biased_dom: {
      for_dom();
      require(ddg && config.sepy_picks == 1 && config.dom_picks >= 2, name + " needs the (d:1) game with d >= 2");
      return std::make_unique<FnStrategy>(id, biased_dom_move);
    }
    case StrategyId::bdg_matching:
    case StrategyId::bdg_general: {
      for_dom();
      require(config.variant == Variant::bdg, name + " needs the bicolored game");
      auto ms = analyze_matching(*g);
      if (id == StrategyId::bdg_matching) {
        require(ms.is_perfect(), "graph has no perfect matching");
        return std::make_unique<FnStrategy>(
            id, [ms](const GameState& s) { return bdg_matching_move(s, BdgPlan::from_state(s, ms)); });
      }
      return std::make_unique<FnStrategy>(
          id, [ms](const GameState& s) { return bdg_general_move(s, BdgPlan::from_state(s, ms)); });
    }
    case StrategyId::sepy_cycle: {
      for_sepy();
      require(ddg && plain_turns(config) && config.pass == PassRights::none && config.starter == Player::dom,
              name + " needs the Dom-start disjoint game without passing");
      auto order = cycle_order(*g);
      require(order && g->order() >= 8, "graph is not a cycle of length >= 8");
      return std::make_unique<FnStrategy>(id, [](const GameState& s) {
        require_sepy_turn(s);
        return sepy_cycle_move(s, CycleMemory::fix(s.graph(), s.history().front().move));
      });
    }
    case StrategyId::sepy_subdiv: {
      for_sepy();
      require(ddg && plain_turns(config) && config.pass == PassRights::none && config.starter == Player::dom,
              name + " needs the Dom-start disjoint game without passing");
      require(options.subdivision.has_value(), "graph was not built by subdividing a base graph");
      const auto& map = *options.subdivision;
      require(subdivide3(map.base).first == *g, "graph does not match its subdivision map");
      require(map.base.min_degree() >= 2, "base graph needs minimum degree 2");
      return std::make_unique<FnStrategy>(id, [map](const GameState& s) { return sepy_subdiv_move(s, map); });
    }
    case StrategyId::random: {
      const auto seed = options.seed;
      return std::make_unique<FnStrategy>(id, [seed](const GameState& s) { return random_move(s, seed); });
    }
    case StrategyId::greedy_win: {
      const auto seed = options.seed;
      return std::make_unique<FnStrategy>(id, [seed](const GameState& s) { return greedy_win_move(s, seed); });
    }
    case StrategyId::solver: {
      require(g->order() <= options.solver.max_order, "graph exceeds the solver cap");
      const auto opts = options.solver;
      return std::make_unique<FnStrategy>(id, [opts](const GameState& s) {
        Solver solver(s.config(), s.graph_ptr(), opts);
        return *solver.solve(s).best_move;
      });
    }
  }
  throw NotApplicable("unknown strategy");
}

}  // namespace domgame
