#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domgame/game.hpp"
#include "domgame/graph.hpp"
#include "domgame/matching.hpp"
#include "domgame/solver.hpp"

namespace domgame {

enum class StrategyId {
  ons,
  onsp,
  dom_start_safe,
  dom_pass,
  biased_dom,
  bdg_matching,
  bdg_general,
  sepy_cycle,
  sepy_subdiv,
  random,
  greedy_win,
  solver,
};

// Stable CLI names: "ons", "onsp", "dom-start-safe", "dom-pass", "biased-dom",
// "bdg-matching", "bdg-general", "sepy-cycle", "sepy-subdiv", "random",
// "greedy", "solver". "cycle" and "subdiv" are accepted as aliases.
std::string to_string(StrategyId id);
std::optional<StrategyId> parse_strategy_id(std::string_view name);

// ---------------------------------------------------------------------------
// Opposite-neighbour play

// Least uncoloured neighbour u of the anchor's vertex v such that u can be
// coloured with the complement of v's colour.
std::optional<Move> opposite_answer(const GameState& state, const Ply& anchor);

// A legal move (u, c) where u has a neighbour coloured complement(c), found
// by the frontier argument: first an uncoloured vertex dominated in some
// colour next to a vertex dominated in none, then a vertex dominated in
// exactly one colour (or its least uncoloured neighbour). `within`
// restricts the search to a vertex set; empty means the whole graph.
std::optional<Move> frontier_move(const GameState& state, std::span<const Vertex> within = {});

// Dom's reply to Sepy's latest selection. Throws StrategyViolation if
// neither rule yields a move.
Move ons_move(const GameState& state);

// As ons_move, anchored on the latest selection by either player.
Move onsp_move(const GameState& state);

// Dom-start: open on the least v with N[u] ⊆ N[v] for some u != v, then
// answer Sepy with ons_move. Throws NotApplicable without such a pair.
Move dom_start_safe_move(const GameState& state);

// Least v having some u != v with N[u] ⊆ N[v].
std::optional<Vertex> safe_opening_vertex(const Graph& g);

// ---------------------------------------------------------------------------
// Passing and components

/// Per-component facts the passing strategy needs: the components, and
/// which of them Dom wins as the starting player (solved exactly for
/// components of at most `solve_limit` vertices; larger ones count as not
/// won).
struct ComponentOutlook {
  std::vector<std::vector<Vertex>> components;
  std::vector<int> component_of;
  std::vector<std::shared_ptr<const Graph>> subgraphs;
  std::vector<bool> dom_wins_starting;

  static ComponentOutlook analyze(const Graph& g, int solve_limit = 12);
  std::optional<int> first_dom_win() const;
};

Move dom_pass_move(const GameState& state, const ComponentOutlook& outlook);

// True iff comp is already dominated in both colours, or one legal
// selection inside comp makes it so.
bool component_safe(const GameState& state, std::span<const Vertex> comp);

// One selection of Dom's (d:1) turn.
Move biased_dom_move(const GameState& state);

// ---------------------------------------------------------------------------
// Bicolored game

struct BdgPlan {
  MatchingStructure matching;
  std::vector<Vertex> dom_vertex;   // per matching edge: Dom's endpoint, or -1
  std::optional<Vertex> sepy_last;  // Sepy's selection if it was the last ply

  static BdgPlan from_state(const GameState& state, MatchingStructure matching);
};

Move bdg_matching_move(const GameState& state, const BdgPlan& plan);
Move bdg_general_move(const GameState& state, const BdgPlan& plan);

// ---------------------------------------------------------------------------
// Sepy's strategies

// Cyclic order of a cycle graph starting at 0 and continuing to its smaller
// neighbour; nullopt if g is not a single cycle.
std::optional<std::vector<Vertex>> cycle_order(const Graph& g);

/// Maps Dom's actual opening on C_n onto the canonical one (v1 purple, with
/// v2 the smaller-indexed neighbour of v1). Canonical positions are 1-based.
struct CycleMemory {
  std::vector<Vertex> order;  // cycle_order(g)
  int rotation = 0;           // index of v1 in `order`
  bool reflected = false;     // v2 sits before v1 in `order`
  bool swap_colors = false;   // Dom opened in blue

  static CycleMemory fix(const Graph& g, const Move& dom_opening);
  Vertex vertex_at(int position) const;
  int position_of(Vertex v) const;
  Color actual(Color canonical) const { return swap_colors ? complement(canonical) : canonical; }
};

Move sepy_cycle_move(const GameState& state, const CycleMemory& memory);

// Least legal selection that makes some closed neighbourhood monochromatic.
std::optional<Move> monochromatizing_move(const GameState& state);

Move sepy_subdiv_move(const GameState& state, const SubdivisionMap& map);

// ---------------------------------------------------------------------------
// Baselines

Move random_move(const GameState& state, std::uint64_t seed);
Move greedy_win_move(const GameState& state, std::uint64_t seed);

// ---------------------------------------------------------------------------

struct StrategyOptions {
  std::uint64_t seed = 0;
  std::optional<SubdivisionMap> subdivision;
  SolverOptions solver;
};

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual StrategyId id() const = 0;
  // Pure in the state: equal states give equal moves.
  virtual Move choose(const GameState& state) const = 0;
};

// Checks the strategy's preconditions for (role, config, graph) and builds
// any per-graph precomputation. Throws NotApplicable.
std::unique_ptr<Strategy> make_strategy(StrategyId id, Player role, const GameConfig& config,
                                        std::shared_ptr<const Graph> g, const StrategyOptions& options = {});

}  // namespace domgame
