#pragma once

#include <atomic>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "domgame/game.hpp"
#include "domgame/graph.hpp"

namespace domgame {

/// Canonical position key: the colouring as a base-3 number (vertex 0 least
/// significant; 0 uncoloured, 1 purple, 2 blue) plus the turn data. In the
/// disjoint game the colouring is replaced by the smaller of itself and its
/// palette swap; in the bicolored game colours belong to players and are
/// never swapped.
struct StateKey {
  std::uint64_t coloring = 0;
  Player actor = Player::dom;
  std::uint8_t selections = 0;
  bool any_move_made = false;

  auto operator<=>(const StateKey&) const = default;
};

StateKey encode_state(const GameState& state);

// 14, or DOMGAME_STATE_CAP when that is set to a positive integer.
int default_state_cap();

struct SolverOptions {
  int max_order = default_state_cap();
  bool memoize = true;
  int threads = 1;  // root-level parallelism
};

struct SolveResult {
  Player winner = Player::dom;
  std::optional<Move> best_move;  // empty at a finished position
  bool losing = false;            // every root move loses for the side to move
  std::uint64_t nodes = 0;
  std::vector<Move> principal_variation;
};

// A solver-side position, detached from move history.
struct SolverPosition {
  std::vector<std::uint8_t> colors;  // 0 uncolored, 1 purple, 2 blue
  Player actor = Player::dom;
  int selections = 0;
  bool any_move_made = false;

  static SolverPosition from_state(const GameState& s);
};

/**
 * Exact win/loss solver for both game variants.
 *
 * Plain negamax over the two outcomes with a cutoff on the first winning
 * child. With memoization on, results go into a dense table indexed by
 * StateKey; the table is allocated up front and sized 3^n times the turn
 * metadata, so instances above `max_order` vertices are refused with a
 * ResourceError instead of being evicted or approximated.
 *
 * The rules are re-implemented here on 64-bit masks, independently of
 * GameState, so the solver can act as an oracle for the engine.
 */
class Solver {
 public:
  Solver(GameConfig config, std::shared_ptr<const Graph> g, SolverOptions options = {});
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  SolveResult solve();
  SolveResult solve(const GameState& from);
  SolveResult solve(const SolverPosition& from);

  // Winner under optimal play after each legal move, in legal-move order.
  std::vector<std::pair<Move, Player>> evaluate_moves(const SolverPosition& from);

  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  struct Pos;
  struct Impl;

  Player value(const Pos& p);
  std::optional<Player> terminal(const Pos& p) const;
  void moves(const Pos& p, std::vector<Move>& out) const;
  Pos child(const Pos& p, const Move& m) const;
  Pos to_pos(const SolverPosition& sp) const;
  std::uint64_t table_index(const Pos& p) const;

  GameConfig config_;
  std::shared_ptr<const Graph> graph_;
  SolverOptions options_;
  std::unique_ptr<Impl> impl_;
  std::atomic<std::uint64_t> nodes_{0};
};

SolveResult solve(const GameConfig& config, const Graph& g, SolverOptions options = {});

struct BestMove {
  Move move;
  bool losing = false;  // no move wins for the side to move
};

// Throws std::invalid_argument when the state is already decided.
BestMove best_move(const GameConfig& config, const Graph& g, const GameState& state,
                   SolverOptions options = {});

}  // namespace domgame
