#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "domgame/game.hpp"
#include "domgame/strategies.hpp"

namespace domgame {

struct VerificationReport {
  StrategyId strategy = StrategyId::ons;
  Player role = Player::dom;
  GameConfig config;
  std::string graph;
  bool verified = true;
  // First failing line of play: a lost game, a strategy violation, or an
  // observer complaint. Empty when verified.
  std::optional<GameState> counterexample;
  std::string failure;
  std::uint64_t branches = 0;  // finished games reached
};

// Called after each move the strategy makes. A returned message fails the
// verification at that point.
using MoveObserver =
    std::function<std::optional<std::string>(const GameState& before, const Move& move, const GameState& after)>;

/**
 * Plays `strategy` for `role` against every legal opponent line, Pass
 * included whenever the opponent may pass, and checks that every game ends
 * in a win for `role`.
 *
 * Stops at the first failure. Throws NotApplicable (from make_strategy) if
 * the strategy does not apply.
 */
VerificationReport verify_strategy(StrategyId strategy, Player role, const GameConfig& config,
                                   std::shared_ptr<const Graph> g, const StrategyOptions& options = {},
                                   std::string graph_name = {}, const MoveObserver& observer = {});

VerificationReport verify_strategy(const Strategy& strategy, Player role, const GameConfig& config,
                                   std::shared_ptr<const Graph> g, std::string graph_name = {},
                                   const MoveObserver& observer = {});

// Every coloured vertex has a neighbour of the other colour.
bool every_colored_vertex_has_opposite_neighbor(const GameState& state);

}  // namespace domgame
