#include "domgame/verify.hpp"

#include "domgame/errors.hpp"

namespace domgame {

namespace {

class Search {
 public:
  Search(const Strategy& strategy, Player role, const MoveObserver& observer, VerificationReport& report)
      : strategy_(strategy), role_(role), observer_(observer), report_(report) {}

  // False once a failure has been recorded.
  bool run(const GameState& state) {
    if (!state.status().ongoing()) {
      ++report_.branches;
      if (state.status().winner() == role_) return true;
      return fail(state, "game lost: " + to_string(opponent(role_)) + " wins");
    }
    if (state.actor() == role_) {
      Move m;
      try {
        m = strategy_.choose(state);
      } catch (const StrategyViolation& e) {
        return fail(state, std::string("strategy violation: ") + e.what());
      }
      if (!is_legal(state, m)) return fail(state, "strategy chose illegal move " + to_string(m));
      GameState next = apply(state, m);
      if (observer_) {
        if (auto complaint = observer_(state, m, next)) return fail(next, *complaint);
      }
      return run(next);
    }
    for (const Move& m : legal_moves(state)) {
      if (!run(apply(state, m))) return false;
    }
    return true;
  }

 private:
  bool fail(const GameState& state, std::string why) {
    report_.verified = false;
    report_.counterexample = state;
    report_.failure = std::move(why);
    return false;
  }

  const Strategy& strategy_;
  Player role_;
  const MoveObserver& observer_;
  VerificationReport& report_;
};

}  // namespace

VerificationReport verify_strategy(const Strategy& strategy, Player role, const GameConfig& config,
                                   std::shared_ptr<const Graph> g, std::string graph_name,
                                   const MoveObserver& observer) {
  VerificationReport report;
  report.strategy = strategy.id();
  report.role = role;
  report.config = config;
  report.graph = std::move(graph_name);
  Search(strategy, role, observer, report).run(new_game(config, std::move(g)));
  return report;
}

VerificationReport verify_strategy(StrategyId strategy, Player role, const GameConfig& config,
                                   std::shared_ptr<const Graph> g, const StrategyOptions& options,
                                   std::string graph_name, const MoveObserver& observer) {
  auto s = make_strategy(strategy, role, config, g, options);
  return verify_strategy(*s, role, config, std::move(g), std::move(graph_name), observer);
}

bool every_colored_vertex_has_opposite_neighbor(const GameState& state) {
  for (Vertex v = 0; v < state.order(); ++v) {
    auto c = state.color_of(v);
    if (!c) continue;
    bool found = false;
    for (Vertex u : state.graph().neighbors(v)) {
      if (state.color_of(u) == complement(*c)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace domgame
