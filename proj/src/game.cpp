#include "domgame/game.hpp"

#include <stdexcept>

#include "domgame/errors.hpp"

namespace domgame {

std::string to_string(Color c) { return c == Color::purple ? "purple" : "blue"; }
std::string to_string(Player p) { return p == Player::dom ? "dom" : "sepy"; }
std::string to_string(Variant v) { return v == Variant::ddg ? "ddg" : "bdg"; }
std::string to_string(PassRights p) {
  switch (p) {
    case PassRights::none: return "none";
    case PassRights::dom: return "dom";
    case PassRights::sepy: return "sepy";
  }
  return "none";
}

std::string to_string(const Move& m) {
  if (m.is_pass) return "pass";
  return std::to_string(m.vertex) + " " + to_string(m.color);
}

void GameConfig::validate() const {
  if (dom_picks < 1 || sepy_picks < 1) throw ConfigError("selections per turn must be >= 1");
  if (variant == Variant::bdg && (dom_picks != 1 || sepy_picks != 1)) {
    throw ConfigError("the bicolored game requires d = s = 1");
  }
  if (pass == PassRights::dom && dom_picks != 1) throw ConfigError("Dom may not pass in a biased game");
}

GameConfig GameConfig::biased(int d, int s, Player starter) {
  GameConfig c;
  c.starter = starter;
  c.dom_picks = d;
  c.sepy_picks = s;
  c.pass = PassRights::sepy;
  return c;
}

std::optional<Player> Status::winner() const {
  switch (kind) {
    case Kind::sepy_win: return Player::sepy;
    case Kind::dom_win: return Player::dom;
    default: return std::nullopt;
  }
}

GameState new_game(const GameConfig& config, std::shared_ptr<const Graph> g) {
  config.validate();
  if (!g || g->order() == 0) throw ConfigError("game needs a non-empty graph");
  if (g->has_isolated_vertex()) throw ConfigError("game graph has an isolated vertex");
  GameState s;
  s.graph_ = std::move(g);
  s.config_ = config;
  s.colors_.assign(s.graph_->order(), GameState::kUncolored);
  s.ledger_.assign(s.graph_->order(), {0, 0});
  s.actor_ = config.starter;
  s.status_ = Status{Status::Kind::ongoing, config.starter};
  return s;
}

std::optional<Color> GameState::color_of(Vertex v) const {
  if (colors_[v] == kUncolored) return std::nullopt;
  return static_cast<Color>(colors_[v] - 1);
}

std::optional<Ply> GameState::last_selection() const {
  for (auto it = history_.rbegin(); it != history_.rend(); ++it) {
    if (!it->move.is_pass) return *it;
  }
  return std::nullopt;
}

std::optional<Ply> GameState::last_selection_by(Player p) const {
  for (auto it = history_.rbegin(); it != history_.rend(); ++it) {
    if (!it->move.is_pass && it->actor == p) return *it;
  }
  return std::nullopt;
}

bool GameState::selectable(Vertex v, Color c) const {
  if (v < 0 || v >= order() || is_colored(v)) return false;
  if (!dominated(v, c)) return true;
  for (Vertex u : graph_->neighbors(v)) {
    if (!dominated(u, c)) return true;
  }
  return false;
}

bool GameState::has_selection(Color c) const {
  for (Vertex u = 0; u < order(); ++u) {
    if (dominated(u, c)) continue;
    if (!is_colored(u)) return true;
    for (Vertex w : graph_->neighbors(u)) {
      if (!is_colored(w)) return true;
    }
  }
  return false;
}

bool GameState::has_selection_for(Player p) const {
  if (config_.variant == Variant::bdg) return has_selection(private_color(p));
  return has_selection(Color::purple) || has_selection(Color::blue);
}

void GameState::color_vertex(Vertex v, Color c) {
  colors_[v] = static_cast<std::uint8_t>(index(c) + 1);
  ++colored_;
  ++ledger_[v][index(c)];
  for (Vertex u : graph_->neighbors(v)) ++ledger_[u][index(c)];
}

void GameState::refresh_status() { status_ = domgame::status(*this); }

void GameState::end_turn() {
  actor_ = opponent(actor_);
  selections_ = 0;
  status_.next = actor_;
  if (config_.variant == Variant::bdg && !has_selection_for(actor_)) {
    // The blocked player sits out; refresh_status already established that
    // the other one can still move.
    actor_ = opponent(actor_);
    status_.next = actor_;
  }
}

void GameState::check_invariants(const Move& m) const {
  if (!m.is_pass) {
    const Vertex v = m.vertex;
    const Color c = m.color;
    if (ledger(v, c) == graph_->degree(v) + 1) {
      throw std::logic_error("legal selection made its own closed neighbourhood monochromatic");
    }
  }
  if (status_.kind == Status::Kind::sepy_win || !status_.ongoing()) return;
  if (config_.variant == Variant::ddg && !has_selection_for(actor_)) {
    throw std::logic_error("ongoing disjoint game with no feasible selection");
  }
}

void GameState::play(const Move& m) {
  if (!status_.ongoing()) throw IllegalMove("game is over");
  if (!is_legal(*this, m)) throw IllegalMove("illegal move " + to_string(m) + " for " + to_string(actor_));
  const Player mover = actor_;
  if (m.is_pass) {
    end_turn();
  } else {
    color_vertex(m.vertex, m.color);
    any_move_made_ = true;
    ++selections_;
    refresh_status();
    if (status_.ongoing()) {
      const int quota = mover == Player::dom ? config_.dom_picks : config_.sepy_picks;
      if (selections_ >= quota || (mover == Player::dom && !has_selection_for(Player::dom))) {
        end_turn();
      }
    }
  }
  history_.push_back({mover, m, status_});
  check_invariants(m);
}

bool is_legal(const GameState& state, const Move& m) {
  if (!state.status().ongoing()) return false;
  const auto& cfg = state.config();
  const Player p = state.actor();
  if (m.is_pass) {
    // Ending a partial Sepy turn early is always allowed.
    if (p == Player::sepy && state.selections_this_turn() > 0) return true;
    if (state.selections_this_turn() > 0) return false;
    const bool holder = (p == Player::dom && cfg.pass == PassRights::dom) ||
                        (p == Player::sepy && cfg.pass == PassRights::sepy);
    return holder && (state.any_move_made() || cfg.allow_first_turn_pass);
  }
  if (cfg.variant == Variant::bdg && m.color != private_color(p)) return false;
  return state.selectable(m.vertex, m.color);
}

std::vector<Move> legal_moves(const GameState& state) {
  std::vector<Move> out;
  if (!state.status().ongoing()) return out;
  for (Vertex v = 0; v < state.order(); ++v) {
    for (Color c : kColors) {
      auto m = Move::select(v, c);
      if (is_legal(state, m)) out.push_back(m);
    }
  }
  if (is_legal(state, Move::pass())) out.push_back(Move::pass());
  return out;
}

GameState apply(const GameState& state, const Move& m) {
  GameState next = state;
  next.play(m);
  return next;
}

Status status(const GameState& state) {
  const Graph& g = state.graph();
  for (Vertex v = 0; v < g.order(); ++v) {
    const int size = g.degree(v) + 1;
    for (Color c : kColors) {
      if (state.ledger(v, c) == size) return {Status::Kind::sepy_win, state.actor(), v, c};
    }
  }
  if (state.config().variant == Variant::ddg) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!state.dominated(v, Color::purple) || !state.dominated(v, Color::blue)) {
        return {Status::Kind::ongoing, state.actor()};
      }
    }
    return {Status::Kind::dom_win, state.actor()};
  }
  if (state.has_selection(Color::purple) || state.has_selection(Color::blue)) {
    return {Status::Kind::ongoing, state.actor()};
  }
  // Neither player can move and nothing is monochromatic: purple dominates
  // and no closed neighbourhood lies inside it.
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!state.dominated(v, Color::purple)) throw std::logic_error("bicolored end without purple domination");
  }
  return {Status::Kind::dom_win, state.actor()};
}

DominationLevels domination_levels(const GameState& state, std::span<const Vertex> within) {
  DominationLevels out;
  auto visit = [&](Vertex v) {
    int k = (state.dominated(v, Color::purple) ? 1 : 0) + (state.dominated(v, Color::blue) ? 1 : 0);
    if (k == 0) out.none.push_back(v);
    if (k == 1) out.one.push_back(v);
    if (k >= 1) out.some.push_back(v);
  };
  if (within.empty()) {
    for (Vertex v = 0; v < state.order(); ++v) visit(v);
  } else {
    for (Vertex v : within) visit(v);
  }
  return out;
}

}  // namespace domgame
