#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

enum class Color : std::uint8_t { purple = 0, blue = 1 };

constexpr Color complement(Color c) { return c == Color::purple ? Color::blue : Color::purple; }
constexpr int index(Color c) { return static_cast<int>(c); }
inline constexpr std::array<Color, 2> kColors{Color::purple, Color::blue};

enum class Player : std::uint8_t { dom = 0, sepy = 1 };

constexpr Player opponent(Player p) { return p == Player::dom ? Player::sepy : Player::dom; }

enum class Variant : std::uint8_t { ddg, bdg };

// Who may skip a whole turn. At most one player ever holds the right.
enum class PassRights : std::uint8_t { none, dom, sepy };

std::string to_string(Color c);
std::string to_string(Player p);
std::string to_string(Variant v);
std::string to_string(PassRights p);

struct GameConfig {
  Variant variant = Variant::ddg;
  Player starter = Player::sepy;
  int dom_picks = 1;   // d: selections Dom must make per turn
  int sepy_picks = 1;  // s: selections Sepy may make per turn
  PassRights pass = PassRights::none;
  // Lets the pass-holder pass on the very first turn of the game. Off by
  // default; the first move always colours a vertex.
  bool allow_first_turn_pass = false;

  // Throws ConfigError.
  void validate() const;

  // The (d:s) game: Dom makes d selections per turn, Sepy at most s and may
  // pass whole turns.
  static GameConfig biased(int d, int s, Player starter);

  bool operator==(const GameConfig&) const = default;
};

// BDG binds each player to one colour.
constexpr Color private_color(Player p) { return p == Player::dom ? Color::purple : Color::blue; }

struct Move {
  bool is_pass = false;
  Vertex vertex = -1;
  Color color = Color::purple;

  static Move select(Vertex v, Color c) { return {false, v, c}; }
  static Move pass() { return {true, -1, Color::purple}; }

  bool operator==(const Move&) const = default;
};

std::string to_string(const Move& m);

struct Status {
  enum class Kind : std::uint8_t { ongoing, sepy_win, dom_win };
  Kind kind = Kind::ongoing;
  Player next = Player::dom;          // ongoing only
  Vertex witness = -1;                // sepy_win: least v with N[v] monochromatic
  Color witness_color = Color::purple;

  bool ongoing() const { return kind == Kind::ongoing; }
  std::optional<Player> winner() const;
  bool operator==(const Status&) const = default;
};

struct Ply {
  Player actor;
  Move move;
  Status after;
};

/**
 * A position of the Disjoint or Bicolored Domination Game.
 *
 * Holds the colouring, a ledger of how many vertices of each colour every
 * closed neighbourhood contains, and the turn bookkeeping. States are plain
 * values: copy one to branch.
 */
class GameState {
 public:
  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const GameConfig& config() const { return config_; }
  int order() const { return graph_->order(); }

  std::optional<Color> color_of(Vertex v) const;
  bool is_colored(Vertex v) const { return colors_[v] != kUncolored; }
  // |N[v] ∩ V_c|
  int ledger(Vertex v, Color c) const { return ledger_[v][index(c)]; }
  bool dominated(Vertex v, Color c) const { return ledger(v, c) > 0; }

  Player actor() const { return actor_; }
  int selections_this_turn() const { return selections_; }
  bool any_move_made() const { return any_move_made_; }
  const Status& status() const { return status_; }
  std::span<const Ply> history() const { return history_; }
  int colored_count() const { return colored_; }

  // Most recent Select in the history, by either player.
  std::optional<Ply> last_selection() const;
  std::optional<Ply> last_selection_by(Player p) const;

  // Legal Select of `c` on v, ignoring whose turn it is and the BDG colour
  // binding.
  bool selectable(Vertex v, Color c) const;
  bool has_selection(Color c) const;
  bool has_selection_for(Player p) const;

  // Plays m in place; throws IllegalMove (and leaves the state untouched)
  // when m is not legal.
  void play(const Move& m);

  // Raw per-vertex codes: 0 uncolored, 1 purple, 2 blue.
  std::span<const std::uint8_t> raw_colors() const { return colors_; }

 private:
  friend GameState new_game(const GameConfig&, std::shared_ptr<const Graph>);

  static constexpr std::uint8_t kUncolored = 0;

  void color_vertex(Vertex v, Color c);
  void refresh_status();
  void end_turn();
  void check_invariants(const Move& m) const;

  std::shared_ptr<const Graph> graph_;
  GameConfig config_;
  std::vector<std::uint8_t> colors_;
  std::vector<std::array<int, 2>> ledger_;
  Player actor_ = Player::dom;
  int selections_ = 0;
  bool any_move_made_ = false;
  int colored_ = 0;
  Status status_;
  std::vector<Ply> history_;
};

// Throws ConfigError for isolated vertices or an invalid config.
GameState new_game(const GameConfig& config, std::shared_ptr<const Graph> g);
inline GameState new_game(const GameConfig& config, const Graph& g) {
  return new_game(config, std::make_shared<const Graph>(g));
}

bool is_legal(const GameState& state, const Move& m);

// Vertex ascending, purple before blue, Pass last.
std::vector<Move> legal_moves(const GameState& state);

GameState apply(const GameState& state, const Move& m);

// Recomputes the status from the colouring alone. For an ongoing game the
// `next` field is the state's actor.
Status status(const GameState& state);

// Sets of vertices dominated by exactly 0, exactly 1 and at least 1 colour.
struct DominationLevels {
  std::vector<Vertex> none;
  std::vector<Vertex> one;
  std::vector<Vertex> some;
};
DominationLevels domination_levels(const GameState& state, std::span<const Vertex> within = {});

}  // namespace domgame
