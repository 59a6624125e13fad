#include <doctest.h>

#include <random>

#include "domgame/errors.hpp"
#include "domgame/game.hpp"

using namespace domgame;

namespace {

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

Move sel(Vertex v, Color c) { return Move::select(v, c); }
constexpr Color P = Color::purple;
constexpr Color B = Color::blue;

}  // namespace

TEST_CASE("colours") {
  CHECK(complement(Color::purple) == Color::blue);
  CHECK(complement(complement(Color::blue)) == Color::blue);
}

TEST_CASE("config validation") {
  GameConfig c;
  c.dom_picks = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  GameConfig b = bdg(Player::dom);
  b.sepy_picks = 2;
  CHECK_THROWS_AS(b.validate(), ConfigError);
  GameConfig biased = GameConfig::biased(2, 1, Player::sepy);
  CHECK(biased.pass == PassRights::sepy);
  biased.pass = PassRights::dom;
  CHECK_THROWS_AS(biased.validate(), ConfigError);
  CHECK_THROWS_AS(new_game(ddg(Player::dom), Graph::from_edge_list(3, std::vector<Edge>{{0, 1}})), ConfigError);
  CHECK_THROWS_AS(new_game(ddg(Player::dom), Graph{}), ConfigError);
}

TEST_CASE("status examples") {
  // P3: 0 and 1 purple makes N[0] monochromatic. Sepy colours 0 then Dom 2
  // keeps 1 legal; build it through plays.
  GameState s = new_game(ddg(Player::sepy), gen_path(3));
  s.play(sel(0, P));
  s.play(sel(2, B));
  s.play(sel(1, P));
  CHECK(s.status().kind == Status::Kind::sepy_win);
  CHECK(s.status().witness == 0);
  CHECK(s.status().witness_color == P);

  GameState k2 = new_game(ddg(Player::dom), gen_complete(2));
  k2.play(sel(0, P));
  k2.play(sel(1, B));
  CHECK(k2.status().kind == Status::Kind::dom_win);

  GameState c4 = new_game(ddg(Player::dom), gen_cycle(4));
  c4.play(sel(0, P));
  c4.play(sel(2, B));
  CHECK(c4.status().ongoing());
  CHECK(c4.dominated(1, P));
  CHECK(c4.dominated(1, B));
  CHECK_FALSE(c4.dominated(0, B));
}

TEST_CASE("legality") {
  GameState s = new_game(ddg(Player::dom), gen_path(3));
  s.play(sel(0, P));
  // N[0] = {0,1} and N[1] = {0,1,2} are purple dominated; 2 is not.
  CHECK(is_legal(s, sel(1, P)));
  CHECK(is_legal(s, sel(2, P)));
  CHECK_FALSE(is_legal(s, sel(0, B)));
  CHECK_FALSE(is_legal(s, Move::pass()));
  s.play(sel(2, P));
  // Every closed neighbourhood is purple dominated now.
  CHECK_FALSE(is_legal(s, sel(1, P)));
  CHECK(is_legal(s, sel(1, B)));
  CHECK(legal_moves(s) == std::vector<Move>{sel(1, B)});
}

TEST_CASE("illegal moves leave the state untouched") {
  GameState s = new_game(ddg(Player::dom), gen_cycle(4));
  s.play(sel(0, P));
  const auto before = s.raw_colors();
  const std::vector<std::uint8_t> copy(before.begin(), before.end());
  CHECK_THROWS_AS(s.play(sel(0, B)), IllegalMove);
  CHECK_THROWS_AS(s.play(Move::pass()), IllegalMove);
  CHECK_THROWS_AS(s.play(sel(9, B)), IllegalMove);
  CHECK(std::vector<std::uint8_t>(s.raw_colors().begin(), s.raw_colors().end()) == copy);
  CHECK(s.history().size() == 1);
  CHECK(s.actor() == Player::sepy);
}

TEST_CASE("passing") {
  GameState s = new_game(ddg(Player::sepy, PassRights::sepy), gen_cycle(6));
  CHECK_FALSE(is_legal(s, Move::pass()));  // no pass on the first turn
  s.play(sel(0, P));
  s.play(sel(1, B));
  CHECK(is_legal(s, Move::pass()));
  s.play(Move::pass());
  CHECK(s.actor() == Player::dom);
  CHECK_FALSE(is_legal(s, Move::pass()));

  GameConfig early = ddg(Player::sepy, PassRights::sepy);
  early.allow_first_turn_pass = true;
  GameState e = new_game(early, gen_cycle(6));
  CHECK(is_legal(e, Move::pass()));

  GameState d = new_game(ddg(Player::dom, PassRights::dom), gen_cycle(6));
  CHECK_FALSE(is_legal(d, Move::pass()));
  d.play(sel(0, P));
  d.play(sel(3, B));
  CHECK(is_legal(d, Move::pass()));
}

TEST_CASE("biased turns") {
  GameState s = new_game(GameConfig::biased(2, 2, Player::dom), gen_cycle(8));
  s.play(sel(0, P));
  CHECK(s.actor() == Player::dom);
  CHECK(s.selections_this_turn() == 1);
  CHECK_FALSE(is_legal(s, Move::pass()));
  s.play(sel(1, B));
  CHECK(s.actor() == Player::sepy);
  s.play(sel(4, P));
  CHECK(s.actor() == Player::sepy);
  CHECK(is_legal(s, Move::pass()));  // ends Sepy's turn early
  s.play(Move::pass());
  CHECK(s.actor() == Player::dom);
  CHECK(s.selections_this_turn() == 0);
}

TEST_CASE("a mid-turn win ends the game") {
  GameState s = new_game(GameConfig::biased(1, 2, Player::sepy), gen_path(3));
  s.play(sel(0, P));
  CHECK(s.actor() == Player::sepy);
  s.play(sel(1, P));
  CHECK(s.status().kind == Status::Kind::sepy_win);
  CHECK_FALSE(is_legal(s, Move::pass()));
}

TEST_CASE("bicolored game binds colours and skips blocked players") {
  GameState s = new_game(bdg(Player::dom), gen_path(3));
  CHECK_FALSE(is_legal(s, sel(0, B)));
  s.play(sel(1, P));
  // All of P3 is purple dominated; Sepy may still play blue.
  CHECK(s.actor() == Player::sepy);
  s.play(sel(0, B));
  // Dom has no purple selection left, so Sepy moves again.
  CHECK_FALSE(s.has_selection_for(Player::dom));
  CHECK(s.actor() == Player::sepy);
  s.play(sel(2, B));
  CHECK(s.status().kind == Status::Kind::dom_win);
}

TEST_CASE("ledger matches a recount on random playouts") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Graph g = gen_random_isolate_free(3 + i % 10, 0.3, i);
    GameConfig c = i % 3 == 0 ? bdg(Player::sepy) : ddg(Player::dom, i % 2 ? PassRights::sepy : PassRights::none);
    GameState s = new_game(c, g);
    int plies = 0;
    while (s.status().ongoing()) {
      const auto moves = legal_moves(s);
      REQUIRE_FALSE(moves.empty());
      s.play(moves[rng() % moves.size()]);
      ++plies;
      for (Vertex v = 0; v < g.order(); ++v) {
        for (Color col : kColors) {
          int k = s.color_of(v) == col ? 1 : 0;
          for (Vertex u : g.neighbors(v)) k += s.color_of(u) == col ? 1 : 0;
          CHECK(s.ledger(v, col) == k);
        }
      }
      CHECK(status(s) == s.status());
    }
    CHECK(plies <= 2 * g.order());
  }
}

TEST_CASE("move order and history helpers") {
  GameState s = new_game(ddg(Player::sepy), gen_cycle(4));
  const auto moves = legal_moves(s);
  REQUIRE(moves.size() == 8);
  CHECK(moves[0] == sel(0, P));
  CHECK(moves[1] == sel(0, B));
  CHECK(moves[2] == sel(1, P));
  s.play(sel(2, B));
  s.play(sel(3, P));
  CHECK(s.last_selection()->move == sel(3, P));
  CHECK(s.last_selection_by(Player::sepy)->move == sel(2, B));
  CHECK(to_string(sel(3, P)) == "3 purple");
  CHECK(to_string(Move::pass()) == "pass");
  const auto levels = domination_levels(s);
  CHECK(levels.none.empty());
  CHECK(levels.one == std::vector<Vertex>{0, 1});
  CHECK(levels.some == std::vector<Vertex>{0, 1, 2, 3});
  const std::vector<Vertex> part{1, 2};
  CHECK(domination_levels(s, part).one == std::vector<Vertex>{1});
}
