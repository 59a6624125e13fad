#include <doctest.h>

#include "domgame/errors.hpp"
#include "domgame/strategies.hpp"
#include "domgame/verify.hpp"

using namespace domgame;

namespace {

constexpr Color P = Color::purple;
constexpr Color B = Color::blue;
Move sel(Vertex v, Color c) { return Move::select(v, c); }

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

GameState play(GameConfig c, const Graph& g, std::initializer_list<Move> moves) {
  GameState s = new_game(c, g);
  for (const auto& m : moves) s.play(m);
  return s;
}

bool has_opposite_neighbor(const GameState& s, Vertex u, Color c) {
  for (Vertex w : s.graph().neighbors(u)) {
    if (s.color_of(w) == complement(c)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("strategy names") {
  CHECK(to_string(StrategyId::dom_start_safe) == "dom-start-safe");
  CHECK(parse_strategy_id("cycle") == StrategyId::sepy_cycle);
  CHECK(parse_strategy_id("bdg-general") == StrategyId::bdg_general);
  CHECK(parse_strategy_id("greedy") == StrategyId::greedy_win);
  CHECK_FALSE(parse_strategy_id("minimax").has_value());
}

TEST_CASE("ons answers with an opposite neighbour") {
  CHECK(ons_move(play(ddg(Player::sepy), gen_cycle(4), {sel(0, P)})) == sel(1, B));
  CHECK(ons_move(play(ddg(Player::sepy), gen_path(3), {sel(1, B)})) == sel(0, P));
}

namespace {

// First position on a Sepy line against ons where Sepy's vertex has no
// neighbour left for the opposite colour.
std::optional<GameState> find_fallback(const GameState& s) {
  if (!s.status().ongoing()) return std::nullopt;
  if (s.actor() == Player::dom) {
    if (!opposite_answer(s, *s.last_selection()).has_value()) return s;
    return find_fallback(apply(s, ons_move(s)));
  }
  for (const Move& m : legal_moves(s)) {
    if (auto hit = find_fallback(apply(s, m))) return hit;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("ons falls back to the frontier search") {
  auto s = find_fallback(new_game(ddg(Player::sepy), gen_cycle(6)));
  REQUIRE(s.has_value());
  const Move m = ons_move(*s);
  CHECK(is_legal(*s, m));
  CHECK(has_opposite_neighbor(*s, m.vertex, m.color));
}

TEST_CASE("onsp answers the latest selection by anyone") {
  const Graph c6 = gen_cycle(6);
  GameState s = play(ddg(Player::sepy, PassRights::sepy), c6, {sel(0, P), sel(1, B), Move::pass()});
  CHECK(onsp_move(s) == sel(2, P));
  GameState normal = play(ddg(Player::sepy, PassRights::sepy), c6, {sel(0, P), sel(1, B), sel(3, B)});
  CHECK(onsp_move(normal) == ons_move(normal));
  GameConfig early = ddg(Player::dom, PassRights::dom);
  early.allow_first_turn_pass = true;
  GameState fresh = new_game(early, c6);
  CHECK_THROWS_AS(onsp_move(fresh), std::invalid_argument);
}

TEST_CASE("safe opening") {
  CHECK(safe_opening_vertex(gen_path(5)) == 1);
  CHECK(safe_opening_vertex(gen_complete(5)) == 0);
  CHECK_FALSE(safe_opening_vertex(gen_cycle(8)).has_value());
  GameState s = new_game(ddg(Player::dom), gen_path(6));
  CHECK(dom_start_safe_move(s) == sel(1, P));
  CHECK_THROWS_AS(make_strategy(StrategyId::dom_start_safe, Player::dom, ddg(Player::dom),
                                std::make_shared<const Graph>(gen_cycle(8))),
                  NotApplicable);
}

TEST_CASE("dom-pass") {
  const Graph g = disjoint_union(gen_cycle(4), gen_cycle(8));
  const auto outlook = ComponentOutlook::analyze(g);
  REQUIRE(outlook.components.size() == 2);
  CHECK(outlook.dom_wins_starting[0]);
  CHECK_FALSE(outlook.dom_wins_starting[1]);

  GameState start = new_game(ddg(Player::dom, PassRights::dom), g);
  CHECK(dom_pass_move(start, outlook).vertex < 4);

  GameState reply = play(ddg(Player::sepy, PassRights::dom), g, {sel(6, P)});
  const Move m = dom_pass_move(reply, outlook);
  CHECK(m.vertex >= 4);
  CHECK(m == sel(5, B));

  // Sepy colours the last vertex of a P3 component: Dom passes.
  const Graph h = disjoint_union(gen_path(3), gen_cycle(4));
  const auto hl = ComponentOutlook::analyze(h);
  GameState p = play(ddg(Player::sepy, PassRights::dom), h, {sel(1, P)});
  CHECK(dom_pass_move(p, hl) == sel(0, B));
  p.play(sel(0, B));
  p.play(sel(2, B));
  REQUIRE(p.status().ongoing());
  CHECK(dom_pass_move(p, hl) == Move::pass());

  CHECK_THROWS_AS(make_strategy(StrategyId::dom_pass, Player::dom, ddg(Player::dom, PassRights::dom),
                                std::make_shared<const Graph>(gen_cycle(8))),
                  NotApplicable);
}

TEST_CASE("component safety") {
  const Graph c4 = gen_cycle(4);
  GameState s = play(ddg(Player::dom), c4, {sel(0, P), sel(2, B), sel(1, P)});
  const std::vector<Vertex> all{0, 1, 2, 3};
  CHECK(component_safe(s, all));
  CHECK_FALSE(component_safe(new_game(ddg(Player::dom), c4), all));
  GameState k2 = play(ddg(Player::dom), gen_complete(2), {sel(0, P)});
  const std::vector<Vertex> pair{0, 1};
  CHECK(component_safe(k2, pair));
}

TEST_CASE("biased dom") {
  const Graph g = disjoint_union(gen_cycle(4), gen_cycle(6));
  const auto c = GameConfig::biased(2, 1, Player::dom);
  GameState s = new_game(c, g);
  CHECK(biased_dom_move(s) == sel(0, P));
  s.play(sel(0, P));
  CHECK(biased_dom_move(s) == sel(1, B));

  // Sepy-start on C8: pure answering play.
  GameState c8 = play(GameConfig::biased(2, 1, Player::sepy), gen_cycle(8), {sel(3, P)});
  CHECK(biased_dom_move(c8) == sel(2, B));

  // K2 + P3: completing K2 would leave one selection; open P3 instead.
  const Graph kp = disjoint_union(gen_complete(2), gen_path(3));
  GameState open = play(GameConfig::biased(2, 1, Player::sepy), kp, {sel(0, P)});
  CHECK(biased_dom_move(open) == sel(2, P));
}

TEST_CASE("bicolored matching strategy") {
  const Graph c4 = gen_cycle(4);
  const auto ms = analyze_matching(c4);
  REQUIRE(ms.is_perfect());
  GameState start = new_game(bdg(Player::dom), c4);
  CHECK(bdg_matching_move(start, BdgPlan::from_state(start, ms)) == sel(0, P));
  GameState reply = play(bdg(Player::sepy), c4, {sel(0, B)});
  CHECK(bdg_matching_move(reply, BdgPlan::from_state(reply, ms)) == sel(ms.partner(0), P));
  CHECK_THROWS_AS(make_strategy(StrategyId::bdg_matching, Player::dom, bdg(Player::dom),
                                std::make_shared<const Graph>(gen_path(3))),
                  NotApplicable);
}

TEST_CASE("bicolored general strategy") {
  const Graph p3 = gen_path(3);
  const auto ms = analyze_matching(p3);
  GameState s = new_game(bdg(Player::dom), p3);
  CHECK(bdg_general_move(s, BdgPlan::from_state(s, ms)) == sel(1, P));

  // Bare edge: Sepy takes one end, Dom answers with the other.
  const Graph p4 = gen_path(4);
  const auto m4 = analyze_matching(p4);
  GameState r = play(bdg(Player::sepy), p4, {sel(3, B)});
  CHECK(bdg_general_move(r, BdgPlan::from_state(r, m4)) == sel(m4.partner(3), P));
}

TEST_CASE("cycle normalisation") {
  const Graph c8 = gen_cycle(8);
  auto mem = CycleMemory::fix(c8, sel(0, P));
  CHECK(mem.vertex_at(1) == 0);
  CHECK(mem.vertex_at(2) == 1);
  CHECK(mem.vertex_at(8) == 7);
  CHECK_FALSE(mem.swap_colors);
  for (Vertex v = 0; v < 8; ++v) CHECK(mem.vertex_at(mem.position_of(v)) == v);

  auto flipped = CycleMemory::fix(c8, sel(2, B));
  CHECK(flipped.vertex_at(2) == 1);
  CHECK(flipped.vertex_at(3) == 0);
  CHECK(flipped.actual(P) == B);
  CHECK_THROWS_AS(CycleMemory::fix(gen_path(8), sel(0, P)), NotApplicable);
}

TEST_CASE("sepy cycle lines") {
  const Graph c8 = gen_cycle(8);
  auto mem = CycleMemory::fix(c8, sel(0, P));
  GameState s = play(ddg(Player::dom), c8, {sel(0, P)});
  CHECK(sepy_cycle_move(s, mem) == sel(1, P));
  GameState a = play(ddg(Player::dom), c8, {sel(0, P), sel(1, P), sel(3, B)});
  CHECK(sepy_cycle_move(a, mem) == sel(7, P));
  a.play(sel(7, P));
  CHECK(a.status().kind == Status::Kind::sepy_win);
  CHECK(a.status().witness == 0);
  GameState b = play(ddg(Player::dom), c8, {sel(0, P), sel(1, P), sel(5, P)});
  CHECK(sepy_cycle_move(b, mem) == sel(2, P));
  b.play(sel(2, P));
  CHECK(b.status().witness == 1);

  auto m2 = CycleMemory::fix(c8, sel(2, B));
  GameState c = play(ddg(Player::dom), c8, {sel(2, B)});
  CHECK(sepy_cycle_move(c, m2) == sel(1, B));
}

TEST_CASE("sepy cycle wins within four plies") {
  for (int n = 8; n <= 12; ++n) {
    const auto r = verify_strategy(StrategyId::sepy_cycle, Player::sepy, ddg(Player::dom),
                                   std::make_shared<const Graph>(gen_cycle(n)), {}, "", 
                                   [](const GameState&, const Move&, const GameState& after) -> std::optional<std::string> {
                                     if (after.history().size() > 4) return "game longer than four plies";
                                     return std::nullopt;
                                   });
    CHECK(r.verified);
  }
  CHECK_THROWS_AS(make_strategy(StrategyId::sepy_cycle, Player::sepy, ddg(Player::dom),
                                std::make_shared<const Graph>(gen_cycle(7))),
                  NotApplicable);
}

TEST_CASE("sepy subdivision cases") {
  auto [k4, map] = subdivide3(gen_complete(4));
  const auto& path = map.paths[0];
  GameState one = play(ddg(Player::dom), k4, {sel(path.x, P)});
  CHECK(sepy_subdiv_move(one, map) == sel(path.y, P));

  auto [c12, cmap] = subdivide3(gen_cycle(4));
  GameState two = play(ddg(Player::dom), c12, {sel(0, P)});
  const Move first = sepy_subdiv_move(two, cmap);
  CHECK_FALSE(cmap.is_base_vertex(first.vertex));
  CHECK(c12.adjacent(0, first.vertex));
  CHECK(first.color == P);

  StrategyOptions none;
  CHECK_THROWS_AS(make_strategy(StrategyId::sepy_subdiv, Player::sepy, ddg(Player::dom),
                                std::make_shared<const Graph>(k4), none),
                  NotApplicable);
  StrategyOptions wrong;
  wrong.subdivision = cmap;
  CHECK_THROWS_AS(make_strategy(StrategyId::sepy_subdiv, Player::sepy, ddg(Player::dom),
                                std::make_shared<const Graph>(k4), wrong),
                  NotApplicable);
}

TEST_CASE("immediate wins are preferred") {
  GameState s = play(ddg(Player::sepy), gen_path(3), {sel(0, P), sel(2, B)});
  CHECK(monochromatizing_move(s) == sel(1, P));
  CHECK(greedy_win_move(s, 3) == sel(1, P));
  CHECK_FALSE(monochromatizing_move(new_game(ddg(Player::dom), gen_cycle(5))).has_value());
}

TEST_CASE("random baselines are deterministic") {
  GameState s = play(ddg(Player::dom), gen_cycle(9), {sel(0, P)});
  CHECK(random_move(s, 7) == random_move(s, 7));
  CHECK(is_legal(s, random_move(s, 7)));
  CHECK(greedy_win_move(s, 7) == random_move(s, 7));
}

TEST_CASE("applicability") {
  auto c8 = std::make_shared<const Graph>(gen_cycle(8));
  CHECK_THROWS_AS(make_strategy(StrategyId::ons, Player::sepy, ddg(Player::sepy), c8), NotApplicable);
  CHECK_THROWS_AS(make_strategy(StrategyId::ons, Player::dom, ddg(Player::dom), c8), NotApplicable);
  CHECK_THROWS_AS(make_strategy(StrategyId::ons, Player::dom, ddg(Player::sepy),
                                std::make_shared<const Graph>(disjoint_union(gen_cycle(3), gen_cycle(3)))),
                  NotApplicable);
  CHECK_THROWS_AS(make_strategy(StrategyId::biased_dom, Player::dom, ddg(Player::sepy), c8), NotApplicable);
  CHECK_NOTHROW(make_strategy(StrategyId::onsp, Player::dom, ddg(Player::sepy, PassRights::sepy), c8));
  CHECK_NOTHROW(make_strategy(StrategyId::random, Player::sepy, bdg(Player::dom), c8));
}
