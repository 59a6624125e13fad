#include "domgame/trace.hpp"

#include <sstream>
#include <stdexcept>

#include "domgame/errors.hpp"

namespace domgame {

namespace {

Color color_from_string(const std::string& s) {
  if (s == "purple" || s == "p") return Color::purple;
  if (s == "blue" || s == "b") return Color::blue;
  throw std::runtime_error("unknown colour '" + s + "'");
}

}  // namespace

Json ply_json(std::size_t index, const Ply& p) {
  Json j;
  j["ply"] = index + 1;
  j["actor"] = to_string(p.actor);
  j["move"] = to_json(p.move);
  j["status"] = to_json(p.after);
  return j;
}

Json to_json(const Move& m) {
  if (m.is_pass) return "pass";
  Json j;
  j["v"] = m.vertex;
  j["c"] = to_string(m.color);
  return j;
}

Json to_json(const Status& s) {
  Json j;
  switch (s.kind) {
    case Status::Kind::ongoing:
      j["result"] = "ongoing";
      j["next"] = to_string(s.next);
      break;
    case Status::Kind::sepy_win:
      j["result"] = "sepy_win";
      j["witness"] = s.witness;
      j["color"] = to_string(s.witness_color);
      break;
    case Status::Kind::dom_win:
      j["result"] = "dom_win";
      break;
  }
  return j;
}

Json to_json(const GameConfig& c) {
  Json j;
  j["variant"] = to_string(c.variant);
  j["start"] = to_string(c.starter);
  j["d"] = c.dom_picks;
  j["s"] = c.sepy_picks;
  j["pass"] = to_string(c.pass);
  j["allow_first_turn_pass"] = c.allow_first_turn_pass;
  return j;
}

std::string trace_jsonl(const GameState& state) {
  std::string out;
  const auto history = state.history();
  for (std::size_t i = 0; i < history.size(); ++i) {
    out += ply_json(i, history[i]).dump();
    out += '\n';
  }
  return out;
}

Move move_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "pass") return Move::pass();
  if (!j.is_object() || !j.contains("v") || !j.contains("c")) throw std::runtime_error("malformed move " + j.dump());
  return Move::select(j.at("v").get<int>(), color_from_string(j.at("c").get<std::string>()));
}

GameState replay(const GameConfig& config, std::shared_ptr<const Graph> g, std::istream& trace) {
  GameState state = new_game(config, std::move(g));
  std::string line;
  int lineno = 0;
  while (std::getline(trace, line)) {
    ++lineno;
    if (line.empty()) continue;
    const Json j = Json::parse(line);
    if (!j.contains("ply")) continue;  // trailing summary line
    const std::string where = "trace line " + std::to_string(lineno);
    if (j.at("actor").get<std::string>() != to_string(state.actor())) {
      throw std::runtime_error(where + ": actor does not match the engine");
    }
    state.play(move_from_json(j.at("move")));
    if (Json(to_json(state.status())) != j.at("status")) {
      throw std::runtime_error(where + ": status does not match the engine");
    }
  }
  return state;
}

Json solve_json(const std::string& graph, const GameConfig& config, const SolveResult& r) {
  Json j;
  j["graph"] = graph;
  j["config"] = to_json(config);
  j["winner"] = to_string(r.winner);
  j["nodes"] = r.nodes;
  Json pv = Json::array();
  for (const auto& m : r.principal_variation) pv.push_back(to_json(m));
  j["pv"] = pv;
  j["best_move"] = r.best_move ? to_json(*r.best_move) : Json(nullptr);
  j["losing"] = r.losing;
  return j;
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["strategy"] = to_string(r.strategy);
  j["role"] = to_string(r.role);
  j["config"] = to_json(r.config);
  j["graph"] = r.graph;
  j["verified"] = r.verified;
  j["branches"] = r.branches;
  if (!r.verified) {
    j["failure"] = r.failure;
    Json plays = Json::array();
    if (r.counterexample) {
      const auto history = r.counterexample->history();
      for (std::size_t i = 0; i < history.size(); ++i) plays.push_back(ply_json(i, history[i]));
    }
    j["counterexample"] = plays;
  }
  return j;
}

}  // namespace domgame
