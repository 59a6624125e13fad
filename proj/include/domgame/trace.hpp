#pragma once

#include <istream>
#include <memory>
#include <string>

#include <json.hpp>

#include "domgame/game.hpp"
#include "domgame/solver.hpp"
#include "domgame/verify.hpp"

namespace domgame {

using Json = nlohmann::ordered_json;

Json to_json(const Move& m);     // {"v":3,"c":"purple"} or "pass"
Json to_json(const Status& s);   // {"result":"ongoing","next":"dom"} etc.
Json to_json(const GameConfig& c);
// Trace object for the ply at 0-based `index` (printed 1-based).
Json ply_json(std::size_t index, const Ply& p);

// One JSON object per ply, newline terminated:
// {"ply":1,"actor":"dom","move":{"v":0,"c":"purple"},"status":{...}}
std::string trace_jsonl(const GameState& state);

Move move_from_json(const Json& j);

// Replays a JSON-lines trace through the engine. Every line's actor and
// status must match what the engine produces; throws std::runtime_error
// otherwise (IllegalMove for an illegal move).
GameState replay(const GameConfig& config, std::shared_ptr<const Graph> g, std::istream& trace);

Json solve_json(const std::string& graph, const GameConfig& config, const SolveResult& r);

// Includes the counterexample playout as an array of trace objects.
Json report_json(const VerificationReport& r);

}  // namespace domgame
