// domgame: generate graphs, solve positions, verify strategies, play games.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "domgame/enumerate.hpp"
#include "domgame/errors.hpp"
#include "domgame/game.hpp"
#include "domgame/graph_io.hpp"
#include "domgame/solver.hpp"
#include "domgame/strategies.hpp"
#include "domgame/suite.hpp"
#include "domgame/trace.hpp"
#include "domgame/verify.hpp"

using namespace domgame;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitResource = 2;
constexpr int kExitNotApplicable = 3;
constexpr int kExitEof = 4;

struct Source {
  std::string graph;
  std::string g6;
  std::string file;
  std::string corpus;

  void add(CLI::App* cmd, bool allow_corpus) {
    auto* a = cmd->add_option("--graph", graph, "generator spec, e.g. cycle:8, union:cycle:4+cycle:8, subdiv2:complete:4");
    auto* b = cmd->add_option("--g6", g6, "graph6 string");
    auto* c = cmd->add_option("--file", file, "edge-list file (graph6 if it ends in .g6)");
    std::vector<CLI::Option*> all{a, b, c};
    if (allow_corpus) all.push_back(cmd->add_option("--corpus", corpus, "corpus, e.g. connected:6, isolatefree:4-6"));
    for (auto* x : all) {
      for (auto* y : all) {
        if (x != y) x->excludes(y);
      }
    }
  }

  std::vector<LoadedGraph> load() const {
    if (!graph.empty()) return {generate(graph)};
    if (!g6.empty()) return {{parse_graph6(g6), g6, std::nullopt}};
    if (!file.empty()) return {load_graph_file(file)};
    if (!corpus.empty()) {
      std::vector<LoadedGraph> out;
      for (auto& e : domgame::corpus(corpus)) out.push_back({std::move(e.graph), e.name, std::nullopt});
      return out;
    }
    throw CLI::ValidationError("a graph source is required: --graph, --g6, --file or --corpus");
  }
};

struct ConfigFlags {
  std::string variant = "ddg";
  std::string start = "sepy";
  int d = 1;
  int s = 1;
  std::string pass = "none";
  bool allow_first_turn_pass = false;

  void add(CLI::App* cmd) {
    cmd->add_option("--variant", variant, "ddg or bdg")->check(CLI::IsMember({"ddg", "bdg"}));
    cmd->add_option("--start", start, "dom or sepy")->check(CLI::IsMember({"dom", "sepy"}));
    cmd->add_option("--d", d, "Dom's selections per turn");
    cmd->add_option("--s", s, "Sepy's maximum selections per turn");
    cmd->add_option("--pass", pass, "none, dom or sepy")->check(CLI::IsMember({"none", "dom", "sepy"}));
    cmd->add_flag("--allow-first-turn-pass", allow_first_turn_pass, "let the pass holder pass on the first turn");
  }

  // A biased game without an explicit --pass gives Sepy the pass right.
  GameConfig build(const CLI::App* cmd) const {
    GameConfig c;
    c.variant = variant == "bdg" ? Variant::bdg : Variant::ddg;
    c.starter = start == "dom" ? Player::dom : Player::sepy;
    c.dom_picks = d;
    c.sepy_picks = s;
    if (pass == "dom") c.pass = PassRights::dom;
    if (pass == "sepy") c.pass = PassRights::sepy;
    if ((d != 1 || s != 1) && cmd->count("--pass") == 0) c.pass = PassRights::sepy;
    c.allow_first_turn_pass = allow_first_turn_pass;
    c.validate();
    return c;
  }
};

Player parse_role(const std::string& s) { return s == "dom" ? Player::dom : Player::sepy; }

StrategyId strategy_or_throw(const std::string& name) {
  auto id = parse_strategy_id(name);
  if (!id) throw CLI::ValidationError("unknown strategy '" + name + "'");
  return *id;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// ---------------------------------------------------------------------------

int cmd_gen(const Source& src, const std::string& format, const std::string& output) {
  std::ostringstream text;
  for (const auto& lg : src.load()) {
    if (format == "edges") {
      text << write_edge_list(lg.graph);
    } else {
      text << emit_graph6(lg.graph) << '\n';
    }
  }
  if (output.empty()) {
    std::cout << text.str();
  } else {
    write_file(output, text.str());
  }
  return kExitOk;
}

int cmd_solve(const Source& src, const GameConfig& config, SolverOptions opts) {
  for (const auto& lg : src.load()) {
    try {
      auto g = std::make_shared<const Graph>(lg.graph);
      new_game(config, g);
      Solver solver(config, g, opts);
      std::cout << solve_json(lg.name, config, solver.solve()).dump() << std::endl;
    } catch (const ResourceError& e) {
      std::cerr << "resource limit: " << e.what() << '\n';
      return kExitResource;
    }
  }
  return kExitOk;
}

int cmd_verify(const Source& src, const GameConfig& config, StrategyId id, Player role, std::uint64_t seed,
               bool skip_inapplicable, const std::string& output) {
  int exit_code = kExitOk;
  int verified = 0;
  int skipped = 0;
  int total = 0;
  std::string failures;
  for (const auto& lg : src.load()) {
    ++total;
    StrategyOptions opts;
    opts.seed = seed;
    opts.subdivision = lg.subdivision;
    VerificationReport r;
    try {
      r = verify_strategy(id, role, config, std::make_shared<const Graph>(lg.graph), opts, lg.name);
    } catch (const NotApplicable& e) {
      std::cerr << lg.name << ": not applicable: " << e.what() << '\n';
      ++skipped;
      if (!skip_inapplicable && exit_code == kExitOk) exit_code = kExitNotApplicable;
      continue;
    }
    const auto j = report_json(r);
    std::cout << j.dump() << std::endl;
    if (r.verified) {
      ++verified;
    } else {
      exit_code = kExitFailed;
      failures += j.dump() + "\n";
    }
  }
  if (!failures.empty() && !output.empty()) write_file(output, failures);
  std::cerr << verified << " verified, " << total - verified - skipped << " failed, " << skipped
            << " not applicable\n";
  return exit_code;
}

// ---------------------------------------------------------------------------

void print_board(const GameState& s) {
  std::cerr << "vertex colours:";
  for (Vertex v = 0; v < s.order(); ++v) {
    auto c = s.color_of(v);
    std::cerr << ' ' << v << '=' << (c ? to_string(*c) : "-");
  }
  std::cerr << "\nlegal:";
  for (const auto& m : legal_moves(s)) std::cerr << " [" << to_string(m) << ']';
  std::cerr << '\n';
}

std::optional<Move> parse_human(const std::string& line) {
  std::istringstream in(line);
  std::string first;
  std::string second;
  in >> first >> second;
  if (first == "pass" && second.empty()) return Move::pass();
  try {
    std::size_t used = 0;
    const int v = std::stoi(first, &used);
    if (used != first.size()) return std::nullopt;
    if (second == "purple" || second == "p") return Move::select(v, Color::purple);
    if (second == "blue" || second == "b") return Move::select(v, Color::blue);
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

// Empty optional on end of input.
std::optional<Move> ask_human(const GameState& s) {
  while (true) {
    print_board(s);
    std::cerr << to_string(s.actor()) << "> ";
    std::string line;
    if (!std::getline(std::cin, line)) return std::nullopt;
    auto m = parse_human(line);
    if (m && is_legal(s, *m)) return m;
    std::cerr << "not a legal move; type \"<vertex> <purple|blue>\" or \"pass\"\n";
  }
}

int cmd_play(const LoadedGraph& lg, const GameConfig& config, const std::string& dom_seat,
             const std::string& sepy_seat, std::uint64_t seed, SolverOptions solver, const std::string& output) {
  auto g = std::make_shared<const Graph>(lg.graph);
  GameState state = new_game(config, g);
  StrategyOptions opts;
  opts.seed = seed;
  opts.subdivision = lg.subdivision;
  opts.solver = solver;
  std::unique_ptr<Strategy> seats[2];
  const std::string names[2] = {dom_seat, sepy_seat};
  for (Player p : {Player::dom, Player::sepy}) {
    const auto& name = names[static_cast<int>(p)];
    if (name == "human") continue;
    seats[static_cast<int>(p)] = make_strategy(strategy_or_throw(name), p, config, g, opts);
  }

  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw std::runtime_error("cannot write " + output);
  }
  std::ostream& out = output.empty() ? std::cout : file;
  while (state.status().ongoing()) {
    const auto& seat = seats[static_cast<int>(state.actor())];
    Move m;
    if (seat) {
      m = seat->choose(state);
    } else {
      auto human = ask_human(state);
      if (!human) {
        std::cerr << "end of input\n";
        return kExitEof;
      }
      m = *human;
    }
    state.play(m);
    out << ply_json(state.history().size() - 1, state.history().back()).dump() << std::endl;
  }
  Json last;
  last["winner"] = to_string(*state.status().winner());
  last["plies"] = state.history().size();
  out << last.dump() << std::endl;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disjoint and Bicolored Domination Games"};
  app.require_subcommand(1);

  Source src;
  ConfigFlags flags;
  SolverOptions solver;
  std::uint64_t seed = 0;
  std::string output;
  auto add_solver = [&](CLI::App* cmd) {
    cmd->add_option("--cap", solver.max_order, "largest graph order the solver accepts");
    cmd->add_option("--threads", solver.threads, "root-level solver threads");
  };

  auto* gen = app.add_subcommand("gen", "print graphs in graph6 or edge-list form");
  std::string format = "g6";
  src.add(gen, true);
  gen->add_option("--format", format, "g6 or edges")->check(CLI::IsMember({"g6", "edges"}));
  gen->add_option("-o,--output", output, "output file");

  auto* solve = app.add_subcommand("solve", "exact winner under optimal play, as JSON");
  bool no_memo = false;
  src.add(solve, true);
  flags.add(solve);
  add_solver(solve);
  solve->add_flag("--no-memo", no_memo, "disable the transposition table");

  auto* verify = app.add_subcommand("verify", "check a strategy against every opponent line");
  std::string strategy;
  std::string role = "dom";
  bool skip_inapplicable = false;
  src.add(verify, true);
  flags.add(verify);
  verify->add_option("--strategy", strategy, "strategy id")->required();
  verify->add_option("--role", role, "dom or sepy")->check(CLI::IsMember({"dom", "sepy"}));
  verify->add_option("--seed", seed, "seed for randomised strategies");
  verify->add_option("-o,--output", output, "write failing reports here");
  verify->add_flag("--skip-inapplicable", skip_inapplicable, "ignore graphs the strategy does not apply to");

  auto* play = app.add_subcommand("play", "play one game and print its trace");
  std::string dom_seat = "solver";
  std::string sepy_seat = "random";
  src.add(play, false);
  flags.add(play);
  add_solver(play);
  play->add_option("--dom", dom_seat, "strategy id, solver or human");
  play->add_option("--sepy", sepy_seat, "strategy id, solver or human");
  play->add_option("--seed", seed, "seed for randomised strategies");
  play->add_option("-o,--output", output, "trace file");

  auto* suite = app.add_subcommand("suite", "run the acceptance battery");
  std::string only;
  suite->add_option("--only", only, "comma separated item numbers or names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFailed;
  }

  try {
    if (*gen) return cmd_gen(src, format, output);
    if (*solve) {
      solver.memoize = !no_memo;
      return cmd_solve(src, flags.build(solve), solver);
    }
    if (*verify) {
      return cmd_verify(src, flags.build(verify), strategy_or_throw(strategy), parse_role(role), seed,
                        skip_inapplicable, output);
    }
    if (*play) {
      auto graphs = src.load();
      return cmd_play(graphs.front(), flags.build(play), dom_seat, sepy_seat, seed, solver, output);
    }
    if (*suite) {
      const auto outcomes = run_suite(only, std::cout);
      for (const auto& o : outcomes) {
        if (!o.passed) {
          std::cerr << "failed item " << o.number << " " << o.name << '\n';
          return kExitFailed;
        }
      }
      return kExitOk;
    }
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return kExitNotApplicable;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitFailed;
}
