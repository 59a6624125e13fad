#include "domgame/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "domgame/errors.hpp"

namespace domgame {

namespace {

constexpr int kMaxSolverOrder = 40;  // 3^40 still fits in 64 bits
constexpr std::uint64_t kMaxTableBytes = std::uint64_t{8} << 30;

constexpr std::uint8_t kUnknown = 0;

std::uint8_t encode_winner(Player p) { return p == Player::dom ? 1 : 2; }
Player decode_winner(std::uint8_t v) { return v == 1 ? Player::dom : Player::sepy; }

struct Pow3Tables {
  // chunk[k][byte] = sum of 3^(8k+i) over the set bits i of byte.
  std::array<std::array<std::uint64_t, 256>, 5> chunk{};

  Pow3Tables() {
    std::uint64_t pw = 1;
    std::array<std::uint64_t, kMaxSolverOrder> pow3{};
    for (int i = 0; i < kMaxSolverOrder; ++i) {
      pow3[i] = pw;
      pw *= 3;
    }
    for (int k = 0; k < 5; ++k) {
      for (int byte = 0; byte < 256; ++byte) {
        std::uint64_t sum = 0;
        for (int i = 0; i < 8; ++i) {
          if ((byte >> i) & 1) sum += pow3[8 * k + i];
        }
        chunk[k][byte] = sum;
      }
    }
  }

  std::uint64_t index(std::uint64_t purple, std::uint64_t blue) const {
    std::uint64_t out = 0;
    for (int k = 0; k < 5; ++k) {
      out += chunk[k][(purple >> (8 * k)) & 0xff] + 2 * chunk[k][(blue >> (8 * k)) & 0xff];
    }
    return out;
  }
};

const Pow3Tables& pow3_tables() {
  static const Pow3Tables tables;
  return tables;
}

std::uint64_t pow3(int n) {
  std::uint64_t out = 1;
  for (int i = 0; i < n; ++i) out *= 3;
  return out;
}

}  // namespace

int default_state_cap() {
  if (const char* env = std::getenv("DOMGAME_STATE_CAP")) {
    try {
      int cap = std::stoi(env);
      if (cap > 0) return cap;
    } catch (const std::exception&) {
    }
  }
  return 14;
}

StateKey encode_state(const GameState& state) {
  std::uint64_t purple = 0;
  std::uint64_t blue = 0;
  if (state.order() > kMaxSolverOrder) throw ResourceError("state keys support at most 40 vertices");
  for (Vertex v = 0; v < state.order(); ++v) {
    if (auto c = state.color_of(v)) (*c == Color::purple ? purple : blue) |= std::uint64_t{1} << v;
  }
  const auto& t = pow3_tables();
  std::uint64_t key = t.index(purple, blue);
  if (state.config().variant == Variant::ddg) key = std::min(key, t.index(blue, purple));
  return {key, state.actor(), static_cast<std::uint8_t>(state.selections_this_turn()), state.any_move_made()};
}

SolverPosition SolverPosition::from_state(const GameState& s) {
  SolverPosition sp;
  sp.colors.assign(s.raw_colors().begin(), s.raw_colors().end());
  sp.actor = s.actor();
  sp.selections = s.selections_this_turn();
  sp.any_move_made = s.any_move_made();
  return sp;
}

struct Solver::Pos {
  std::uint64_t purple = 0;
  std::uint64_t blue = 0;
  Player actor = Player::dom;
  std::uint8_t selections = 0;
  bool any = false;
};

struct Solver::Impl {
  int n = 0;
  std::vector<std::uint64_t> closed;
  std::uint64_t all = 0;
  int max_picks = 1;
  std::uint64_t meta_count = 0;
  std::unique_ptr<std::atomic<std::uint8_t>[]> table;

  std::uint64_t dominated(std::uint64_t colored) const {
    std::uint64_t out = 0;
    while (colored) {
      int v = std::countr_zero(colored);
      colored &= colored - 1;
      out |= closed[v];
    }
    return out;
  }

  // Uncoloured vertices whose selection in a colour with domination `dom`
  // is legal.
  std::uint64_t selectable(const Pos& p, std::uint64_t dom) const {
    std::uint64_t free = all & ~(p.purple | p.blue);
    std::uint64_t out = 0;
    while (free) {
      int v = std::countr_zero(free);
      free &= free - 1;
      if (closed[v] & ~dom) out |= std::uint64_t{1} << v;
    }
    return out;
  }
};

Solver::Solver(GameConfig config, std::shared_ptr<const Graph> g, SolverOptions options)
    : config_(config), graph_(std::move(g)), options_(options), impl_(std::make_unique<Impl>()) {
  config_.validate();
  const int n = graph_->order();
  if (n > options_.max_order || n > kMaxSolverOrder) {
    throw ResourceError("state-space limit exceeded: graph has " + std::to_string(n) +
                        " vertices, solver cap is n <= " + std::to_string(std::min(options_.max_order, kMaxSolverOrder)) +
                        " (raise with DOMGAME_STATE_CAP)");
  }
  if (graph_->has_isolated_vertex()) throw ConfigError("game graph has an isolated vertex");
  impl_->n = n;
  impl_->closed.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t m = std::uint64_t{1} << v;
    for (Vertex u : graph_->neighbors(v)) m |= std::uint64_t{1} << u;
    impl_->closed[v] = m;
  }
  impl_->all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  impl_->max_picks = std::max(config_.dom_picks, config_.sepy_picks);
  impl_->meta_count = 2 * static_cast<std::uint64_t>(impl_->max_picks) * 2;
  if (options_.memoize) {
    const std::uint64_t entries = pow3(n) * impl_->meta_count;
    if (entries > kMaxTableBytes) {
      throw ResourceError("state-space limit exceeded: table of " + std::to_string(entries) +
                          " entries is above the 8 GiB bound");
    }
    try {
      impl_->table.reset(new std::atomic<std::uint8_t>[entries]());
    } catch (const std::bad_alloc&) {
      throw ResourceError("state-space limit exceeded: cannot allocate " + std::to_string(entries) + " entries");
    }
  }
}

Solver::~Solver() = default;

std::uint64_t Solver::table_index(const Pos& p) const {
  const auto& t = pow3_tables();
  std::uint64_t key = t.index(p.purple, p.blue);
  if (config_.variant == Variant::ddg) key = std::min(key, t.index(p.blue, p.purple));
  const std::uint64_t meta =
      (static_cast<std::uint64_t>(p.actor) * impl_->max_picks + p.selections) * 2 + (p.any ? 1 : 0);
  return key * impl_->meta_count + meta;
}

std::optional<Player> Solver::terminal(const Pos& p) const {
  const auto& im = *impl_;
  for (int v = 0; v < im.n; ++v) {
    const std::uint64_t nb = im.closed[v];
    if ((nb & p.purple) == nb || (nb & p.blue) == nb) return Player::sepy;
  }
  const std::uint64_t dom_p = im.dominated(p.purple);
  const std::uint64_t dom_b = im.dominated(p.blue);
  if (config_.variant == Variant::ddg) {
    if (dom_p == im.all && dom_b == im.all) return Player::dom;
    return std::nullopt;
  }
  if (im.selectable(p, dom_p) == 0 && im.selectable(p, dom_b) == 0) return Player::dom;
  return std::nullopt;
}

void Solver::moves(const Pos& p, std::vector<Move>& out) const {
  out.clear();
  const auto& im = *impl_;
  const bool bdg = config_.variant == Variant::bdg;
  const std::uint64_t sel_p = (!bdg || p.actor == Player::dom) ? im.selectable(p, im.dominated(p.purple)) : 0;
  const std::uint64_t sel_b = (!bdg || p.actor == Player::sepy) ? im.selectable(p, im.dominated(p.blue)) : 0;
  for (int v = 0; v < im.n; ++v) {
    if ((sel_p >> v) & 1) out.push_back(Move::select(v, Color::purple));
    if ((sel_b >> v) & 1) out.push_back(Move::select(v, Color::blue));
  }
  bool pass = false;
  if (p.actor == Player::sepy && p.selections > 0) {
    pass = true;
  } else if (p.selections == 0) {
    const bool holder = (p.actor == Player::dom && config_.pass == PassRights::dom) ||
                        (p.actor == Player::sepy && config_.pass == PassRights::sepy);
    pass = holder && (p.any || config_.allow_first_turn_pass);
  }
  if (pass) out.push_back(Move::pass());
}

Solver::Pos Solver::child(const Pos& p, const Move& m) const {
  const auto& im = *impl_;
  Pos c = p;
  auto can_select = [&](const Pos& q, Player who) {
    const bool bdg = config_.variant == Variant::bdg;
    if (bdg) {
      auto mask = who == Player::dom ? q.purple : q.blue;
      return im.selectable(q, im.dominated(mask)) != 0;
    }
    return im.selectable(q, im.dominated(q.purple)) != 0 || im.selectable(q, im.dominated(q.blue)) != 0;
  };
  auto end_turn = [&](Pos& q) {
    q.actor = opponent(q.actor);
    q.selections = 0;
    if (config_.variant == Variant::bdg && !can_select(q, q.actor)) q.actor = opponent(q.actor);
  };
  if (m.is_pass) {
    end_turn(c);
    return c;
  }
  (m.color == Color::purple ? c.purple : c.blue) |= std::uint64_t{1} << m.vertex;
  c.any = true;
  ++c.selections;
  if (terminal(c)) return c;
  const int quota = p.actor == Player::dom ? config_.dom_picks : config_.sepy_picks;
  if (c.selections >= quota || (p.actor == Player::dom && !can_select(c, Player::dom))) end_turn(c);
  return c;
}

Player Solver::value(const Pos& p) {
  nodes_.fetch_add(1, std::memory_order_relaxed);
  if (auto t = terminal(p)) return *t;
  std::uint64_t slot = 0;
  if (impl_->table) {
    slot = table_index(p);
    auto cached = impl_->table[slot].load(std::memory_order_relaxed);
    if (cached != kUnknown) return decode_winner(cached);
  }
  const Player me = p.actor;
  Player result = opponent(me);
  std::vector<Move> list;
  moves(p, list);
  if (list.empty()) throw std::logic_error("solver reached an ongoing position without moves");
  for (const auto& m : list) {
    if (value(child(p, m)) == me) {
      result = me;
      break;
    }
  }
  if (impl_->table) impl_->table[slot].store(encode_winner(result), std::memory_order_relaxed);
  return result;
}

Solver::Pos Solver::to_pos(const SolverPosition& sp) const {
  if (static_cast<int>(sp.colors.size()) != impl_->n) throw std::invalid_argument("position size mismatch");
  Pos p;
  for (int v = 0; v < impl_->n; ++v) {
    if (sp.colors[v] == 1) p.purple |= std::uint64_t{1} << v;
    if (sp.colors[v] == 2) p.blue |= std::uint64_t{1} << v;
  }
  p.actor = sp.actor;
  p.selections = static_cast<std::uint8_t>(sp.selections);
  p.any = sp.any_move_made;
  return p;
}

std::vector<std::pair<Move, Player>> Solver::evaluate_moves(const SolverPosition& from) {
  Pos root = to_pos(from);
  std::vector<std::pair<Move, Player>> out;
  if (terminal(root)) return out;
  std::vector<Move> list;
  moves(root, list);
  out.resize(list.size());
  const int threads = std::max(1, std::min<int>(options_.threads, static_cast<int>(list.size())));
  if (threads == 1 || !impl_->table) {
    for (std::size_t i = 0; i < list.size(); ++i) out[i] = {list[i], value(child(root, list[i]))};
    return out;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < list.size(); i += threads) out[i] = {list[i], value(child(root, list[i]))};
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

SolveResult Solver::solve(const SolverPosition& from) {
  nodes_ = 0;
  SolveResult r;
  Pos root = to_pos(from);
  if (auto t = terminal(root)) {
    r.winner = *t;
    r.nodes = 1;
    return r;
  }
  const Player me = root.actor;
  if (options_.threads > 1 && impl_->table) {
    auto scored = evaluate_moves(from);
    r.winner = opponent(me);
    for (auto& [m, w] : scored) {
      if (w == me) {
        r.winner = me;
        r.best_move = m;
        break;
      }
    }
    if (!r.best_move) r.best_move = scored.front().first;
  } else {
    std::vector<Move> list;
    moves(root, list);
    r.winner = opponent(me);
    for (const auto& m : list) {
      if (value(child(root, m)) == me) {
        r.winner = me;
        r.best_move = m;
        break;
      }
    }
    if (!r.best_move) r.best_move = list.front();
  }
  r.losing = r.winner != me;
  r.nodes = nodes_.load();

  // Principal variation: the winner takes its first winning move, the loser
  // its first legal move.
  Pos p = root;
  std::vector<Move> list;
  while (!terminal(p)) {
    moves(p, list);
    Move pick = list.front();
    for (const auto& m : list) {
      if (value(child(p, m)) == p.actor) {
        pick = m;
        break;
      }
    }
    r.principal_variation.push_back(pick);
    p = child(p, pick);
  }
  return r;
}

SolveResult Solver::solve(const GameState& from) {
  if (!from.status().ongoing()) {
    SolveResult r;
    r.winner = *from.status().winner();
    r.nodes = 1;
    return r;
  }
  return solve(SolverPosition::from_state(from));
}

SolveResult Solver::solve() {
  SolverPosition sp;
  sp.colors.assign(graph_->order(), 0);
  sp.actor = config_.starter;
  return solve(sp);
}

SolveResult solve(const GameConfig& config, const Graph& g, SolverOptions options) {
  Solver s(config, std::make_shared<const Graph>(g), options);
  return s.solve();
}

BestMove best_move(const GameConfig& config, const Graph& g, const GameState& state, SolverOptions options) {
  if (!state.status().ongoing()) throw std::invalid_argument("best_move on a finished game");
  Solver s(config, std::make_shared<const Graph>(g), options);
  auto r = s.solve(state);
  return {*r.best_move, r.losing};
}

}  // namespace domgame
