#include "mgg/arena.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "mgg/poly_solvers.hpp"

namespace mgg {

std::optional<LoopMode> parse_loop_mode(std::string_view name) {
  if (name == "none") return LoopMode::none;
  if (name == "all") return LoopMode::all;
  if (name == "free") return LoopMode::free;
  return std::nullopt;
}

std::string to_string(LoopMode mode) {
  switch (mode) {
    case LoopMode::none: return "none";
    case LoopMode::all: return "all";
    case LoopMode::free: return "free";
  }
  return "?";
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t x = master ^ (index * 0x9e3779b97f4a7c15ULL);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

unsigned default_thread_count() { return std::max(1u, std::thread::hardware_concurrency()); }

namespace {

std::vector<Edge> candidate_edges(GraphKind kind, std::size_t n, bool with_loops) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = kind == GraphKind::undirected ? u : 0; v < n; ++v) {
      if (u == v && !with_loops) continue;
      out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace

std::size_t max_edge_count(GraphKind kind, std::size_t n, LoopMode loops) {
  return candidate_edges(kind, n, loops == LoopMode::free).size();
}

Position random_instance(Game game, GraphKind kind, std::size_t n, std::size_t m,
                         Weight weight_bound, LoopMode loops, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_instance: need at least one vertex");
  if (game == Game::vgeo && loops != LoopMode::none) {
    throw std::invalid_argument("random_instance: vertex geography graphs are loop-free");
  }
  std::vector<Edge> pool = candidate_edges(kind, n, loops == LoopMode::free);
  if (m > pool.size()) {
    throw std::invalid_argument("random_instance: " + std::to_string(m) + " edges requested, at most " +
                                std::to_string(pool.size()) + " possible");
  }
  if (is_nimg(game) && weight_bound == 0) throw std::invalid_argument("random_instance: weight bound must be >= 1");

  Rng rng(seed);
  // partial Fisher-Yates: first m entries are a uniform m-subset
  for (std::size_t i = 0; i < m; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  pool.resize(m);
  if (loops == LoopMode::all) {
    for (Vertex v = 0; v < n; ++v) pool.push_back({v, v});
  }
  auto graph = std::make_shared<const Graph>(kind, n, pool);

  WeightMap weights;
  if (is_nimg(game)) {
    weights.resize(n);
    for (auto& w : weights) w = rng.between(1, weight_bound);
  }
  const Vertex start = static_cast<Vertex>(rng.below(n));
  return is_nimg(game) ? Position::nimg(game, graph, std::move(weights), start)
                       : Position::geography(game, graph, start);
}

Graph random_bipartite_graph(std::size_t left, std::size_t right, std::size_t m, std::uint64_t seed) {
  if (left == 0 || right == 0) throw std::invalid_argument("random_bipartite_graph: empty side");
  if (m > left * right) throw std::invalid_argument("random_bipartite_graph: too many edges");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  if (2 * m > left * right) {
    std::vector<Edge> pool;
    for (Vertex u = 0; u < left; ++u)
      for (Vertex v = 0; v < right; ++v) pool.push_back({u, static_cast<Vertex>(left + v)});
    for (std::size_t i = 0; i < m; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    pool.resize(m);
    return Graph(GraphKind::undirected, left + right, pool);
  }
  std::unordered_set<std::uint64_t> seen;
  while (edges.size() < m) {
    const std::uint64_t u = rng.below(left), v = rng.below(right);
    if (seen.insert(u * right + v).second) {
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(left + v)});
    }
  }
  return Graph(GraphKind::undirected, left + right, edges);
}

std::string format_trial(const TrialReport& r) {
  std::ostringstream out;
  auto show = [](const std::optional<Outcome>& o) { return o ? to_string(*o) : std::string("?"); };
  out << r.check << " seed=" << r.seed << " n=" << r.n << " m=" << r.m << " start=" << r.start
      << " source=" << show(r.source) << " target=" << show(r.target) << " states=" << r.source_states
      << "/" << r.target_states << " ";
  if (!r.agree) {
    out << (r.source_exhausted || r.target_exhausted ? "INDETERMINATE" : "N/A");
  } else {
    out << (*r.agree ? "agree" : "DISAGREE");
  }
  for (const auto& v : r.bookkeeping) out << " [bookkeeping: " << v << "]";
  return out.str();
}

TrialReport check_reduction(ReductionKind kind, const Position& instance, std::uint64_t budget) {
  TrialReport r;
  r.check = std::string(reduction_name(kind));
  r.n = instance.graph().vertex_count();
  r.m = instance.graph().edge_count();
  r.start = instance.current();

  const ClaimedIdentity claim = claimed_identity(kind);
  ReductionOutput out = reduce(kind, instance);
  r.bookkeeping = bookkeeping_violations(kind, instance, out);

  SolveReport src = solve(instance, claim.source_convention, budget);
  r.source = src.outcome;
  r.source_states = src.states_expanded;
  r.source_exhausted = src.budget_exhausted;

  SolveReport tgt = solve(out.target.position, claim.target_convention, budget);
  r.target = tgt.outcome;
  r.target_states = tgt.states_expanded;
  r.target_exhausted = tgt.budget_exhausted;

  if (r.source && r.target) r.agree = *r.source == *r.target;
  return r;
}

std::optional<SolverCheck> parse_solver_check(std::string_view name) {
  if (name == "solver-bipartite") return SolverCheck::bipartite;
  if (name == "solver-weight1") return SolverCheck::weight1;
  if (name == "solver-loops") return SolverCheck::loops;
  return std::nullopt;
}

std::string_view solver_check_name(SolverCheck check) {
  switch (check) {
    case SolverCheck::bipartite: return "solver-bipartite";
    case SolverCheck::weight1: return "solver-weight1";
    case SolverCheck::loops: return "solver-loops";
  }
  return "?";
}

TrialReport check_solver(SolverCheck check, const Position& instance, std::uint64_t budget) {
  TrialReport r;
  r.check = std::string(solver_check_name(check));
  r.n = instance.graph().vertex_count();
  r.m = instance.graph().edge_count();
  r.start = instance.current();

  PolyAnswer answer = [&] {
    switch (check) {
      case SolverCheck::bipartite: return solve_bipartite_rm_misere(instance);
      case SolverCheck::weight1: return solve_weight1_rm_misere(instance);
      case SolverCheck::loops: return solve_loops_rm_misere(instance);
    }
    throw std::logic_error("unknown solver check");
  }();
  if (auto* res = std::get_if<PolyResult>(&answer)) r.source = res->outcome;

  SolveReport tgt = solve(instance, Convention::misere, budget);
  r.target = tgt.outcome;
  r.target_states = tgt.states_expanded;
  r.target_exhausted = tgt.budget_exhausted;
  if (r.source && r.target) r.agree = *r.source == *r.target;
  return r;
}

std::string to_string(StrategyVerdict v) {
  switch (v) {
    case StrategyVerdict::verified: return "verified";
    case StrategyVerdict::refuted: return "refuted";
    case StrategyVerdict::indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

struct SideKey {
  StateKey state;
  bool policy_to_move;
  friend bool operator==(const SideKey&, const SideKey&) = default;
};

struct SideKeyHash {
  std::size_t operator()(const SideKey& k) const noexcept {
    return StateKeyHash{}(k.state) ^ (k.policy_to_move ? 0x5bd1e995u : 0u);
  }
};

class StrategyChecker {
 public:
  StrategyChecker(const Position& root, Convention c, const Policy& policy, std::uint64_t budget)
      : codec_(root), convention_(c), policy_(policy), budget_(budget) {}

  struct OutOfBudget {};

  bool wins(const Position& p, bool policy_to_move) {
    const SideKey key{codec_.key(p), policy_to_move};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (memo_.size() >= budget_) throw OutOfBudget{};

    bool result;
    if (is_terminal(p)) {
      const bool mover_wins = terminal_outcome(convention_) == Outcome::N;
      result = policy_to_move ? mover_wins : !mover_wins;
    } else if (policy_to_move) {
      std::optional<Move> m = policy_.choose(p);
      std::vector<Move> legal = legal_moves(p);
      if (!m || std::find(legal.begin(), legal.end(), *m) == legal.end()) {
        result = false;
      } else {
        result = wins(apply_move(p, *m), false);
      }
    } else {
      result = true;
      for (const Move& reply : legal_moves(p)) {
        if (!wins(apply_move(p, reply), true)) {
          result = false;
          break;
        }
      }
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  StateCodec codec_;
  Convention convention_;
  const Policy& policy_;
  std::uint64_t budget_;
  std::unordered_map<SideKey, bool, SideKeyHash> memo_;
};

}  // namespace

StrategyVerdict verify_strategy(const Position& p, Convention c, const Policy& policy,
                                std::uint64_t budget) {
  StrategyChecker checker(p, c, policy, budget);
  try {
    return checker.wins(p, true) ? StrategyVerdict::verified : StrategyVerdict::refuted;
  } catch (const StrategyChecker::OutOfBudget&) {
    return StrategyVerdict::indeterminate;
  }
}

void write_counterexample(const std::filesystem::path& dir, ReductionKind kind,
                          const Position& source, const TrialReport& report) {
  std::filesystem::create_directories(dir);
  const ClaimedIdentity claim = claimed_identity(kind);
  ReductionOutput out = reduce(kind, source);
  write_position_file(dir / "source.pos", {source, claim.source_convention});
  write_position_file(dir / "target.pos", out.target);
  std::ofstream(dir / "namemap.txt") << format_name_map(out.name_map);
  std::ofstream(dir / "report.txt") << format_trial(report) << '\n';
}

}  // namespace mgg
