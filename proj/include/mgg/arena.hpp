#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "mgg/exhaustive.hpp"
#include "mgg/reductions.hpp"

namespace mgg {

enum class LoopMode { none, all, free };

std::optional<LoopMode> parse_loop_mode(std::string_view name);
std::string to_string(LoopMode mode);

/// Largest m accepted by random_instance. For LoopMode::all the loops come
/// on top of the m ordinary edges.
std::size_t max_edge_count(GraphKind kind, std::size_t n, LoopMode loops);

/// Deterministic stream: mt19937_64 with bias-free bounded draws, so the
/// same seed yields the same instance on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

/// Per-trial seed from (master seed, trial index).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

/// Uniform simple (di)graph with exactly m edges (drawn without
/// replacement), weights uniform in [1, weight_bound] for nimg games, and a
/// uniform start vertex. Throws std::invalid_argument if m is infeasible.
Position random_instance(Game game, GraphKind kind, std::size_t n, std::size_t m,
                         Weight weight_bound, LoopMode loops, std::uint64_t seed);

/// Bipartite graph with `left` + `right` vertices (left ids first) and m
/// distinct edges across, for matching benchmarks.
Graph random_bipartite_graph(std::size_t left, std::size_t right, std::size_t m, std::uint64_t seed);

struct TrialReport {
  std::string check;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  Weight weight_bound = 0;
  Vertex start = 0;
  std::optional<Outcome> source;
  std::optional<Outcome> target;
  std::optional<bool> agree;  // set only when both sides were solved
  std::uint64_t source_states = 0;
  std::uint64_t target_states = 0;
  bool source_exhausted = false;
  bool target_exhausted = false;
  std::vector<std::string> bookkeeping;  // violated size/degree invariants
};

std::string format_trial(const TrialReport& r);

/// Solves the instance under the source convention and its reduction under
/// the claimed target convention, and compares.
TrialReport check_reduction(ReductionKind kind, const Position& instance,
                            std::uint64_t budget = kDefaultBudget);

enum class SolverCheck { bipartite, weight1, loops };

std::optional<SolverCheck> parse_solver_check(std::string_view name);
std::string_view solver_check_name(SolverCheck check);

/// Poly solver (source side) against the exhaustive solver (target side),
/// both under misère. agree stays unset when the solver does not apply.
TrialReport check_solver(SolverCheck check, const Position& instance,
                         std::uint64_t budget = kDefaultBudget);

enum class StrategyVerdict { verified, refuted, indeterminate };

std::string to_string(StrategyVerdict v);

/// Plays `policy` for the player to move at p against every possible reply.
/// Verified iff every line ends at a terminal where the adversary is to
/// move and loses under c (or the policy side is to move and wins). A
/// policy that has no advice, or advises an illegal move, is refuted.
/// Indeterminate when more than `budget` distinct nodes would be visited.
StrategyVerdict verify_strategy(const Position& p, Convention c, const Policy& policy,
                                std::uint64_t budget = kDefaultBudget);

/// Writes source.pos, target.pos, namemap.txt and report.txt into dir.
void write_counterexample(const std::filesystem::path& dir, ReductionKind kind,
                          const Position& source, const TrialReport& report);

/// fn(i) for i in [0, count) on up to `threads` workers; results by index.
template <typename Fn>
auto run_trials(std::size_t count, unsigned threads, Fn fn) -> std::vector<decltype(fn(std::size_t{0}))> {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<std::optional<Result>> slots(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) slots[i].emplace(fn(i));
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  std::vector<Result> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

unsigned default_thread_count();

}  // namespace mgg
