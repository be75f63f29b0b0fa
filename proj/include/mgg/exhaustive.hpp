#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>

#include "mgg/game.hpp"
#include "mgg/policy.hpp"

namespace mgg {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Canonical encoding of a position's mutable state.
struct StateKey {
  std::array<std::uint64_t, 2> words{};
  Vertex token = 0;

  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept;
};

/// Packs positions reachable from one root into 128 bits plus the token:
///   nimg: weights at bit_width(max root weight) bits per vertex;
///   vgeo: live-vertex bitset (at most 128 vertices);
///   egeo: live-edge bitset (at most 128 edges).
/// Throws CapacityError when the root does not fit.
class StateCodec {
 public:
  explicit StateCodec(const Position& root);
  StateKey key(const Position& p) const;
  unsigned bits_per_vertex() const { return bits_; }

 private:
  Game game_;
  unsigned bits_ = 1;
};

/// Codec built from p itself.
StateKey state_key(const Position& p);

struct SolveReport {
  std::optional<Outcome> outcome;  // absent iff budget_exhausted
  std::optional<Move> principal_move;
  std::uint64_t states_expanded = 0;
  bool budget_exhausted = false;
};

/// Memoised depth-first N/P search. The transposition table belongs to the
/// solver and persists across solve() calls on positions reachable from the
/// root it was built for; its size is capped by `budget`.
///
/// Not thread-safe; use one solver per thread.
class ExhaustiveSolver {
 public:
  ExhaustiveSolver(const Position& root, Convention convention,
                   std::uint64_t budget = kDefaultBudget);

  SolveReport solve(const Position& p);

  /// Cached value, if this state has been fully evaluated.
  std::optional<Outcome> lookup(const Position& p) const;

  Convention convention() const { return convention_; }
  std::size_t table_size() const { return table_.size(); }
  const std::unordered_map<StateKey, Outcome, StateKeyHash>& table() const { return table_; }

 private:
  struct Exhausted {};
  Outcome evaluate(const Position& p, std::uint64_t& expanded);
  void store(const StateKey& key, Outcome value, std::uint64_t& expanded);

  StateCodec codec_;
  Convention convention_;
  std::uint64_t budget_;
  std::unordered_map<StateKey, Outcome, StateKeyHash> table_;
};

SolveReport solve(const Position& p, Convention c, std::uint64_t budget = kDefaultBudget);

/// Policy that plays the canonically-first move into a P position. Throws
/// std::invalid_argument when p is not an N position (or the budget runs
/// out before that is known).
Policy extract_strategy(const Position& p, Convention c, std::uint64_t budget = kDefaultBudget);

}  // namespace mgg
