#pragma once

#include <functional>
#include <optional>
#include <string>

#include "mgg/game.hpp"

namespace mgg {

enum class Provenance { matching_following, loop_stalling, exhaustive };

std::string to_string(Provenance p);

/// Deterministic strategy. choose() returns nullopt when the policy has no
/// advice for a position (e.g. one not reachable under its own play).
class Policy {
 public:
  using Chooser = std::function<std::optional<Move>(const Position&)>;

  Policy(Provenance provenance, Chooser chooser)
      : provenance_(provenance), chooser_(std::move(chooser)) {}

  std::optional<Move> choose(const Position& p) const { return chooser_(p); }
  Provenance provenance() const { return provenance_; }

 private:
  Provenance provenance_;
  Chooser chooser_;
};

}  // namespace mgg
