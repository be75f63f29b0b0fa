#include "mgg/exhaustive.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <vector>

namespace mgg {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::matching_following: return "matching-following";
    case Provenance::loop_stalling: return "loop-stalling";
    case Provenance::exhaustive: return "exhaustive";
  }
  return "?";
}

std::size_t StateKeyHash::operator()(const StateKey& k) const noexcept {
  // splitmix64 finaliser over the three fields
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  std::uint64_t h = mix(k.words[0]);
  h = mix(h ^ k.words[1]);
  h = mix(h ^ k.token);
  return static_cast<std::size_t>(h);
}

StateCodec::StateCodec(const Position& root) : game_(root.game()) {
  const Graph& g = root.graph();
  std::size_t needed = 0;
  switch (game_) {
    case Game::nimg_rm:
    case Game::nimg_mr: {
      Weight max_w = 0;
      for (Weight w : root.weights()) max_w = std::max(max_w, w);
      bits_ = std::max(1u, static_cast<unsigned>(std::bit_width(max_w)));
      needed = g.vertex_count() * bits_;
      break;
    }
    case Game::vgeo: needed = g.vertex_count(); break;
    case Game::egeo: needed = g.edge_count(); break;
  }
  if (needed > 128) {
    throw CapacityError("position needs " + std::to_string(needed) +
                        " state bits; the exhaustive solver supports 128");
  }
}

StateKey StateCodec::key(const Position& p) const {
  StateKey k;
  k.token = p.current();
  auto put = [&k](std::size_t bit, std::uint64_t value) {
    k.words[bit >> 6] |= value << (bit & 63);
    if ((bit & 63) != 0 && (bit >> 6) == 0) k.words[1] |= value >> (64 - (bit & 63));
  };
  switch (game_) {
    case Game::nimg_rm:
    case Game::nimg_mr: {
      const Weight limit = bits_ >= 64 ? ~Weight{0} : (Weight{1} << bits_) - 1;
      for (Vertex v = 0; v < p.weights().size(); ++v) {
        if (p.weight(v) > limit) throw CapacityError("weight exceeds the codec width");
        put(std::size_t{v} * bits_, p.weight(v));
      }
      break;
    }
    case Game::vgeo: {
      const auto& removed = p.removed_vertices();
      for (std::size_t i = 0; i < removed.words().size(); ++i) k.words[i] = removed.words()[i];
      break;
    }
    case Game::egeo: {
      const auto& removed = p.removed_edges();
      for (std::size_t i = 0; i < removed.words().size(); ++i) k.words[i] = removed.words()[i];
      break;
    }
  }
  return k;
}

StateKey state_key(const Position& p) { return StateCodec(p).key(p); }

ExhaustiveSolver::ExhaustiveSolver(const Position& root, Convention convention, std::uint64_t budget)
    : codec_(root), convention_(convention), budget_(budget) {
  if (budget == 0) throw std::invalid_argument("budget must be positive");
}

std::optional<Outcome> ExhaustiveSolver::lookup(const Position& p) const {
  auto it = table_.find(codec_.key(p));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void ExhaustiveSolver::store(const StateKey& key, Outcome value, std::uint64_t& expanded) {
  if (table_.size() >= budget_) throw Exhausted{};
  table_.emplace(key, value);
  ++expanded;
}

// Iterative DFS: the stack is bounded by game length, which for nimg can be
// the total token count, so no native recursion here.
Outcome ExhaustiveSolver::evaluate(const Position& root, std::uint64_t& expanded) {
  const Outcome at_terminal = terminal_outcome(convention_);
  {
    const StateKey key = codec_.key(root);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    if (is_terminal(root)) {
      store(key, at_terminal, expanded);
      return at_terminal;
    }
  }

  struct Frame {
    Position position;
    StateKey key;
    std::vector<Move> moves;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({root, codec_.key(root), legal_moves(root)});

  Outcome result = Outcome::P;
  while (!stack.empty()) {
    Frame& f = stack.back();
    bool descended = false;
    bool winning = false;
    while (f.next < f.moves.size()) {
      Position child = apply_move(f.position, f.moves[f.next]);
      StateKey ck = codec_.key(child);
      auto it = table_.find(ck);
      Outcome value;
      if (it != table_.end()) {
        value = it->second;
      } else if (is_terminal(child)) {
        value = at_terminal;
        store(ck, value, expanded);
      } else {
        std::vector<Move> moves = legal_moves(child);
        stack.push_back({std::move(child), ck, std::move(moves)});
        descended = true;
        break;
      }
      if (value == Outcome::P) {
        winning = true;
        break;
      }
      ++f.next;
    }
    if (descended) continue;
    result = winning ? Outcome::N : Outcome::P;
    store(f.key, result, expanded);
    stack.pop_back();
  }
  return result;
}

SolveReport ExhaustiveSolver::solve(const Position& p) {
  SolveReport report;
  try {
    if (is_terminal(p)) {
      report.outcome = terminal_outcome(convention_);
      const StateKey key = codec_.key(p);
      if (!table_.contains(key)) store(key, *report.outcome, report.states_expanded);
      return report;
    }
    // The root's moves are scanned here so the first winning move is known
    // even when the root itself is already cached.
    for (const Move& m : legal_moves(p)) {
      if (evaluate(apply_move(p, m), report.states_expanded) == Outcome::P) {
        report.outcome = Outcome::N;
        report.principal_move = m;
        break;
      }
    }
    if (!report.outcome) report.outcome = Outcome::P;
    const StateKey key = codec_.key(p);
    if (!table_.contains(key)) store(key, *report.outcome, report.states_expanded);
  } catch (const Exhausted&) {
    report.outcome.reset();
    report.principal_move.reset();
    report.budget_exhausted = true;
  }
  return report;
}

SolveReport solve(const Position& p, Convention c, std::uint64_t budget) {
  ExhaustiveSolver solver(p, c, budget);
  return solver.solve(p);
}

Policy extract_strategy(const Position& p, Convention c, std::uint64_t budget) {
  auto solver = std::make_shared<ExhaustiveSolver>(p, c, budget);
  SolveReport root = solver->solve(p);
  if (root.budget_exhausted) throw std::invalid_argument("extract_strategy: budget exhausted");
  if (*root.outcome != Outcome::N || !root.principal_move) {
    throw std::invalid_argument("extract_strategy: position is not a winning (N, non-terminal) position");
  }
  return Policy(Provenance::exhaustive, [solver](const Position& q) -> std::optional<Move> {
    SolveReport r = solver->solve(q);
    return r.principal_move;
  });
}

}  // namespace mgg
