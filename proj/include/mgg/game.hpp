#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mgg/graph.hpp"

namespace mgg {

enum class Game { nimg_rm, nimg_mr, vgeo, egeo };
enum class Convention { normal, misere };
enum class Outcome { N, P };

std::string to_string(Game game);
std::string to_string(Convention convention);
std::string to_string(Outcome outcome);

inline bool is_nimg(Game g) { return g == Game::nimg_rm || g == Game::nimg_mr; }
inline Outcome flip(Outcome o) { return o == Outcome::N ? Outcome::P : Outcome::N; }

/// The player to move at a terminal position loses under normal play and
/// wins under misère play.
inline Outcome terminal_outcome(Convention c) {
  return c == Convention::normal ? Outcome::P : Outcome::N;
}

/// Fixed-size bit vector; used for removed vertices / removed edges.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const;
  bool none() const { return count() == 0; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Move encoding, shared by all four games:
///   nimg-rm: `keep` is the new weight of the current vertex, then the
///            pointer goes to `to` (to == current for a loop, or for the
///            removal-only move on a vertex without neighbours);
///   nimg-mr: the pointer goes to `to`, whose weight becomes `keep`;
///   vgeo/egeo: the token slides to `to`; `keep` is unused and zero.
struct Move {
  Vertex to = 0;
  Weight keep = 0;

  friend auto operator<=>(const Move&, const Move&) = default;
};

class PositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable game state. The graph is shared between all positions derived
/// from one root.
class Position {
 public:
  static Position nimg(Game game, std::shared_ptr<const Graph> graph, WeightMap weights,
                       Vertex start);
  static Position geography(Game game, std::shared_ptr<const Graph> graph, Vertex start);

  Game game() const { return game_; }
  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  Vertex current() const { return current_; }

  const WeightMap& weights() const { return weights_; }
  Weight weight(Vertex v) const { return weights_.at(v); }
  Weight total_weight() const;

  const Bits& removed_vertices() const { return removed_vertices_; }
  const Bits& removed_edges() const { return removed_edges_; }
  bool vertex_live(Vertex v) const { return game_ != Game::vgeo || !removed_vertices_.test(v); }
  bool edge_live(EdgeId e) const { return game_ != Game::egeo || !removed_edges_.test(e); }

  /// True when nothing has been played yet (no removed vertices / edges).
  bool is_root() const { return removed_vertices_.none() && removed_edges_.none(); }

  /// Same state with the pointer/token placed elsewhere.
  Position with_current(Vertex v) const;

  friend bool operator==(const Position& a, const Position& b);

 private:
  friend Position apply_move(const Position&, const Move&);
  Position() = default;

  Game game_ = Game::nimg_rm;
  std::shared_ptr<const Graph> graph_;
  Vertex current_ = 0;
  WeightMap weights_;
  Bits removed_vertices_;
  Bits removed_edges_;
};

/// Legal moves in canonical order: ascending destination, then ascending k.
std::vector<Move> legal_moves(const Position& p);

/// Throws PositionError when the move is not legal.
Position apply_move(const Position& p, const Move& m);

/// No legal move. Combined with terminal_outcome this covers every
/// game-ending rule: a null pointed heap (nimg-rm), only null or no
/// neighbours (nimg-mr), a sink (vgeo/egeo).
bool is_terminal(const Position& p);

std::string describe(const Move& m, Game game);

}  // namespace mgg
