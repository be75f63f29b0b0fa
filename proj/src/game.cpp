#include "mgg/game.hpp"

#include <bit>
#include <numeric>

namespace mgg {

std::string to_string(Game game) {
  switch (game) {
    case Game::nimg_rm: return "nimg-rm";
    case Game::nimg_mr: return "nimg-mr";
    case Game::vgeo: return "vgeo";
    case Game::egeo: return "egeo";
  }
  return "?";
}

std::string to_string(Convention c) { return c == Convention::normal ? "normal" : "misere"; }
std::string to_string(Outcome o) { return o == Outcome::N ? "N" : "P"; }

std::size_t Bits::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

Position Position::nimg(Game game, std::shared_ptr<const Graph> graph, WeightMap weights,
                        Vertex start) {
  if (!is_nimg(game)) throw PositionError("Position::nimg called for " + to_string(game));
  if (!graph) throw PositionError("null graph");
  if (weights.size() != graph->vertex_count()) {
    throw PositionError("weight map has " + std::to_string(weights.size()) + " entries for " +
                        std::to_string(graph->vertex_count()) + " vertices");
  }
  if (start >= graph->vertex_count()) throw PositionError("start vertex out of range");
  Position p;
  p.game_ = game;
  p.graph_ = std::move(graph);
  p.weights_ = std::move(weights);
  p.current_ = start;
  return p;
}

Position Position::geography(Game game, std::shared_ptr<const Graph> graph, Vertex start) {
  if (is_nimg(game)) throw PositionError("Position::geography called for " + to_string(game));
  if (!graph) throw PositionError("null graph");
  if (start >= graph->vertex_count()) throw PositionError("start vertex out of range");
  if (game == Game::vgeo && graph->has_any_loop()) {
    throw PositionError("vertex geography graphs must be loop-free");
  }
  Position p;
  p.game_ = game;
  p.graph_ = std::move(graph);
  p.current_ = start;
  if (game == Game::vgeo) p.removed_vertices_ = Bits(p.graph_->vertex_count());
  if (game == Game::egeo) p.removed_edges_ = Bits(p.graph_->edge_count());
  return p;
}

Weight Position::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), Weight{0});
}

Position Position::with_current(Vertex v) const {
  if (v >= graph_->vertex_count()) throw PositionError("vertex out of range");
  if (!vertex_live(v)) throw PositionError("cannot place the token on a removed vertex");
  Position p = *this;
  p.current_ = v;
  return p;
}

bool operator==(const Position& a, const Position& b) {
  return a.game_ == b.game_ && a.current_ == b.current_ && a.weights_ == b.weights_ &&
         a.removed_vertices_ == b.removed_vertices_ && a.removed_edges_ == b.removed_edges_ &&
         (a.graph_ == b.graph_ || *a.graph_ == *b.graph_);
}

std::vector<Move> legal_moves(const Position& p) {
  std::vector<Move> moves;
  const Graph& g = p.graph();
  const Vertex cur = p.current();
  switch (p.game()) {
    case Game::nimg_rm: {
      const Weight w = p.weight(cur);
      if (w == 0) break;
      auto nbrs = g.neighbours(cur);
      if (nbrs.empty()) {
        for (Weight k = 0; k < w; ++k) moves.push_back({cur, k});
        break;
      }
      for (const Adjacent& a : nbrs) {
        for (Weight k = 0; k < w; ++k) moves.push_back({a.vertex, k});
      }
      break;
    }
    case Game::nimg_mr:
      for (const Adjacent& a : g.neighbours(cur)) {
        for (Weight k = 0; k < p.weight(a.vertex); ++k) moves.push_back({a.vertex, k});
      }
      break;
    case Game::vgeo:
      for (const Adjacent& a : g.neighbours(cur)) {
        if (p.vertex_live(a.vertex)) moves.push_back({a.vertex, 0});
      }
      break;
    case Game::egeo:
      for (const Adjacent& a : g.neighbours(cur)) {
        if (p.edge_live(a.edge)) moves.push_back({a.vertex, 0});
      }
      break;
  }
  return moves;
}

bool is_terminal(const Position& p) {
  const Graph& g = p.graph();
  const Vertex cur = p.current();
  switch (p.game()) {
    case Game::nimg_rm:
      return p.weight(cur) == 0;
    case Game::nimg_mr:
      for (const Adjacent& a : g.neighbours(cur)) {
        if (p.weight(a.vertex) > 0) return false;
      }
      return true;
    case Game::vgeo:
      for (const Adjacent& a : g.neighbours(cur)) {
        if (p.vertex_live(a.vertex)) return false;
      }
      return true;
    case Game::egeo:
      for (const Adjacent& a : g.neighbours(cur)) {
        if (p.edge_live(a.edge)) return false;
      }
      return true;
  }
  return true;
}

namespace {

[[noreturn]] void illegal(const Position& p, const Move& m, const char* why) {
  throw PositionError("illegal " + to_string(p.game()) + " move " + describe(m, p.game()) +
                      " from vertex " + std::to_string(p.current()) + ": " + why);
}

}  // namespace

Position apply_move(const Position& p, const Move& m) {
  const Graph& g = p.graph();
  const Vertex cur = p.current();
  Position next = p;
  switch (p.game()) {
    case Game::nimg_rm: {
      if (m.keep >= p.weight(cur)) illegal(p, m, "must remove at least one token");
      const bool stay = g.neighbours(cur).empty() && m.to == cur;
      if (!stay && !g.has_edge(cur, m.to)) illegal(p, m, "destination is not a neighbour");
      next.weights_[cur] = m.keep;
      next.current_ = m.to;
      break;
    }
    case Game::nimg_mr: {
      if (!g.has_edge(cur, m.to)) illegal(p, m, "destination is not a neighbour");
      if (m.keep >= p.weight(m.to)) illegal(p, m, "must remove at least one token");
      next.weights_[m.to] = m.keep;
      next.current_ = m.to;
      break;
    }
    case Game::vgeo: {
      if (m.keep != 0) illegal(p, m, "geography moves carry no weight");
      if (!g.has_edge(cur, m.to) || !p.vertex_live(m.to)) illegal(p, m, "no live arc");
      next.removed_vertices_.set(cur);
      next.current_ = m.to;
      break;
    }
    case Game::egeo: {
      if (m.keep != 0) illegal(p, m, "geography moves carry no weight");
      auto id = g.find_edge(cur, m.to);
      if (!id || !p.edge_live(*id)) illegal(p, m, "no live arc");
      next.removed_edges_.set(*id);
      next.current_ = m.to;
      break;
    }
  }
  return next;
}

std::string describe(const Move& m, Game game) {
  switch (game) {
    case Game::nimg_rm: return "(keep " + std::to_string(m.keep) + ", to " + std::to_string(m.to) + ")";
    case Game::nimg_mr: return "(to " + std::to_string(m.to) + ", keep " + std::to_string(m.keep) + ")";
    default: return "(to " + std::to_string(m.to) + ")";
  }
}

}  // namespace mgg
