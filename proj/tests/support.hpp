#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "mgg/game.hpp"
#include "mgg/graph.hpp"

namespace mgg::test {

inline std::shared_ptr<const Graph> graph(GraphKind kind, std::size_t n, std::vector<Edge> edges) {
  return std::make_shared<const Graph>(kind, n, edges);
}

inline Position rm(std::size_t n, std::vector<Edge> edges, WeightMap w, Vertex start,
                   GraphKind kind = GraphKind::undirected) {
  return Position::nimg(Game::nimg_rm, graph(kind, n, std::move(edges)), std::move(w), start);
}

inline Position mr(std::size_t n, std::vector<Edge> edges, WeightMap w, Vertex start,
                   GraphKind kind = GraphKind::undirected) {
  return Position::nimg(Game::nimg_mr, graph(kind, n, std::move(edges)), std::move(w), start);
}

inline Position geo(Game game, GraphKind kind, std::size_t n, std::vector<Edge> edges, Vertex start) {
  return Position::geography(game, graph(kind, n, std::move(edges)), start);
}

inline std::vector<Edge> cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return e;
}

inline std::vector<Edge> path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return e;
}

// Plain minimax without memo; only for tiny positions.
inline Outcome naive_outcome(const Position& p, Convention c) {
  std::vector<Move> moves = legal_moves(p);
  if (moves.empty()) return terminal_outcome(c);
  for (const Move& m : moves) {
    if (naive_outcome(apply_move(p, m), c) == Outcome::P) return Outcome::N;
  }
  return Outcome::P;
}

// Largest matching by trying every edge subset recursively, optionally
// forbidding one vertex.
inline std::size_t enumerate_matching(const Graph& g, Vertex forbidden = kNoVertex) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.from != e.to && e.from != forbidden && e.to != forbidden) edges.push_back(e);
  }
  std::vector<char> used(g.vertex_count(), 0);
  std::function<std::size_t(std::size_t)> go = [&](std::size_t i) -> std::size_t {
    if (i == edges.size()) return 0;
    std::size_t best = go(i + 1);
    const Edge& e = edges[i];
    if (!used[e.from] && !used[e.to]) {
      used[e.from] = used[e.to] = 1;
      best = std::max(best, 1 + go(i + 1));
      used[e.from] = used[e.to] = 0;
    }
    return best;
  };
  return go(0);
}

inline Graph random_graph(std::mt19937_64& rng, GraphKind kind, std::size_t n, double p, bool loops = false) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = kind == GraphKind::undirected ? u : 0; v < n; ++v) {
      if (u == v && !loops) continue;
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(kind, n, edges);
}

}  // namespace mgg::test
