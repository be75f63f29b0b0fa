#include "mgg/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace mgg {

void Matching::match(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("cannot match a vertex with itself");
  if (mate_.at(u) != kNoVertex || mate_.at(v) != kNoVertex) {
    throw std::invalid_argument("vertex already matched");
  }
  mate_[u] = v;
  mate_[v] = u;
  ++size_;
}

bool Matching::valid_for(const Graph& g) const {
  if (mate_.size() != g.vertex_count()) return false;
  std::size_t covered = 0;
  for (Vertex u = 0; u < mate_.size(); ++u) {
    Vertex v = mate_[u];
    if (v == kNoVertex) continue;
    if (v >= mate_.size() || v == u || mate_[v] != u || !g.has_edge(u, v)) return false;
    ++covered;
  }
  return covered == 2 * size_;
}

class MatchingBuilder {
 public:
  static Matching from_mates(std::vector<Vertex> mates) {
    Matching m(0);
    m.mate_ = std::move(mates);
    std::size_t covered = 0;
    for (Vertex v : m.mate_) covered += v != kNoVertex;
    m.size_ = covered / 2;
    return m;
  }
};

Matching max_matching_bipartite(const Graph& g, const Bipartition& b, HopcroftKarpStats* stats) {
  if (g.directed()) throw std::invalid_argument("max_matching_bipartite: directed graph");
  const std::size_t n = g.vertex_count();
  if (b.side.size() != n) throw std::invalid_argument("max_matching_bipartite: bipartition size mismatch");
  for (const Edge& e : g.edges()) {
    if (e.from != e.to && b.side[e.from] == b.side[e.to]) {
      throw std::invalid_argument("max_matching_bipartite: edge inside one side of the bipartition");
    }
  }

  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<Vertex> mate(n, kNoVertex);
  std::vector<std::size_t> dist(n, kInf);
  std::vector<std::size_t> cursor(n, 0);
  std::size_t phases = 0;

  // Layer left vertices from the free ones; true iff some free right vertex
  // is reachable along alternating paths.
  auto layer = [&]() {
    std::deque<Vertex> queue;
    for (Vertex u : b.left) {
      if (mate[u] == kNoVertex) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (const Adjacent& a : g.neighbours(u)) {
        if (a.vertex == u) continue;
        Vertex w = mate[a.vertex];
        if (w == kNoVertex) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  };

  // Iterative DFS along the layering from a free left vertex.
  std::vector<Vertex> path;
  auto augment_from = [&](Vertex root) {
    path.assign(1, root);
    while (!path.empty()) {
      Vertex u = path.back();
      auto nbrs = g.neighbours(u);
      bool advanced = false;
      while (cursor[u] < nbrs.size()) {
        Vertex v = nbrs[cursor[u]].vertex;
        if (v == u) {
          ++cursor[u];
          continue;
        }
        Vertex w = mate[v];
        if (w == kNoVertex) {
          // path holds left vertices l0..lk; flip l_k - v, then backwards.
          Vertex right = v;
          for (std::size_t i = path.size(); i-- > 0;) {
            Vertex left = path[i];
            Vertex prev_right = mate[left];
            mate[left] = right;
            mate[right] = left;
            right = prev_right;
          }
          return true;
        }
        if (dist[w] == dist[u] + 1) {
          path.push_back(w);
          advanced = true;
          break;
        }
        ++cursor[u];
      }
      if (advanced) continue;
      dist[u] = kInf;  // dead end for the rest of this phase
      path.pop_back();
      if (!path.empty()) ++cursor[path.back()];
    }
    return false;
  };

  while (true) {
    ++phases;
    if (!layer()) break;
    std::fill(cursor.begin(), cursor.end(), 0);
    for (Vertex u : b.left) {
      if (mate[u] == kNoVertex) augment_from(u);
    }
  }
  if (stats) stats->phases = phases;
  return MatchingBuilder::from_mates(std::move(mate));
}

Matching max_matching_general(const Graph& g) {
  if (g.directed()) throw std::invalid_argument("max_matching_general: directed graph");
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> mate(n, kNoVertex), parent(n), base(n);
  std::vector<char> in_tree(n), in_blossom(n), on_path(n);
  std::deque<Vertex> queue;

  auto lowest_common_base = [&](Vertex a, Vertex b) {
    std::fill(on_path.begin(), on_path.end(), 0);
    while (true) {
      a = base[a];
      on_path[a] = 1;
      if (mate[a] == kNoVertex) break;
      a = parent[mate[a]];
    }
    while (true) {
      b = base[b];
      if (on_path[b]) return b;
      b = parent[mate[b]];
    }
  };

  auto mark_path = [&](Vertex v, Vertex b, Vertex child) {
    while (base[v] != b) {
      in_blossom[base[v]] = in_blossom[base[mate[v]]] = 1;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  };

  // BFS alternating tree from root; returns the free vertex reached, or kNoVertex.
  auto find_path = [&](Vertex root) {
    std::fill(in_tree.begin(), in_tree.end(), 0);
    std::fill(parent.begin(), parent.end(), kNoVertex);
    for (Vertex i = 0; i < n; ++i) base[i] = i;
    in_tree[root] = 1;
    queue.assign(1, root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (const Adjacent& a : g.neighbours(v)) {
        Vertex to = a.vertex;
        if (to == v || base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] != kNoVertex && parent[mate[to]] != kNoVertex)) {
          Vertex cur_base = lowest_common_base(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (Vertex i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = cur_base;
              if (!in_tree[i]) {
                in_tree[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] == kNoVertex) {
          parent[to] = v;
          if (mate[to] == kNoVertex) return to;
          in_tree[mate[to]] = 1;
          queue.push_back(mate[to]);
        }
      }
    }
    return kNoVertex;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (mate[root] != kNoVertex) continue;
    Vertex v = find_path(root);
    while (v != kNoVertex) {
      Vertex pv = parent[v];
      Vertex ppv = mate[pv];
      mate[v] = pv;
      mate[pv] = v;
      v = ppv;
    }
  }
  return MatchingBuilder::from_mates(std::move(mate));
}

Matching max_matching(const Graph& g) {
  Graph simple = g.has_any_loop() ? g.without_loops() : g;
  if (auto b = bipartition(simple)) return max_matching_bipartite(simple, *b);
  return max_matching_general(simple);
}

namespace {

Graph without_vertex(const Graph& g, Vertex u) {
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (e.from != u && e.to != u) kept.push_back(e);
  }
  return Graph(g.kind(), g.vertex_count(), kept);
}

}  // namespace

bool covered_by_all_maximum_matchings(const Graph& g, Vertex u) {
  return maximum_matching_covering(g, u).has_value();
}

std::optional<Matching> maximum_matching_covering(const Graph& g, Vertex u) {
  if (u >= g.vertex_count()) throw std::out_of_range("vertex out of range");
  Matching full = max_matching(g);
  // u stays as an isolated vertex so ids line up; that does not change nu.
  const std::size_t without = max_matching(without_vertex(g, u)).size();
  if (without < full.size()) return full;
  return std::nullopt;
}

namespace {

void best_matching(const std::vector<Edge>& edges, std::size_t i, std::vector<char>& used,
                   std::size_t current, std::size_t& best) {
  if (current + (edges.size() - i) <= best) return;
  if (i == edges.size()) {
    best = std::max(best, current);
    return;
  }
  const Edge& e = edges[i];
  if (!used[e.from] && !used[e.to]) {
    used[e.from] = used[e.to] = 1;
    best_matching(edges, i + 1, used, current + 1, best);
    used[e.from] = used[e.to] = 0;
  }
  best_matching(edges, i + 1, used, current, best);
}

}  // namespace

std::size_t brute_force_matching_size(const Graph& g) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.from != e.to) edges.push_back(e);
  }
  if (edges.size() > kBruteForceEdgeCap) {
    throw CapacityError("brute_force_matching_size: more than " +
                            std::to_string(kBruteForceEdgeCap) + " edges");
  }
  std::vector<char> used(g.vertex_count(), 0);
  std::size_t best = 0;
  best_matching(edges, 0, used, 0, best);
  return best;
}

}  // namespace mgg
