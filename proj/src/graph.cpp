#include "mgg/graph.hpp"

#include <algorithm>
#include <deque>

namespace mgg {

Graph::Graph(GraphKind kind, std::size_t vertex_count, std::span<const Edge> edges)
    : kind_(kind), adjacency_(vertex_count), in_degree_(vertex_count, 0) {
  if (vertex_count >= kNoVertex) throw GraphError("too many vertices");
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.from >= vertex_count || e.to >= vertex_count) {
      throw GraphError("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                       ") has an endpoint outside [0," + std::to_string(vertex_count) + ")");
    }
    if (kind == GraphKind::undirected && e.from > e.to) std::swap(e.from, e.to);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->from) + "," +
                     std::to_string(dup->to) + ")");
  }

  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[e.from].push_back({e.to, id});
    if (kind == GraphKind::undirected && e.from != e.to) adjacency_[e.to].push_back({e.from, id});
    ++in_degree_[e.to];
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Adjacent& a, const Adjacent& b) { return a.vertex < b.vertex; });
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex from, Vertex to) const {
  if (from >= vertex_count() || to >= vertex_count()) return std::nullopt;
  auto list = neighbours(from);
  auto it = std::lower_bound(list.begin(), list.end(), to,
                             [](const Adjacent& a, Vertex v) { return a.vertex < v; });
  if (it == list.end() || it->vertex != to) return std::nullopt;
  return it->edge;
}

bool Graph::has_any_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.from == e.to; });
}

bool Graph::loops_everywhere() const {
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (!has_loop(v)) return false;
  }
  return true;
}

std::size_t Graph::in_degree(Vertex v) const {
  if (kind_ == GraphKind::undirected) return out_degree(v);
  return in_degree_.at(v);
}

Graph Graph::without_loops() const {
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.from != e.to) kept.push_back(e);
  }
  return Graph(kind_, vertex_count(), kept);
}

std::optional<Bipartition> bipartition(const Graph& g) {
  if (g.directed()) throw std::invalid_argument("bipartition requires an undirected graph");
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> side(g.vertex_count(), kUnset);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (side[root] != kUnset) continue;
    side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (const Adjacent& a : g.neighbours(u)) {
        if (side[a.vertex] == kUnset) {
          side[a.vertex] = static_cast<std::uint8_t>(1 - side[u]);
          queue.push_back(a.vertex);
        } else if (side[a.vertex] == side[u]) {
          return std::nullopt;  // odd cycle, or a loop
        }
      }
    }
  }
  Bipartition b;
  b.side = std::move(side);
  for (Vertex v = 0; v < g.vertex_count(); ++v) (b.side[v] == 0 ? b.left : b.right).push_back(v);
  return b;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> local(g.vertex_count(), kNoVertex);
  for (Vertex v : keep) {
    if (v >= g.vertex_count()) throw std::out_of_range("induced_subgraph: vertex out of range");
    local[v] = 0;
  }
  std::vector<Vertex> original;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (local[v] != kNoVertex) {
      local[v] = static_cast<Vertex>(original.size());
      original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.from] != kNoVertex && local[e.to] != kNoVertex) {
      edges.push_back({local[e.from], local[e.to]});
    }
  }
  return {Graph(g.kind(), original.size(), edges), std::move(original), std::move(local)};
}

std::vector<Vertex> connected_component(const Graph& g, Vertex u) {
  if (g.directed()) throw std::invalid_argument("connected_component requires an undirected graph");
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{u};
  seen.at(u) = 1;
  std::vector<Vertex> out;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (const Adjacent& a : g.neighbours(v)) {
      if (!seen[a.vertex]) {
        seen[a.vertex] = 1;
        stack.push_back(a.vertex);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(GraphKind kind) {
  return kind == GraphKind::directed ? "digraph" : "ugraph";
}

}  // namespace mgg
