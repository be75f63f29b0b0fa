#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgg {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::uint64_t;

/// Token count per vertex, indexed by vertex id.
using WeightMap = std::vector<Weight>;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

enum class GraphKind { undirected, directed };

struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One entry of an adjacency list: the neighbour and the id of the edge
/// leading to it. Undirected edges share one id between both endpoints.
struct Adjacent {
  Vertex vertex = 0;
  EdgeId edge = 0;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input exceeds a fixed encoding or enumeration limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple (di)graph on dense vertex ids 0..n-1. Loops are
/// ordinary edges; parallel edges are rejected.
///
/// Edges are stored in canonical order: undirected edges are normalised to
/// from <= to, and the list is sorted ascending. Edge ids index that list.
/// Adjacency lists are sorted by neighbour id.
class Graph {
 public:
  Graph(GraphKind kind, std::size_t vertex_count, std::span<const Edge> edges);
  Graph(GraphKind kind, std::size_t vertex_count, std::initializer_list<Edge> edges)
      : Graph(kind, vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  GraphKind kind() const { return kind_; }
  bool directed() const { return kind_ == GraphKind::directed; }
  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  /// Out-neighbours (directed) or neighbours (undirected), ascending.
  std::span<const Adjacent> neighbours(Vertex v) const { return adjacency_.at(v); }

  std::optional<EdgeId> find_edge(Vertex from, Vertex to) const;
  bool has_edge(Vertex from, Vertex to) const { return find_edge(from, to).has_value(); }
  bool has_loop(Vertex v) const { return has_edge(v, v); }
  bool has_any_loop() const;
  bool loops_everywhere() const;

  std::size_t out_degree(Vertex v) const { return neighbours(v).size(); }
  std::size_t in_degree(Vertex v) const;

  /// Copy with every loop removed.
  Graph without_loops() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.kind_ == b.kind_ && a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  GraphKind kind_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Adjacent>> adjacency_;
  std::vector<std::size_t> in_degree_;
};

struct Bipartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  /// 0 for left, 1 for right.
  std::vector<std::uint8_t> side;
};

/// Two-colouring by breadth-first search from the lowest vertex of each
/// component (which lands in `left`). Returns nullopt when the graph has an
/// odd cycle or a loop. Throws std::invalid_argument on directed input.
std::optional<Bipartition> bipartition(const Graph& g);

/// Graph restricted to a vertex subset, relabelled densely in ascending
/// order of original id.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> original id
  std::vector<Vertex> local;     // original id -> new id, or kNoVertex
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Vertices reachable from u, ascending. Throws std::invalid_argument on
/// directed input.
std::vector<Vertex> connected_component(const Graph& g, Vertex u);

std::string to_string(GraphKind kind);

}  // namespace mgg
