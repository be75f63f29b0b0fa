#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mgg/graph.hpp"

namespace mgg {

/// Symmetric mate table over an n-vertex graph.
class Matching {
 public:
  explicit Matching(std::size_t n) : mate_(n, kNoVertex) {}

  std::optional<Vertex> mate(Vertex v) const {
    return mate_.at(v) == kNoVertex ? std::nullopt : std::optional<Vertex>(mate_[v]);
  }
  bool covers(Vertex v) const { return mate_.at(v) != kNoVertex; }
  std::size_t size() const { return size_; }
  std::size_t vertex_count() const { return mate_.size(); }
  const std::vector<Vertex>& mates() const { return mate_; }

  void match(Vertex u, Vertex v);

  /// Every pair is symmetric, an edge of g, and size() is consistent.
  bool valid_for(const Graph& g) const;

 private:
  friend class MatchingBuilder;
  std::vector<Vertex> mate_;
  std::size_t size_ = 0;
};

struct HopcroftKarpStats {
  std::size_t phases = 0;  // breadth-first layerings, including the final empty one
};

/// Maximum matching of a bipartite graph by layered shortest augmenting
/// paths: O(sqrt(V)) phases of O(E) each. Loops are ignored. Throws
/// std::invalid_argument if `b` is not a bipartition of g.
Matching max_matching_bipartite(const Graph& g, const Bipartition& b,
                                HopcroftKarpStats* stats = nullptr);

/// Maximum matching of an arbitrary undirected graph by augmenting-path
/// search with blossom contraction. Loops are ignored.
Matching max_matching_general(const Graph& g);

/// Bipartite algorithm when g is bipartite after dropping loops, blossom otherwise.
Matching max_matching(const Graph& g);

/// nu(G - u) < nu(G), i.e. u is covered by every maximum matching.
bool covered_by_all_maximum_matchings(const Graph& g, Vertex u);

/// A maximum matching of g if every maximum matching covers u (so the
/// returned one does too); nullopt otherwise.
std::optional<Matching> maximum_matching_covering(const Graph& g, Vertex u);

inline constexpr std::size_t kBruteForceEdgeCap = 24;

/// Exact nu(G) by enumerating edge subsets (non-matchings pruned).
/// Throws CapacityError above kBruteForceEdgeCap non-loop edges.
std::size_t brute_force_matching_size(const Graph& g);

}  // namespace mgg
