#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mgg/game.hpp"
#include "mgg/policy.hpp"

namespace mgg {

/// NimG-RM misère position restricted to its positive-weight vertices.
struct PositivePart {
  Position position;
  std::vector<Vertex> original;  // local id -> original id
  std::vector<Vertex> local;     // original id -> local id, or kNoVertex
};

/// Drops every zero-weight vertex. A positive vertex left without
/// neighbours that had some before gets weight 1: in the full game whoever
/// stands there must step onto a null heap and lose, which is exactly the
/// value of a lone single-token heap.
/// Throws std::invalid_argument unless p is an undirected nimg-rm position
/// whose pointed vertex has at least one token.
PositivePart preprocess_positive(const Position& p);

/// T = { u : w(u) >= 2 }.
struct HeavySet {
  std::vector<Vertex> members;
  std::vector<char> flag;
  bool contains(Vertex v) const { return flag.at(v) != 0; }
};

HeavySet heavy_set(const Position& p);

struct PolyResult {
  Outcome outcome;
  std::optional<Policy> policy;  // present iff N and non-terminal
  std::string method;
};

/// The position is outside the solver's class; fall back to search.
struct NotApplicable {
  std::string reason;
};

using PolyAnswer = std::variant<PolyResult, NotApplicable>;

inline bool applicable(const PolyAnswer& a) { return std::holds_alternative<PolyResult>(a); }

/// Misère NimG-RM on a loop-free graph that is bipartite once null heaps are
/// dropped: N iff every maximum matching covers the pointed vertex. The
/// policy empties the current heap and follows one fixed maximum matching.
PolyAnswer solve_bipartite_rm_misere(const Position& p);

/// Misère NimG-RM, loop-free, every (positive) heap exactly 1: identical to
/// normal undirected Vertex Geography on the same graph.
PolyAnswer solve_weight1_rm_misere(const Position& p);

/// Normal Vertex Geography on an undirected graph: N iff every maximum
/// matching of the live graph covers the token.
PolyAnswer solve_vgeo_undirected_normal(const Position& p);

/// Misère NimG-RM with a loop on every vertex. Heaps of two or more are
/// always N; a single-token start reduces to the weight-1 criterion on its
/// component among single-token vertices.
PolyAnswer solve_loops_rm_misere(const Position& p);

/// First applicable polynomial solver for (p, c), or NotApplicable.
PolyAnswer solve_with_matching(const Position& p, Convention c);

}  // namespace mgg
