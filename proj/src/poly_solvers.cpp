#include "mgg/poly_solvers.hpp"

#include <memory>
#include <stdexcept>

#include "mgg/matching.hpp"

namespace mgg {

namespace {

bool rm_undirected(const Position& p) {
  return p.game() == Game::nimg_rm && !p.graph().directed();
}

// Mate table in original ids from a matching over relabelled vertices.
std::vector<Vertex> lift_mates(const Matching& m, const std::vector<Vertex>& original,
                               std::size_t original_n) {
  std::vector<Vertex> mates(original_n, kNoVertex);
  for (Vertex v = 0; v < m.vertex_count(); ++v) {
    if (auto w = m.mate(v)) mates[original[v]] = original[*w];
  }
  return mates;
}

// Follows one fixed matching: empty the heap (or just slide, for geography)
// and move to the mate of the current vertex.
Policy matching_policy(std::vector<Vertex> mates) {
  auto table = std::make_shared<const std::vector<Vertex>>(std::move(mates));
  return Policy(Provenance::matching_following, [table](const Position& q) -> std::optional<Move> {
    if (q.current() >= table->size()) return std::nullopt;
    Vertex to = (*table)[q.current()];
    if (to == kNoVertex) return std::nullopt;
    return Move{to, 0};
  });
}

PolyResult terminal_result(Convention c) {
  return {terminal_outcome(c), std::nullopt, "terminal"};
}

// Vertices of the connected component of `start` among single-token
// vertices, loops ignored, as a relabelled graph.
struct LightComponent {
  Graph graph;
  std::vector<Vertex> original;  // component id -> id in the input graph
  Vertex start;
};

LightComponent light_component(const Position& pre) {
  const Graph& g = pre.graph();
  std::vector<Vertex> light;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (pre.weight(v) == 1) light.push_back(v);
  }
  InducedSubgraph lg = induced_subgraph(g.without_loops(), light);
  std::vector<Vertex> comp = connected_component(lg.graph, lg.local[pre.current()]);
  InducedSubgraph cg = induced_subgraph(lg.graph, comp);
  std::vector<Vertex> original(cg.original.size());
  for (Vertex i = 0; i < original.size(); ++i) original[i] = lg.original[cg.original[i]];
  return {std::move(cg.graph), std::move(original), cg.local[lg.local[pre.current()]]};
}

// Outcome of a preprocessed all-loops position.
Outcome loops_outcome_pre(const Position& pre) {
  if (pre.weight(pre.current()) >= 2) return Outcome::N;
  LightComponent c = light_component(pre);
  return covered_by_all_maximum_matchings(c.graph, c.start) ? Outcome::N : Outcome::P;
}

Outcome loops_outcome(const Position& p) {
  if (p.weight(p.current()) == 0) return Outcome::N;
  return loops_outcome_pre(preprocess_positive(p).position);
}

}  // namespace

PositivePart preprocess_positive(const Position& p) {
  if (!rm_undirected(p)) throw std::invalid_argument("preprocess_positive: needs undirected nimg-rm");
  if (p.weight(p.current()) == 0) {
    throw std::invalid_argument("preprocess_positive: pointed heap is empty (terminal position)");
  }
  const Graph& g = p.graph();
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (p.weight(v) > 0) keep.push_back(v);
  }
  InducedSubgraph sub = induced_subgraph(g, keep);
  WeightMap weights(sub.original.size());
  for (Vertex i = 0; i < weights.size(); ++i) {
    const Vertex v = sub.original[i];
    weights[i] = p.weight(v);
    if (sub.graph.neighbours(i).empty() && !g.neighbours(v).empty()) weights[i] = 1;
  }
  auto graph = std::make_shared<const Graph>(std::move(sub.graph));
  Position pos = Position::nimg(Game::nimg_rm, graph, std::move(weights), sub.local[p.current()]);
  return {std::move(pos), std::move(sub.original), std::move(sub.local)};
}

HeavySet heavy_set(const Position& p) {
  HeavySet t;
  t.flag.assign(p.weights().size(), 0);
  for (Vertex v = 0; v < p.weights().size(); ++v) {
    if (p.weight(v) >= 2) {
      t.flag[v] = 1;
      t.members.push_back(v);
    }
  }
  return t;
}

PolyAnswer solve_bipartite_rm_misere(const Position& p) {
  if (!rm_undirected(p)) return NotApplicable{"needs nimg-rm on an undirected graph"};
  if (p.weight(p.current()) == 0) return terminal_result(Convention::misere);
  PositivePart pp = preprocess_positive(p);
  const Graph& g = pp.position.graph();
  if (g.has_any_loop()) return NotApplicable{"graph has loops"};
  auto b = bipartition(g);
  if (!b) return NotApplicable{"graph is not bipartite"};

  const Vertex s = pp.position.current();
  if (g.neighbours(s).empty()) {
    // Lone heap: players take turns removing from it; whoever faces the
    // empty heap wins, so the mover wins iff at least two tokens remain.
    if (pp.position.weight(s) < 2) return PolyResult{Outcome::P, std::nullopt, "bipartite-matching"};
    Policy stall(Provenance::loop_stalling, [](const Position& q) -> std::optional<Move> {
      if (!q.graph().neighbours(q.current()).empty() || q.weight(q.current()) < 2) return std::nullopt;
      return Move{q.current(), 1};
    });
    return PolyResult{Outcome::N, std::move(stall), "bipartite-matching"};
  }

  // g is bipartite, so both matchings go through the layered algorithm.
  auto m = maximum_matching_covering(g, s);
  if (!m) return PolyResult{Outcome::P, std::nullopt, "bipartite-matching"};
  return PolyResult{Outcome::N,
                    matching_policy(lift_mates(*m, pp.original, p.graph().vertex_count())),
                    "bipartite-matching"};
}

PolyAnswer solve_vgeo_undirected_normal(const Position& p) {
  if (p.game() != Game::vgeo || p.graph().directed()) {
    return NotApplicable{"needs vertex geography on an undirected graph"};
  }
  if (is_terminal(p)) return terminal_result(Convention::normal);
  const Graph& g = p.graph();
  std::vector<Vertex> live;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (p.vertex_live(v)) live.push_back(v);
  }
  InducedSubgraph sub = induced_subgraph(g, live);
  auto m = maximum_matching_covering(sub.graph, sub.local[p.current()]);
  if (!m) return PolyResult{Outcome::P, std::nullopt, "vgeo-matching"};
  return PolyResult{Outcome::N, matching_policy(lift_mates(*m, sub.original, g.vertex_count())),
                    "vgeo-matching"};
}

PolyAnswer solve_weight1_rm_misere(const Position& p) {
  if (!rm_undirected(p)) return NotApplicable{"needs nimg-rm on an undirected graph"};
  if (p.weight(p.current()) == 0) return terminal_result(Convention::misere);
  PositivePart pp = preprocess_positive(p);
  const Position& pre = pp.position;
  if (pre.graph().has_any_loop()) return NotApplicable{"graph has loops"};
  for (Weight w : pre.weights()) {
    if (w != 1) return NotApplicable{"some heap holds more than one token"};
  }
  Position geo = Position::geography(Game::vgeo, pre.graph_ptr(), pre.current());
  PolyAnswer answer = solve_vgeo_undirected_normal(geo);
  auto& r = std::get<PolyResult>(answer);
  if (r.outcome == Outcome::P) return PolyResult{Outcome::P, std::nullopt, "weight1-matching"};
  // Same matching, read back in original ids: emptying a single-token heap
  // is keep = 0, so the vgeo advice maps to (0, mate) directly.
  auto m = maximum_matching_covering(pre.graph(), pre.current());
  return PolyResult{Outcome::N,
                    matching_policy(lift_mates(*m, pp.original, p.graph().vertex_count())),
                    "weight1-matching"};
}

PolyAnswer solve_loops_rm_misere(const Position& p) {
  if (!rm_undirected(p)) return NotApplicable{"needs nimg-rm on an undirected graph"};
  if (p.weight(p.current()) == 0) return terminal_result(Convention::misere);
  PositivePart pp = preprocess_positive(p);
  if (!pp.position.graph().loops_everywhere()) return NotApplicable{"some vertex has no loop"};
  if (loops_outcome_pre(pp.position) == Outcome::P) {
    return PolyResult{Outcome::P, std::nullopt, "loops"};
  }

  // Stateless: the criterion is re-evaluated at every position the policy
  // is asked about.
  Policy policy(Provenance::loop_stalling, [](const Position& q) -> std::optional<Move> {
    const Vertex u = q.current();
    if (q.weight(u) == 0) return std::nullopt;
    PositivePart qp = preprocess_positive(q);
    if (!qp.position.graph().loops_everywhere()) return std::nullopt;
    if (loops_outcome_pre(qp.position) != Outcome::N) return std::nullopt;
    if (q.weight(u) >= 2) {
      for (const Adjacent& a : q.graph().neighbours(u)) {
        if (a.vertex == u) continue;
        if (loops_outcome(apply_move(q, {a.vertex, 0})) == Outcome::P) return Move{a.vertex, 0};
      }
      return Move{u, 1};
    }
    LightComponent c = light_component(qp.position);
    auto m = maximum_matching_covering(c.graph, c.start);
    if (!m) return std::nullopt;
    return Move{qp.original[c.original[*m->mate(c.start)]], 0};
  });
  return PolyResult{Outcome::N, std::move(policy), "loops"};
}

PolyAnswer solve_with_matching(const Position& p, Convention c) {
  if (p.game() == Game::vgeo && c == Convention::normal) return solve_vgeo_undirected_normal(p);
  if (p.game() != Game::nimg_rm || c != Convention::misere) {
    return NotApplicable{"no polynomial solver for " + to_string(p.game()) + " under " + to_string(c)};
  }
  if (p.graph().directed()) return NotApplicable{"no polynomial solver for directed nimg-rm"};
  if (p.weight(p.current()) == 0) return terminal_result(c);
  const PositivePart part = preprocess_positive(p);
  const Graph& g = part.position.graph();
  if (g.loops_everywhere()) return solve_loops_rm_misere(p);
  if (g.has_any_loop()) return NotApplicable{"loops on some but not all vertices"};
  PolyAnswer a = solve_bipartite_rm_misere(p);
  if (applicable(a)) return a;
  a = solve_weight1_rm_misere(p);
  if (applicable(a)) return a;
  return NotApplicable{"misère nimg-rm on a non-bipartite graph with a heap of two or more"};
}

}  // namespace mgg
