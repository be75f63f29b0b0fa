#include "mgg/reductions.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace mgg {

std::string_view reduction_name(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::vgeo_dir: return "vgeo-dir";
    case ReductionKind::vgeo_undir: return "vgeo-undir";
    case ReductionKind::egeo_undir: return "egeo-undir";
    case ReductionKind::egeo_dir: return "egeo-dir";
    case ReductionKind::nimg_rm: return "nimg-rm";
    case ReductionKind::nimg_mr: return "nimg-mr";
  }
  return "?";
}

std::optional<ReductionKind> parse_reduction(std::string_view name) {
  for (ReductionKind k : kAllReductions) {
    if (reduction_name(k) == name) return k;
  }
  return std::nullopt;
}

ClaimedIdentity claimed_identity(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::vgeo_dir:
    case ReductionKind::vgeo_undir:
      return {Game::vgeo, Convention::normal, Game::vgeo, Convention::misere};
    case ReductionKind::egeo_undir:
    case ReductionKind::egeo_dir:
      return {Game::egeo, Convention::normal, Game::egeo, Convention::misere};
    case ReductionKind::nimg_rm:
      return {Game::vgeo, Convention::normal, Game::nimg_rm, Convention::misere};
    case ReductionKind::nimg_mr:
      return {Game::nimg_mr, Convention::normal, Game::nimg_mr, Convention::misere};
  }
  throw std::logic_error("unknown reduction");
}

std::optional<GraphKind> source_graph_kind(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::egeo_undir: return GraphKind::undirected;
    case ReductionKind::nimg_mr: return std::nullopt;
    default: return GraphKind::directed;
  }
}

namespace {

std::string vname(Vertex u) { return std::to_string(u); }
std::string arcname(const Edge& e) { return "(" + vname(e.from) + "," + vname(e.to) + ")"; }

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw std::invalid_argument("start vertex out of range");
}

void require_kind(const Graph& g, GraphKind kind, const char* who) {
  if (g.kind() != kind) {
    throw std::invalid_argument(std::string(who) + ": source must be a " + to_string(kind));
  }
}

ReductionOutput geography_pendant(ReductionKind kind, const Graph& g, Vertex v) {
  require_vertex(g, v);
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<NameEntry> names;
  for (Vertex u = 0; u < n; ++u) {
    edges.push_back({u, n + u});
    names.push_back({vname(u) + "_1", u});
    names.push_back({vname(u) + "_2", n + u});
  }
  auto graph = std::make_shared<const Graph>(g.kind(), 2 * std::size_t{n}, edges);
  const ClaimedIdentity claim = claimed_identity(kind);
  return {{Position::geography(claim.target_game, graph, v), claim.target_convention},
          std::move(names),
          claim};
}

}  // namespace

ReductionOutput reduce_vgeo_dir_misere(const Graph& g, Vertex v) {
  require_kind(g, GraphKind::directed, "vgeo-dir");
  if (g.has_any_loop()) throw std::invalid_argument("vgeo-dir: vertex geography source must be loop-free");
  return geography_pendant(ReductionKind::vgeo_dir, g, v);
}

ReductionOutput reduce_egeo_undir_misere(const Graph& g, Vertex v) {
  require_kind(g, GraphKind::undirected, "egeo-undir");
  return geography_pendant(ReductionKind::egeo_undir, g, v);
}

ReductionOutput reduce_egeo_dir_misere(const Graph& g, Vertex v) {
  require_kind(g, GraphKind::directed, "egeo-dir");
  return geography_pendant(ReductionKind::egeo_dir, g, v);
}

ReductionOutput reduce_vgeo_dir_to_undir_misere(const Graph& g, Vertex u) {
  require_kind(g, GraphKind::directed, "vgeo-undir");
  if (g.has_any_loop()) throw std::invalid_argument("vgeo-undir: vertex geography source must be loop-free");
  require_vertex(g, u);
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges;
  std::vector<NameEntry> names;
  for (Vertex x = 0; x < n; ++x) {
    names.push_back({vname(x), x});
    names.push_back({vname(x) + "'", n + x});
    edges.push_back({x, n + x});
  }
  // Gadget edges between subscripts 1..8; 0 stands for the tail, 9 for the head.
  static constexpr std::array<std::pair<int, int>, 13> kGadget = {{
      {0, 1}, {1, 2}, {1, 3}, {1, 6}, {2, 4}, {3, 5}, {3, 6},
      {4, 5}, {4, 6}, {5, 6}, {6, 7}, {7, 8}, {7, 9},
  }};
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& arc = g.edge(i);
    const Vertex first = 2 * n + 8 * i;
    auto id = [&](int sub) -> Vertex {
      if (sub == 0) return arc.from;
      if (sub == 9) return arc.to;
      return first + static_cast<Vertex>(sub - 1);
    };
    for (int sub = 1; sub <= 8; ++sub) names.push_back({arcname(arc) + "_" + std::to_string(sub), id(sub)});
    for (auto [a, b] : kGadget) edges.push_back({id(a), id(b)});
  }
  auto graph = std::make_shared<const Graph>(GraphKind::undirected, 2 * std::size_t{n} + 8 * g.edge_count(), edges);
  const ClaimedIdentity claim = claimed_identity(ReductionKind::vgeo_undir);
  return {{Position::geography(Game::vgeo, graph, u), Convention::misere}, std::move(names), claim};
}

ReductionOutput reduce_vgeo_dir_to_nimgrm_misere(const Graph& g, Vertex u) {
  require_kind(g, GraphKind::directed, "nimg-rm");
  if (g.has_any_loop()) throw std::invalid_argument("nimg-rm: vertex geography source must be loop-free");
  require_vertex(g, u);
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  const std::size_t total = n + 4 * g.edge_count();
  WeightMap weights(total, 1);
  std::vector<Edge> edges;
  std::vector<NameEntry> names;
  for (Vertex x = 0; x < n; ++x) names.push_back({"X_" + vname(x), x});
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& arc = g.edge(i);
    const Vertex a = n + 4 * i, b = a + 1, c = a + 2, d = a + 3;
    weights[d] = 2;
    const std::string tag = "_" + arcname(arc);
    names.push_back({"a" + tag, a});
    names.push_back({"b" + tag, b});
    names.push_back({"c" + tag, c});
    names.push_back({"d" + tag, d});
    edges.insert(edges.end(), {{arc.from, a}, {a, b}, {b, c}, {b, d}, {c, d}, {d, arc.to}});
  }
  auto graph = std::make_shared<const Graph>(GraphKind::undirected, total, edges);
  const ClaimedIdentity claim = claimed_identity(ReductionKind::nimg_rm);
  return {{Position::nimg(Game::nimg_rm, graph, std::move(weights), u), Convention::misere},
          std::move(names),
          claim};
}

ReductionOutput reduce_nimgmr_normal_to_misere(const Graph& g, const WeightMap& w, Vertex u) {
  require_vertex(g, u);
  if (w.size() != g.vertex_count()) throw std::invalid_argument("nimg-mr: weight map size mismatch");
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  WeightMap weights(4 * std::size_t{n}, 1);
  std::copy(w.begin(), w.end(), weights.begin());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<NameEntry> names;
  auto link = [&](Vertex a, Vertex b) {
    edges.push_back({a, b});
    if (g.directed()) edges.push_back({b, a});
  };
  for (Vertex x = 0; x < n; ++x) {
    const Vertex c1 = n + 3 * x, c2 = c1 + 1, c3 = c1 + 2;
    names.push_back({vname(x), x});
    names.push_back({"c1_" + vname(x), c1});
    names.push_back({"c2_" + vname(x), c2});
    names.push_back({"c3_" + vname(x), c3});
    link(x, c1);
    link(c1, c2);
    link(c2, c3);
  }
  auto graph = std::make_shared<const Graph>(g.kind(), 4 * std::size_t{n}, edges);
  const ClaimedIdentity claim = claimed_identity(ReductionKind::nimg_mr);
  return {{Position::nimg(Game::nimg_mr, graph, std::move(weights), u), Convention::misere},
          std::move(names),
          claim};
}

ReductionOutput reduce(ReductionKind kind, const Position& source) {
  const ClaimedIdentity claim = claimed_identity(kind);
  if (source.game() != claim.source_game) {
    throw std::invalid_argument(std::string(reduction_name(kind)) + ": source must be a " +
                                to_string(claim.source_game) + " position");
  }
  if (!source.is_root()) throw std::invalid_argument("reductions apply to root positions only");
  const Graph& g = source.graph();
  const Vertex s = source.current();
  switch (kind) {
    case ReductionKind::vgeo_dir: return reduce_vgeo_dir_misere(g, s);
    case ReductionKind::vgeo_undir: return reduce_vgeo_dir_to_undir_misere(g, s);
    case ReductionKind::egeo_undir: return reduce_egeo_undir_misere(g, s);
    case ReductionKind::egeo_dir: return reduce_egeo_dir_misere(g, s);
    case ReductionKind::nimg_rm: return reduce_vgeo_dir_to_nimgrm_misere(g, s);
    case ReductionKind::nimg_mr: return reduce_nimgmr_normal_to_misere(g, source.weights(), s);
  }
  throw std::logic_error("unknown reduction");
}

namespace {

class Checker {
 public:
  template <typename A, typename B>
  void equal(const char* what, const A& actual, const B& expected) {
    if (!(actual == expected)) {
      std::ostringstream msg;
      msg << what << ": got " << actual << ", expected " << expected;
      violations.push_back(msg.str());
    }
  }
  template <typename A, typename B>
  void at_most(const char* what, const A& actual, const B& bound) {
    if (actual > bound) {
      std::ostringstream msg;
      msg << what << ": " << actual << " exceeds " << bound;
      violations.push_back(msg.str());
    }
  }
  void holds(const char* what, bool ok) {
    if (!ok) violations.emplace_back(what);
  }
  std::vector<std::string> violations;
};

std::size_t total_degree(const Graph& g, Vertex v) {
  return g.directed() ? g.in_degree(v) + g.out_degree(v) : g.out_degree(v);
}

std::size_t max_over(const Graph& g, auto&& f) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max<std::size_t>(best, f(v));
  return best;
}

}  // namespace

std::vector<std::string> bookkeeping_violations(ReductionKind kind, const Position& source,
                                                const ReductionOutput& out) {
  Checker check;
  const Graph& g = source.graph();
  const Graph& t = out.target.position.graph();
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();

  const ClaimedIdentity claim = claimed_identity(kind);
  check.holds("target game", out.target.position.game() == claim.target_game);
  check.holds("target convention", out.target.convention == claim.target_convention);
  check.holds("target position is a root", out.target.position.is_root());

  // name map must be total and point at distinct, in-range vertices
  std::vector<char> named(t.vertex_count(), 0);
  for (const NameEntry& e : out.name_map) {
    if (e.target >= t.vertex_count() || named[e.target]) {
      check.holds("name map entries are distinct and in range", false);
      break;
    }
    named[e.target] = 1;
  }
  check.equal("name map size", out.name_map.size(), t.vertex_count());

  switch (kind) {
    case ReductionKind::vgeo_dir:
    case ReductionKind::egeo_dir: {
      check.holds("target is directed", t.directed());
      check.equal("|V'|", t.vertex_count(), 2 * n);
      check.equal("|A'|", t.edge_count(), m + n);
      check.equal("start", out.target.position.current(), source.current());
      const std::size_t max_out = max_over(g, [&](Vertex v) { return g.out_degree(v); });
      check.equal("max out-degree", max_over(t, [&](Vertex v) { return t.out_degree(v); }), max_out + 1);
      for (Vertex u = 0; u < n; ++u) {
        const Vertex added = static_cast<Vertex>(n + u);
        check.equal("added vertex total degree", total_degree(t, added), std::size_t{1});
        check.equal("original out-degree grows by one", t.out_degree(u), g.out_degree(u) + 1);
        check.equal("original in-degree unchanged", t.in_degree(u), g.in_degree(u));
      }
      break;
    }
    case ReductionKind::egeo_undir: {
      check.holds("target is undirected", !t.directed());
      check.equal("|V'|", t.vertex_count(), 2 * n);
      check.equal("|E'|", t.edge_count(), m + n);
      check.equal("start", out.target.position.current(), source.current());
      for (Vertex u = 0; u < n; ++u) {
        check.equal("added vertex degree", t.out_degree(static_cast<Vertex>(n + u)), std::size_t{1});
        check.equal("original degree grows by one", t.out_degree(u), g.out_degree(u) + 1);
      }
      break;
    }
    case ReductionKind::vgeo_undir: {
      check.holds("target is undirected", !t.directed());
      check.equal("|V'|", t.vertex_count(), 2 * n + 8 * m);
      check.equal("|E'|", t.edge_count(), 13 * m + n);
      check.holds("target is loop-free", !t.has_any_loop());
      check.equal("start", out.target.position.current(), source.current());
      const std::size_t delta = max_over(g, [&](Vertex v) { return total_degree(g, v); });
      for (Vertex u = 0; u < n; ++u) {
        check.equal("original degree grows by one", t.out_degree(u), total_degree(g, u) + 1);
        check.equal("pendant degree", t.out_degree(static_cast<Vertex>(n + u)), std::size_t{1});
      }
      for (Vertex x = static_cast<Vertex>(2 * n); x < t.vertex_count(); ++x) {
        check.at_most("gadget vertex degree", t.out_degree(x), std::size_t{5});
      }
      check.at_most("max degree", max_over(t, [&](Vertex v) { return t.out_degree(v); }),
                    std::max<std::size_t>(delta + 1, 5));
      break;
    }
    case ReductionKind::nimg_rm: {
      const Position& tp = out.target.position;
      check.holds("target is undirected", !t.directed());
      check.holds("target is loop-free", !t.has_any_loop());
      check.equal("|V'|", t.vertex_count(), n + 4 * m);
      check.equal("|E'|", t.edge_count(), 6 * m);
      check.equal("start", tp.current(), source.current());
      check.at_most("max weight", *std::max_element(tp.weights().begin(), tp.weights().end()), Weight{2});
      for (Vertex u = 0; u < n; ++u) {
        check.equal("X_u weight", tp.weight(u), Weight{1});
        check.equal("X_u degree equals source degree", t.out_degree(u), total_degree(g, u));
      }
      for (Vertex x = static_cast<Vertex>(n); x < t.vertex_count(); ++x) {
        check.at_most("gadget vertex degree", t.out_degree(x), std::size_t{3});
        const bool is_d = (x - n) % 4 == 3;
        check.equal("gadget weight", tp.weight(x), Weight{is_d ? 2u : 1u});
      }
      break;
    }
    case ReductionKind::nimg_mr: {
      const Position& tp = out.target.position;
      const std::size_t chain_edges = g.directed() ? 6 * n : 3 * n;
      check.equal("|V'|", t.vertex_count(), 4 * n);
      check.equal("|E'|", t.edge_count(), m + chain_edges);
      check.equal("start", tp.current(), source.current());
      for (Vertex u = 0; u < n; ++u) {
        check.equal("original weight kept", tp.weight(u), source.weight(u));
        check.equal("loop kept", t.has_loop(u), g.has_loop(u));
        check.equal("original out-degree grows by one", t.out_degree(u), g.out_degree(u) + 1);
      }
      for (Vertex x = static_cast<Vertex>(n); x < t.vertex_count(); ++x) {
        check.equal("chain weight", tp.weight(x), Weight{1});
      }
      break;
    }
  }
  return check.violations;
}

std::string format_name_map(const std::vector<NameEntry>& names) {
  std::string out;
  for (const NameEntry& e : names) out += e.source_entity + " -> " + std::to_string(e.target) + "\n";
  return out;
}

}  // namespace mgg
