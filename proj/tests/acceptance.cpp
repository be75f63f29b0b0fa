// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mgg/arena.hpp"
#include "mgg/matching.hpp"
#include "mgg/poly_solvers.hpp"

using namespace mgg;

namespace {

constexpr std::uint64_t kMaster = 20240607;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally {
  std::size_t total = 0, agree = 0, disagree = 0, indeterminate = 0, n_count = 0;
  std::vector<std::string> failures;  // first few, for the report

  void fail(std::string what) {
    if (failures.size() < 5) failures.push_back(std::move(what));
  }
  void add(const Tally& o) {
    total += o.total;
    agree += o.agree;
    disagree += o.disagree;
    indeterminate += o.indeterminate;
    n_count += o.n_count;
    for (const auto& f : o.failures) fail(f);
  }
};

int failed_criteria = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail,
            const std::vector<std::string>& failures = {}) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " -- " << detail << '\n';
  for (const auto& f : failures) std::cout << "    " << f << '\n';
  std::cout.flush();
  if (!pass) ++failed_criteria;
}

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// ---- graph enumeration -----------------------------------------------------

std::vector<Edge> pairs(std::size_t n) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) out.push_back({u, v});
  return out;
}

// Connected bipartite graphs on n vertices, one per isomorphism class.
std::vector<Graph> connected_bipartite_classes(std::size_t n) {
  const std::vector<Edge> all = pairs(n);
  std::vector<std::uint32_t> index(n * n);
  for (std::uint32_t i = 0; i < all.size(); ++i) {
    index[all[i].from * n + all[i].to] = index[all[i].to * n + all[i].from] = i;
  }
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> canon;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) edges.push_back(all[i]);
    Graph g(GraphKind::undirected, n, edges);
    if (connected_component(g, 0).size() != n || !bipartition(g)) continue;
    std::uint32_t best = ~0u;
    for (const auto& p : perms) {
      std::uint32_t m = 0;
      for (const Edge& e : edges) m |= 1u << index[p[e.from] * n + p[e.to]];
      best = std::min(best, m);
    }
    if (canon.insert(best).second) out.push_back(std::move(g));
  }
  return out;
}

// ---- poly solver criteria --------------------------------------------------

struct SolverTrial {
  Tally tally;
  std::size_t certified = 0, certify_total = 0;
  std::vector<std::string> certify_failures;
};

// Compares a poly answer with exhaustive search; certifies N policies.
SolverTrial judge(const std::string& label, const Position& p, const PolyAnswer& answer) {
  SolverTrial t;
  t.tally.total = 1;
  SolveReport exact = solve(p, Convention::misere);
  if (!applicable(answer)) {
    ++t.tally.disagree;
    t.tally.fail(label + ": solver reported not applicable: " + std::get<NotApplicable>(answer).reason);
    return t;
  }
  const PolyResult& r = std::get<PolyResult>(answer);
  if (!exact.outcome) {
    ++t.tally.indeterminate;
    return t;
  }
  if (r.outcome == *exact.outcome) {
    ++t.tally.agree;
  } else {
    ++t.tally.disagree;
    t.tally.fail(label + ": solver " + to_string(r.outcome) + ", exhaustive " + to_string(*exact.outcome));
  }
  if (r.outcome == Outcome::N && !is_terminal(p)) {
    ++t.tally.n_count;
    ++t.certify_total;
    StrategyVerdict v = r.policy ? verify_strategy(p, Convention::misere, *r.policy) : StrategyVerdict::refuted;
    if (v == StrategyVerdict::verified) {
      ++t.certified;
    } else if (t.certify_failures.size() < 5) {
      t.certify_failures.push_back(label + ": policy " + to_string(v));
    }
  }
  return t;
}

std::string describe_position(const Position& p) {
  std::ostringstream out;
  out << "n=" << p.graph().vertex_count() << " edges=[";
  for (const Edge& e : p.graph().edges()) out << e.from << "-" << e.to << " ";
  out << "] w=[";
  for (Weight w : p.weights()) out << w << " ";
  out << "] start=" << p.current();
  return out.str();
}

struct Certification {
  std::size_t certified = 0, total = 0;
  std::vector<std::string> failures;
  void add(const SolverTrial& t) {
    certified += t.certified;
    total += t.certify_total;
    for (const auto& f : t.certify_failures)
      if (failures.size() < 5) failures.push_back(f);
  }
};

Certification certification;

std::string tally_line(const Tally& t) {
  std::ostringstream out;
  out << t.agree << "/" << t.total << " agree, " << t.disagree << " disagree";
  if (t.indeterminate) out << ", " << t.indeterminate << " indeterminate";
  return out.str();
}

void criterion_bipartite() {
  auto t0 = Clock::now();
  std::vector<Position> cases;
  std::size_t classes = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_bipartite_classes(n)) {
      ++classes;
      auto gp = std::make_shared<const Graph>(g);
      for (std::uint32_t wmask = 0; wmask < (1u << n); ++wmask) {
        WeightMap w(n);
        for (Vertex v = 0; v < n; ++v) w[v] = 1 + (wmask >> v & 1);
        for (Vertex s = 0; s < n; ++s) cases.push_back(Position::nimg(Game::nimg_rm, gp, w, s));
      }
    }
  }
  auto results = run_trials(cases.size(), default_thread_count(), [&](std::size_t i) {
    return judge(describe_position(cases[i]), cases[i], solve_bipartite_rm_misere(cases[i]));
  });
  Tally tally;
  for (const auto& r : results) {
    tally.add(r.tally);
    certification.add(r);
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << classes << " graph classes, " << tally_line(tally) << " (" << tally.n_count << " N), " << fmt_secs(secs);
  report(1, "bipartite misere NimG-RM, all connected bipartite graphs n<=6, weights in {1,2}, every start",
         tally.disagree == 0 && tally.indeterminate == 0 && secs < 120, d.str(), tally.failures);
}

void criterion_weight1() {
  auto t0 = Clock::now();
  const std::size_t count = 2000;
  struct R {
    SolverTrial trial;
    bool same_as_vgeo;
    bool bipartite;
    std::string label;
  };
  auto results = run_trials(count, default_thread_count(), [&](std::size_t i) {
    const std::uint64_t seed = trial_seed(kMaster + 2, i);
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(8);
    const std::size_t m = rng.below(n * (n - 1) / 2 + 1);
    Position p = random_instance(Game::nimg_rm, GraphKind::undirected, n, m, 1, LoopMode::none, seed);
    PolyAnswer a = solve_weight1_rm_misere(p);
    PolyAnswer v = solve_vgeo_undirected_normal(Position::geography(Game::vgeo, p.graph_ptr(), p.current()));
    const std::string label = describe_position(p);
    bool same = applicable(a) && applicable(v) &&
                std::get<PolyResult>(a).outcome == std::get<PolyResult>(v).outcome;
    return R{judge(label, p, a), same, bipartition(p.graph()).has_value(), label};
  });
  Tally tally;
  std::size_t same = 0, odd = 0;
  std::vector<std::string> failures;
  for (const auto& r : results) {
    tally.add(r.trial.tally);
    certification.add(r.trial);
    same += r.same_as_vgeo;
    odd += !r.bipartite;
    if (!r.same_as_vgeo && failures.size() < 5) failures.push_back(r.label + ": differs from vgeo solver");
  }
  for (const auto& f : tally.failures) failures.push_back(f);
  std::ostringstream d;
  d << tally_line(tally) << " (" << tally.n_count << " N, " << odd << " with odd cycles), " << same << "/"
    << count << " identical to vertex geography solver, " << fmt_secs(seconds_since(t0));
  report(2, "weight-1 misere NimG-RM on general graphs, n<=8",
         tally.disagree == 0 && tally.indeterminate == 0 && same == count, d.str(), failures);
}

void criterion_loops() {
  auto t0 = Clock::now();
  const std::size_t count = 1000;
  auto results = run_trials(count, default_thread_count(), [&](std::size_t i) {
    const std::uint64_t seed = trial_seed(kMaster + 3, i);
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(6);
    const std::size_t m = rng.below(n * (n - 1) / 2 + 1);
    Position p = random_instance(Game::nimg_rm, GraphKind::undirected, n, m, 3, LoopMode::all, seed);
    return judge(describe_position(p), p, solve_loops_rm_misere(p));
  });
  Tally tally;
  for (const auto& r : results) {
    tally.add(r.tally);
    certification.add(r);
  }
  std::ostringstream d;
  d << tally_line(tally) << " (" << tally.n_count << " N), " << fmt_secs(seconds_since(t0));
  report(3, "misere NimG-RM with a loop on every vertex, n<=6, weights<=3",
         tally.disagree == 0 && tally.indeterminate == 0, d.str(), tally.failures);
}

// ---- reduction criteria ----------------------------------------------------

struct ReductionTrial {
  Tally tally;
  std::vector<std::string> bookkeeping;
  Weight max_weight = 0;
  bool loop_free = true;
};

struct BookkeepingLog {
  std::size_t outputs = 0, violations = 0;
  std::vector<std::string> failures;
};

BookkeepingLog bookkeeping_log;

ReductionTrial run_reduction(ReductionKind kind, const Position& src, std::uint64_t seed) {
  ReductionTrial t;
  TrialReport r = check_reduction(kind, src, kDefaultBudget);
  r.seed = seed;
  t.tally.total = 1;
  if (r.agree) {
    if (*r.agree) {
      ++t.tally.agree;
    } else {
      ++t.tally.disagree;
      t.tally.fail(format_trial(r) + " " + describe_position(src));
    }
  } else {
    ++t.tally.indeterminate;
  }
  if (r.source == Outcome::N) ++t.tally.n_count;
  t.bookkeeping = r.bookkeeping;
  if (kind == ReductionKind::nimg_rm) {
    ReductionOutput out = reduce(kind, src);
    const auto& w = out.target.position.weights();
    t.max_weight = *std::max_element(w.begin(), w.end());
    t.loop_free = !out.target.position.graph().has_any_loop();
  }
  return t;
}

struct ReductionSummary {
  Tally tally;
  std::size_t bookkeeping_bad = 0;
  Weight max_weight = 0;
  bool loop_free = true;
  double secs = 0;
};

// Random sources for a reduction; `shape` picks (n, m, weight bound, loops, kind) per trial.
template <typename Shape>
ReductionSummary run_reduction_suite(ReductionKind kind, std::size_t count, std::uint64_t salt, Shape shape) {
  auto t0 = Clock::now();
  const Game game = claimed_identity(kind).source_game;
  std::vector<std::pair<Position, std::uint64_t>> sources;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = trial_seed(kMaster + salt, i);
    Rng rng(seed);
    auto [n, m, wmax, loops, gkind] = shape(rng);
    sources.emplace_back(random_instance(game, gkind, n, m, wmax, loops, seed), seed);
  }
  auto results = run_trials(sources.size(), default_thread_count(), [&](std::size_t i) {
    return run_reduction(kind, sources[i].first, sources[i].second);
  });
  ReductionSummary s;
  for (const auto& r : results) {
    s.tally.add(r.tally);
    ++bookkeeping_log.outputs;
    if (!r.bookkeeping.empty()) {
      ++s.bookkeeping_bad;
      ++bookkeeping_log.violations;
      if (bookkeeping_log.failures.size() < 5)
        bookkeeping_log.failures.push_back(std::string(reduction_name(kind)) + ": " + r.bookkeeping.front());
    }
    s.max_weight = std::max(s.max_weight, r.max_weight);
    s.loop_free = s.loop_free && r.loop_free;
  }
  s.secs = seconds_since(t0);
  return s;
}

struct Shape {
  std::size_t n, m;
  Weight wmax;
  LoopMode loops;
  GraphKind kind;
};

// n in [1, max_n], m in [0, min(max_m, feasible)]
Shape random_shape(Rng& rng, std::size_t max_n, std::size_t max_m, Weight wmax, LoopMode loops, GraphKind kind) {
  const std::size_t n = 1 + rng.below(max_n);
  const std::size_t cap = std::min(max_m, max_edge_count(kind, n, loops));
  return {n, static_cast<std::size_t>(rng.below(cap + 1)), wmax, loops, kind};
}

std::string summary_line(const ReductionSummary& s, std::size_t sources_per_graph = 1) {
  std::ostringstream d;
  d << tally_line(s.tally) << " (" << s.tally.n_count << " N source outcomes";
  if (sources_per_graph > 1) d << ", " << sources_per_graph << " starts per graph";
  d << "), " << fmt_secs(s.secs);
  return d.str();
}

void criterion_vgeo_dir() {
  // every start of each digraph: expand each random digraph to all its starts
  auto t0 = Clock::now();
  const std::size_t graphs = 1500;
  std::vector<std::pair<Position, std::uint64_t>> sources;
  for (std::size_t i = 0; i < graphs; ++i) {
    const std::uint64_t seed = trial_seed(kMaster + 4, i);
    Rng rng(seed);
    Shape s = random_shape(rng, 6, 10, 1, LoopMode::none, GraphKind::directed);
    Position p = random_instance(Game::vgeo, GraphKind::directed, s.n, s.m, 1, LoopMode::none, seed);
    for (Vertex v = 0; v < s.n; ++v) sources.emplace_back(p.with_current(v), seed);
  }
  auto results = run_trials(sources.size(), default_thread_count(), [&](std::size_t i) {
    return run_reduction(ReductionKind::vgeo_dir, sources[i].first, sources[i].second);
  });
  ReductionSummary s;
  for (const auto& r : results) {
    s.tally.add(r.tally);
    ++bookkeeping_log.outputs;
    if (!r.bookkeeping.empty()) {
      ++bookkeeping_log.violations;
      if (bookkeeping_log.failures.size() < 5) bookkeeping_log.failures.push_back("vgeo-dir: " + r.bookkeeping.front());
    }
  }
  s.secs = seconds_since(t0);
  std::ostringstream d;
  d << graphs << " digraphs, " << sources.size() << " (graph, start) pairs: " << summary_line(s);
  report(4, "reduction vgeo-dir, random digraphs n<=6 m<=10, every start",
         s.tally.disagree == 0 && s.tally.indeterminate == 0, d.str(), s.tally.failures);
}

void criterion_vgeo_undir() {
  ReductionSummary s = run_reduction_suite(ReductionKind::vgeo_undir, 300, 5, [](Rng& rng) {
    return random_shape(rng, 4, 4, 1, LoopMode::none, GraphKind::directed);
  });
  const std::size_t completed = s.tally.agree + s.tally.disagree;
  const bool pass = s.tally.disagree == 0 && completed * 10 >= s.tally.total * 9 && s.secs < 600;
  std::ostringstream d;
  d << summary_line(s) << ", " << completed << "/" << s.tally.total << " completed within 10^7 states";
  report(5, "reduction vgeo-undir, random digraphs n<=4 m<=4", pass, d.str(), s.tally.failures);
}

void criterion_egeo() {
  ReductionSummary dir = run_reduction_suite(ReductionKind::egeo_dir, 1000, 6, [](Rng& rng) {
    return random_shape(rng, 5, 8, 1, LoopMode::free, GraphKind::directed);
  });
  ReductionSummary undir = run_reduction_suite(ReductionKind::egeo_undir, 1000, 7, [](Rng& rng) {
    return random_shape(rng, 5, 8, 1, LoopMode::free, GraphKind::undirected);
  });
  std::vector<std::string> failures = dir.tally.failures;
  failures.insert(failures.end(), undir.tally.failures.begin(), undir.tally.failures.end());
  const bool pass = dir.tally.disagree + undir.tally.disagree + dir.tally.indeterminate + undir.tally.indeterminate == 0;
  report(6, "reductions egeo-dir and egeo-undir, n<=5 m<=8", pass,
         "egeo-dir " + summary_line(dir) + "; egeo-undir " + summary_line(undir), failures);
}

void criterion_nimg_rm() {
  ReductionSummary s = run_reduction_suite(ReductionKind::nimg_rm, 600, 8, [](Rng& rng) {
    return random_shape(rng, 4, 4, 1, LoopMode::none, GraphKind::directed);
  });
  const bool pass = s.tally.disagree == 0 && s.tally.indeterminate == 0 && s.max_weight <= 2 && s.loop_free;
  std::ostringstream d;
  d << summary_line(s) << ", max target weight " << s.max_weight << ", targets "
    << (s.loop_free ? "loop-free" : "have loops");
  report(7, "reduction nimg-rm (arc gadget), random digraphs n<=4 m<=4", pass, d.str(), s.tally.failures);
}

void criterion_nimg_mr() {
  ReductionSummary s = run_reduction_suite(ReductionKind::nimg_mr, 800, 9, [](Rng& rng) {
    const LoopMode loops = rng.below(2) ? LoopMode::free : LoopMode::none;
    const GraphKind kind = rng.below(2) ? GraphKind::directed : GraphKind::undirected;
    return random_shape(rng, 4, 8, 2, loops, kind);
  });
  // also the all-loops flavour
  ReductionSummary all = run_reduction_suite(ReductionKind::nimg_mr, 200, 10, [](Rng& rng) {
    const GraphKind kind = rng.below(2) ? GraphKind::directed : GraphKind::undirected;
    return random_shape(rng, 4, 6, 2, LoopMode::all, kind);
  });
  s.tally.add(all.tally);
  s.secs += all.secs;
  report(8, "reduction nimg-mr (3-chain), weighted graphs n<=4 weights<=2, with and without loops",
         s.tally.disagree == 0 && s.tally.indeterminate == 0, summary_line(s), s.tally.failures);
}

// ---- matching --------------------------------------------------------------

void criterion_matching() {
  auto t0 = Clock::now();
  std::size_t graphs = 0, agree = 0, bipartite = 0;
  std::vector<std::string> failures;
  for (std::size_t i = 0; graphs < 3000; ++i) {
    const std::uint64_t seed = trial_seed(kMaster + 11, i);
    Rng rng(seed);
    Graph g = [&] {
      if (i % 2 == 0) {
        const std::size_t left = 1 + rng.below(6), right = 1 + rng.below(6);
        const std::size_t m = rng.below(std::min<std::size_t>(left * right, 24) + 1);
        return random_bipartite_graph(left, right, m, seed);
      }
      const std::size_t n = 1 + rng.below(10);
      const std::size_t m = rng.below(std::min<std::size_t>(n * (n - 1) / 2, 24) + 1);
      return random_instance(Game::egeo, GraphKind::undirected, n, m, 1, LoopMode::none, seed).graph();
    }();
    ++graphs;
    const std::size_t truth = brute_force_matching_size(g);
    Matching general = max_matching_general(g);
    bool ok = general.valid_for(g) && general.size() == truth;
    if (auto b = bipartition(g)) {
      ++bipartite;
      Matching hk = max_matching_bipartite(g, *b);
      ok = ok && hk.valid_for(g) && hk.size() == truth;
    }
    if (ok) {
      ++agree;
    } else if (failures.size() < 5) {
      failures.push_back("seed " + std::to_string(seed) + ": brute force " + std::to_string(truth));
    }
  }
  const double small_secs = seconds_since(t0);

  const std::size_t n = 20000, m = 100000;
  Graph big = random_bipartite_graph(n / 2, n - n / 2, m, 1);
  auto b = bipartition(big);
  HopcroftKarpStats stats;
  auto t1 = Clock::now();
  Matching mm = max_matching_bipartite(big, *b, &stats);
  const double big_secs = seconds_since(t1);
  const double bound = 2 * std::sqrt(double(n)) + 2;
  const bool pass = agree == graphs && big_secs < 1.0 && stats.phases <= bound && mm.valid_for(big);

  std::ostringstream d;
  d << agree << "/" << graphs << " graphs agree with brute force (" << bipartite << " bipartite), "
    << fmt_secs(small_secs) << "; n=20000 m=100000: size " << mm.size() << ", " << stats.phases
    << " phases (bound " << static_cast<int>(bound) << "), " << big_secs * 1000 << " ms";
  report(10, "matching engine against brute force, and the phase/time bound", pass, d.str(), failures);
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  std::cout << "acceptance suite, master seed " << kMaster << ", " << default_thread_count() << " threads\n";
  criterion_bipartite();
  criterion_weight1();
  criterion_loops();
  criterion_vgeo_dir();
  criterion_vgeo_undir();
  criterion_egeo();
  criterion_nimg_rm();
  criterion_nimg_mr();

  {
    std::ostringstream d;
    d << certification.certified << "/" << certification.total << " N policies from criteria 1-3 verified";
    report(9, "strategy certification against an exhaustive adversary",
           certification.total > 0 && certification.certified == certification.total, d.str(),
           certification.failures);
  }

  criterion_matching();

  {
    std::ostringstream d;
    d << bookkeeping_log.outputs - bookkeeping_log.violations << "/" << bookkeeping_log.outputs
      << " reduction outputs satisfy size and degree bookkeeping";
    report(11, "reduction bookkeeping invariants", bookkeeping_log.violations == 0, d.str(), bookkeeping_log.failures);
  }

  std::cout << (failed_criteria ? "FAILED " : "ALL PASSED ") << "(" << 11 - failed_criteria << "/11), "
            << fmt_secs(seconds_since(t0)) << '\n';
  return failed_criteria ? 1 : 0;
}
