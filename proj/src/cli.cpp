#include "mgg/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

#include "mgg/arena.hpp"
#include "mgg/exhaustive.hpp"
#include "mgg/matching.hpp"
#include "mgg/poly_solvers.hpp"
#include "mgg/position_io.hpp"
#include "mgg/reductions.hpp"

namespace mgg {

namespace {

enum class Method { automatic, exhaustive, matching };

struct CommandConfig {
  std::string input;
  std::string output;
  std::string names;
  std::string check;
  Method method = Method::automatic;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::size_t n = 3;
  std::size_t m = 3;
  Weight wmax = 2;
  std::size_t trials = 100;
  std::string loops;
  std::string kind;
  std::string out_dir = "counterexamples";
  unsigned threads = 0;
  bool human_first = true;
};

const std::map<std::string, Method> kMethods = {
    {"auto", Method::automatic}, {"exhaustive", Method::exhaustive}, {"matching", Method::matching}};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::optional<PositionRecord> load(const std::string& path, Io io) {
  try {
    return read_position_file(path);
  } catch (const ParseError& e) {
    io.err << path << ":" << e.line() << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    io.err << path << ": " << e.what() << '\n';
  }
  return std::nullopt;
}

// ---- solve ---------------------------------------------------------------

int cmd_solve(const CommandConfig& cfg, Io io) {
  auto record = load(cfg.input, io);
  if (!record) return kExitInputError;
  const Position& p = record->position;
  const Convention c = record->convention;

  if (cfg.method != Method::exhaustive) {
    PolyAnswer answer = solve_with_matching(p, c);
    if (auto* res = std::get_if<PolyResult>(&answer)) {
      io.out << "outcome " << to_string(res->outcome) << '\n';
      if (res->policy) {
        if (auto m = res->policy->choose(p)) io.out << "move " << describe(*m, p.game()) << '\n';
        io.out << "strategy: " << to_string(res->policy->provenance()) << '\n';
      }
      io.out << "solver " << res->method << '\n' << "states 0\n";
      return kExitOk;
    }
    if (cfg.method == Method::matching) {
      io.err << "method matching not applicable: " << std::get<NotApplicable>(answer).reason << '\n';
      return kExitNotApplicable;
    }
  }

  SolveReport r;
  try {
    r = solve(p, c, cfg.budget);
  } catch (const CapacityError& e) {
    io.err << e.what() << '\n';
    return kExitInputError;
  }
  if (r.budget_exhausted) {
    io.out << "outcome unknown\nsolver exhaustive\nstates " << r.states_expanded << "\nbudget exhausted\n";
    return kExitIndeterminate;
  }
  io.out << "outcome " << to_string(*r.outcome) << '\n';
  if (r.principal_move) io.out << "move " << describe(*r.principal_move, p.game()) << '\n';
  io.out << "solver exhaustive\nstates " << r.states_expanded << '\n';
  return kExitOk;
}

// ---- reduce --------------------------------------------------------------

int cmd_reduce(const CommandConfig& cfg, Io io) {
  auto kind = parse_reduction(cfg.check);
  if (!kind) {
    io.err << "unknown reduction '" << cfg.check << "'\n";
    return kExitInputError;
  }
  auto record = load(cfg.input, io);
  if (!record) return kExitInputError;
  const ClaimedIdentity claim = claimed_identity(*kind);
  if (record->convention != claim.source_convention) {
    io.err << reduction_name(*kind) << " maps " << to_string(claim.source_convention)
           << " positions; input is " << to_string(record->convention) << '\n';
    return kExitInputError;
  }
  std::optional<ReductionOutput> reduced;
  try {
    reduced.emplace(reduce(*kind, record->position));
  } catch (const std::exception& e) {
    io.err << e.what() << '\n';
    return kExitInputError;
  }
  const ReductionOutput& out = *reduced;
  const std::string names = cfg.names.empty() ? cfg.output + ".namemap.txt" : cfg.names;
  try {
    write_position_file(cfg.output, out.target);
    std::ofstream file(names);
    if (!file) throw std::runtime_error("cannot write " + names);
    file << format_name_map(out.name_map);
  } catch (const std::exception& e) {
    io.err << e.what() << '\n';
    return kExitInputError;
  }
  const Graph& t = out.target.position.graph();
  io.out << "wrote " << cfg.output << " (" << t.vertex_count() << " vertices, " << t.edge_count()
         << " edges, start " << out.target.position.current() << "), name map " << names << '\n';
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(const CommandConfig& cfg, Io io) {
  auto reduction = parse_reduction(cfg.check);
  auto solver = parse_solver_check(cfg.check);
  if (!reduction && !solver) {
    io.err << "unknown check '" << cfg.check << "'\n";
    return kExitInputError;
  }

  Game game = Game::nimg_rm;
  GraphKind kind = GraphKind::undirected;
  LoopMode loops = LoopMode::none;
  if (reduction) {
    game = claimed_identity(*reduction).source_game;
    kind = source_graph_kind(*reduction).value_or(GraphKind::undirected);
  } else if (*solver == SolverCheck::loops) {
    loops = LoopMode::all;
  }
  if (!cfg.kind.empty()) {
    if (cfg.kind == "ugraph") kind = GraphKind::undirected;
    else if (cfg.kind == "digraph") kind = GraphKind::directed;
    else {
      io.err << "unknown graph kind '" << cfg.kind << "'\n";
      return kExitInputError;
    }
    if (reduction && source_graph_kind(*reduction) && *source_graph_kind(*reduction) != kind) {
      io.err << reduction_name(*reduction) << " needs a " << to_string(*source_graph_kind(*reduction)) << '\n';
      return kExitInfeasibleGrid;
    }
  }
  if (!cfg.loops.empty()) {
    auto mode = parse_loop_mode(cfg.loops);
    if (!mode) {
      io.err << "unknown loop mode '" << cfg.loops << "'\n";
      return kExitInputError;
    }
    loops = *mode;
  }
  if (cfg.n == 0 || cfg.m > max_edge_count(kind, cfg.n, loops) || (is_nimg(game) && cfg.wmax == 0) ||
      (game == Game::vgeo && loops != LoopMode::none)) {
    io.err << "infeasible grid: n=" << cfg.n << " m=" << cfg.m << " loops=" << to_string(loops) << '\n';
    return kExitInfeasibleGrid;
  }

  const unsigned threads = cfg.threads ? cfg.threads : default_thread_count();
  struct Trial {
    Position instance;
    TrialReport report;
  };
  std::vector<Trial> trials;
  try {
    trials = run_trials(cfg.trials, threads, [&](std::size_t i) {
      const std::uint64_t seed = trial_seed(cfg.seed, i);
      Position p = random_instance(game, kind, cfg.n, cfg.m, cfg.wmax, loops, seed);
      TrialReport r = reduction ? check_reduction(*reduction, p, cfg.budget) : check_solver(*solver, p, cfg.budget);
      r.seed = seed;
      r.weight_bound = cfg.wmax;
      return Trial{std::move(p), std::move(r)};
    });
  } catch (const CapacityError& e) {
    io.err << e.what() << '\n';
    return kExitInputError;
  }

  std::size_t agree = 0, disagree = 0, indeterminate = 0, inapplicable = 0;
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const TrialReport& r = trials[i].report;
    io.out << "trial " << i << ": " << format_trial(r) << '\n';
    const bool bad = (r.agree && !*r.agree) || !r.bookkeeping.empty();
    if (bad) {
      ++disagree;
      if (reduction) {
        auto dir = std::filesystem::path(cfg.out_dir) / (cfg.check + "-trial" + std::to_string(i));
        write_counterexample(dir, *reduction, trials[i].instance, r);
        io.out << "  counterexample written to " << dir.string() << '\n';
      }
    } else if (r.agree) {
      ++agree;
    } else if (r.source_exhausted || r.target_exhausted) {
      ++indeterminate;
    } else {
      ++inapplicable;
    }
  }
  io.out << cfg.check << ": " << agree << "/" << trials.size() << " agree, " << disagree << " disagree, "
         << indeterminate << " indeterminate, " << inapplicable << " not applicable\n";
  if (disagree) return kExitDisagreement;
  if (indeterminate) return kExitIndeterminate;
  return kExitOk;
}

// ---- bench ---------------------------------------------------------------

int cmd_bench(const CommandConfig& cfg, Io io) {
  if (cfg.check != "matching") {
    io.err << "unknown benchmark '" << cfg.check << "' (available: matching)\n";
    return kExitInputError;
  }
  const std::size_t left = cfg.n / 2, right = cfg.n - cfg.n / 2;
  if (left == 0 || cfg.m > left * right) {
    io.err << "infeasible grid: n=" << cfg.n << " m=" << cfg.m << '\n';
    return kExitInfeasibleGrid;
  }
  Graph g = random_bipartite_graph(left, right, cfg.m, cfg.seed);
  auto b = bipartition(g);
  HopcroftKarpStats stats;
  auto t0 = std::chrono::steady_clock::now();
  Matching m = max_matching_bipartite(g, *b, &stats);
  auto t1 = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  io.out << "matching n=" << cfg.n << " m=" << cfg.m << " size=" << m.size() << " phases=" << stats.phases
         << " phase_bound=" << 2 * std::sqrt(static_cast<double>(cfg.n)) + 2 << " time_ms=" << ms << '\n';
  return kExitOk;
}

// ---- play ----------------------------------------------------------------

void print_board(const Position& p, std::ostream& out) {
  const Graph& g = p.graph();
  out << "-- " << to_string(p.game()) << ", token at " << p.current() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!p.vertex_live(v)) continue;
    out << (v == p.current() ? " *" : "  ") << v;
    if (is_nimg(p.game())) out << " [" << p.weight(v) << "]";
    out << " ->";
    for (const Adjacent& a : g.neighbours(v)) {
      if (p.vertex_live(a.vertex) && p.edge_live(a.edge)) out << ' ' << a.vertex;
    }
    out << '\n';
  }
}

std::optional<Move> parse_human_move(const std::string& line, Game game) {
  std::istringstream in(line);
  long long a = -1, b = -1;
  if (!(in >> a) || a < 0) return std::nullopt;
  if (game == Game::nimg_rm || game == Game::nimg_mr) {
    if (!(in >> b) || b < 0) return std::nullopt;
  }
  std::string rest;
  if (in >> rest) return std::nullopt;
  switch (game) {
    case Game::nimg_rm: return Move{static_cast<Vertex>(b), static_cast<Weight>(a)};
    case Game::nimg_mr: return Move{static_cast<Vertex>(a), static_cast<Weight>(b)};
    default: return Move{static_cast<Vertex>(a), 0};
  }
}

int cmd_play(const CommandConfig& cfg, Io io) {
  auto record = load(cfg.input, io);
  if (!record) return kExitInputError;
  const Convention c = record->convention;
  Position p = record->position;
  std::optional<ExhaustiveSolver> search;
  try {
    search.emplace(p, c, cfg.budget);
  } catch (const CapacityError& e) {
    if (cfg.method == Method::exhaustive) {
      io.err << e.what() << '\n';
      return kExitInputError;
    }
  }
  if (cfg.method == Method::matching && !applicable(solve_with_matching(p, c))) {
    io.err << "method matching not applicable to this position\n";
    return kExitNotApplicable;
  }

  const char* format = p.game() == Game::nimg_rm ? "k v" : p.game() == Game::nimg_mr ? "v k" : "v";
  bool human_turn = cfg.human_first;
  while (true) {
    print_board(p, io.out);
    if (is_terminal(p)) {
      const bool mover_wins = terminal_outcome(c) == Outcome::N;
      const bool human_wins = human_turn == mover_wins;
      io.out << "game over: " << (human_wins ? "you win" : "engine wins") << " (" << to_string(c) << ")\n";
      return kExitOk;
    }
    if (human_turn) {
      io.out << "your move (" << format << "): " << std::flush;
      std::string line;
      if (!std::getline(io.in, line)) {
        io.err << "input closed\n";
        return kExitInputError;
      }
      auto m = parse_human_move(line, p.game());
      auto legal = legal_moves(p);
      if (!m || std::find(legal.begin(), legal.end(), *m) == legal.end()) {
        io.out << "illegal move, try again\n";
        continue;
      }
      p = apply_move(p, *m);
    } else {
      std::optional<Move> choice;
      std::string how;
      if (cfg.method != Method::exhaustive) {
        PolyAnswer a = solve_with_matching(p, c);
        if (auto* res = std::get_if<PolyResult>(&a)) {
          how = res->method;
          if (res->policy) choice = res->policy->choose(p);
          if (!choice && res->outcome == Outcome::P) choice = legal_moves(p).front();
        }
      }
      if (!choice && search) {
        SolveReport r = search->solve(p);
        how = "exhaustive";
        choice = r.principal_move ? *r.principal_move : legal_moves(p).front();
      }
      if (!choice) {
        io.err << "no solver can handle this position\n";
        return kExitNotApplicable;
      }
      io.out << "engine (" << how << ") plays " << describe(*choice, p.game()) << '\n';
      p = apply_move(p, *choice);
    }
    human_turn = !human_turn;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver and verification toolkit for NimG and Geography under normal and misère play", "mgg"};
  app.require_subcommand(1);
  CommandConfig cfg;
  Io io{in, out, err};

  auto* solve_cmd = app.add_subcommand("solve", "Solve a position file");
  solve_cmd->add_option("file", cfg.input, "position file")->required();
  solve_cmd->add_option("--method", cfg.method, "auto | exhaustive | matching")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  solve_cmd->add_option("--budget", cfg.budget, "maximum expanded states")->check(CLI::PositiveNumber);

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply a hardness reduction to a position file");
  reduce_cmd->add_option("name", cfg.check, "vgeo-dir | vgeo-undir | egeo-undir | egeo-dir | nimg-rm | nimg-mr")
      ->required();
  reduce_cmd->add_option("in", cfg.input, "source position file")->required();
  reduce_cmd->add_option("out", cfg.output, "target position file")->required();
  reduce_cmd->add_option("--names", cfg.names, "name map output (default <out>.namemap.txt)");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check a reduction or solver on random instances");
  verify_cmd->add_option("name", cfg.check, "reduction name, or solver-bipartite | solver-weight1 | solver-loops")
      ->required();
  verify_cmd->add_option("--n", cfg.n, "vertices per instance");
  verify_cmd->add_option("--m", cfg.m, "edges per instance");
  verify_cmd->add_option("--wmax", cfg.wmax, "maximum heap size");
  verify_cmd->add_option("--trials", cfg.trials, "number of instances");
  verify_cmd->add_option("--seed", cfg.seed, "master seed");
  verify_cmd->add_option("--budget", cfg.budget, "maximum expanded states per solve")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--loops", cfg.loops, "none | all | free");
  verify_cmd->add_option("--kind", cfg.kind, "ugraph | digraph (nimg-mr only)");
  verify_cmd->add_option("--threads", cfg.threads, "worker threads (default: hardware)");
  verify_cmd->add_option("--out", cfg.out_dir, "counterexample directory");

  auto* bench_cmd = app.add_subcommand("bench", "Time the bipartite matching engine");
  bench_cmd->add_option("name", cfg.check, "matching")->required();
  bench_cmd->add_option("--n", cfg.n, "vertices")->default_val(20000);
  bench_cmd->add_option("--m", cfg.m, "edges")->default_val(100000);
  bench_cmd->add_option("--seed", cfg.seed, "seed");

  auto* play_cmd = app.add_subcommand("play", "Play a position against the engine");
  play_cmd->add_option("file", cfg.input, "position file")->required();
  play_cmd->add_option("--method", cfg.method, "auto | exhaustive | matching")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  play_cmd->add_option("--budget", cfg.budget, "maximum expanded states")->check(CLI::PositiveNumber);
  std::string human = "first";
  play_cmd->add_option("--human", human, "first | second")->check(CLI::IsMember({"first", "second"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  cfg.human_first = human == "first";

  try {
    if (*solve_cmd) return cmd_solve(cfg, io);
    if (*reduce_cmd) return cmd_reduce(cfg, io);
    if (*verify_cmd) return cmd_verify(cfg, io);
    if (*bench_cmd) return cmd_bench(cfg, io);
    if (*play_cmd) return cmd_play(cfg, io);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace mgg
