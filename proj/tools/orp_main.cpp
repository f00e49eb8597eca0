#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orp/blp_orp.hpp"
#include "orp/ga.hpp"
#include "orp/io.hpp"
#include "orp/oracle.hpp"
#include "orp/rng.hpp"

namespace {

using namespace orp;

constexpr int kExitParse = 2;
constexpr int kExitInfeasibleParent = 3;
constexpr int kExitGuard = 4;
constexpr int kExitMismatch = 5;

std::string binary_line(const BinaryVector& x) {
  std::ostringstream out;
  for (std::size_t j = 0; j < x.size(); ++j) out << (j ? " " : "") << int(x[j]);
  return out.str();
}

std::string sequence_line(const std::vector<int>& seq) {
  std::ostringstream out;
  for (std::size_t j = 0; j < seq.size(); ++j) out << (j ? " " : "") << seq[j] + 1;
  return out.str();
}

struct SolveOutcome {
  Rational value;
  std::string witness;
  Sense sense = Sense::Max;
  Rational oracle_value;
  std::uint64_t oracle_examined = 0;
};

const std::vector<std::string> kKinds = {"clique", "is",   "vc",   "blp",  "packing",
                                         "partition", "splp", "cover", "tsp", "sched"};

bool is_binary_kind(const std::string& kind) { return kind != "tsp" && kind != "sched"; }

SolveOutcome run_binary_kind(const std::string& kind, const std::string& instance_text,
                             const std::string& parents_text, bool with_oracle) {
  SolveOutcome out;
  if (kind == "clique" || kind == "is" || kind == "vc") {
    graph::WeightedGraph g = io::parse_graph(instance_text);
    auto [p1, p2] = io::parse_parents_binary(parents_text, g.n);
    BinaryVector x;
    oracle::BinaryEvaluator eval;
    if (kind == "clique") {
      x = graph::clique_orp(g, p1, p2);
      out.sense = Sense::Max;
      eval = [&g](const BinaryVector& v) {
        return std::make_pair(graph::is_clique(g, v), graph::selected_weight(g, v));
      };
    } else if (kind == "is") {
      x = graph::independent_set_orp(g, p1, p2);
      out.sense = Sense::Max;
      eval = [&g](const BinaryVector& v) {
        return std::make_pair(graph::is_independent_set(g, v), graph::selected_weight(g, v));
      };
    } else {
      x = graph::vertex_cover_orp(g, p1, p2);
      out.sense = Sense::Min;
      eval = [&g](const BinaryVector& v) {
        return std::make_pair(graph::is_vertex_cover(g, v), graph::selected_weight(g, v));
      };
    }
    out.value = graph::selected_weight(g, x);
    out.witness = binary_line(x);
    if (with_oracle) {
      auto report = oracle::brute_force_binary_orp(eval, out.sense, p1, p2);
      out.oracle_value = report.value;
      out.oracle_examined = report.examined;
    }
    return out;
  }

  if (kind == "blp" || kind == "cover") {
    BlpInstance inst = kind == "blp"
                           ? io::parse_blp(instance_text)
                           : blp::set_system_to_blp(io::parse_set_system(instance_text));
    auto [p1, p2] = io::parse_parents_binary(parents_text, inst.n);
    BinaryVector x = inst.n_max <= 2 ? blp::solve_two_var_orp(inst, p1, p2)
                                     : blp::solve_blp_orp_exact(inst, p1, p2);
    out.sense = inst.sense;
    out.value = evaluate_blp(inst, x).second.value;
    out.witness = binary_line(x);
    if (with_oracle) {
      oracle::BinaryEvaluator eval = [&inst](const BinaryVector& v) {
        auto [feasible, value] = evaluate_blp(inst, v);
        return std::make_pair(feasible, value.value);
      };
      auto report = oracle::brute_force_binary_orp(eval, out.sense, p1, p2);
      out.oracle_value = report.value;
      out.oracle_examined = report.examined;
    }
    return out;
  }

  if (kind == "packing" || kind == "partition") {
    blp::SetSystemInstance inst = io::parse_set_system(instance_text);
    auto [p1, p2] = io::parse_parents_binary(parents_text, inst.n);
    BinaryVector x = kind == "packing" ? blp::set_packing_orp(inst, p1, p2)
                                       : blp::set_partition_orp(inst, p1, p2);
    out.sense = blp::set_system_sense(inst.kind);
    out.value = blp::set_system_value(inst, x);
    out.witness = binary_line(x);
    if (with_oracle) {
      oracle::BinaryEvaluator eval = [&inst](const BinaryVector& v) {
        return std::make_pair(blp::set_system_feasible(inst, v), blp::set_system_value(inst, v));
      };
      auto report = oracle::brute_force_binary_orp(eval, out.sense, p1, p2);
      out.oracle_value = report.value;
      out.oracle_examined = report.examined;
    }
    return out;
  }

  if (kind == "splp") {
    blp::SplpInstance inst = io::parse_splp(instance_text);
    int len = inst.facilities * inst.clients + inst.facilities;
    auto [q1, q2] = io::parse_parents_binary(parents_text, len);
    blp::SplpSolution s =
        blp::splp_orp(inst, blp::splp_decode(inst, q1), blp::splp_decode(inst, q2));
    out.sense = Sense::Min;
    out.value = blp::splp_value(inst, s);
    out.witness = binary_line(blp::splp_encode(inst, s));
    if (with_oracle) {
      oracle::BinaryEvaluator eval = [&inst](const BinaryVector& v) {
        blp::SplpSolution sol = blp::splp_decode(inst, v);
        return std::make_pair(blp::splp_feasible(inst, sol), blp::splp_value(inst, sol));
      };
      auto report = oracle::brute_force_binary_orp(eval, Sense::Min, q1, q2);
      out.oracle_value = report.value;
      out.oracle_examined = report.examined;
    }
    return out;
  }

  throw ParseError("unknown kind '" + kind + "'");
}

SolveOutcome run_any_kind(const std::string& kind, const std::string& instance_text,
                          const std::string& parents_text, int workers, bool cmax,
                          bool with_oracle) {
  if (is_binary_kind(kind)) {
    return run_binary_kind(kind, instance_text, parents_text, with_oracle);
  }
  SolveOutcome out;
  out.sense = Sense::Min;
  if (kind == "tsp") {
    tsp::TspInstance inst = io::parse_tsp(instance_text);
    auto [s1, s2] = io::parse_parents_sequence(parents_text, inst.n);
    tsp::Tour t1 = tsp::tour_from_sequence(s1);
    tsp::Tour t2 = tsp::tour_from_sequence(s2);
    tsp::TspOrpResult r = inst.symmetric ? tsp::tsp_orp_symmetric(inst, t1, t2, workers)
                                         : tsp::tsp_orp_general(inst, t1, t2, workers);
    out.value = r.length;
    out.witness = sequence_line(tsp::tour_sequence(r.tour, 0));
    if (with_oracle) {
      auto report = oracle::brute_force_tour_orp(inst, t1, t2);
      out.oracle_value = report.value;
      out.oracle_examined = report.examined;
    }
    return out;
  }
  if (kind == "sched") {
    sched::SetupInstance inst = io::parse_sched(instance_text);
    auto [s1, s2] = io::parse_parents_sequence(parents_text, inst.k);
    auto r = sched::solve_makespan_orp(inst, s1, s2);
    out.value = cmax ? r.cost + inst.total_processing() : r.cost;
    out.witness = sequence_line(r.perm);
    if (with_oracle) {
      auto report = oracle::brute_force_requisition_orp(inst, s1, s2);
      out.oracle_value = cmax ? report.value + inst.total_processing() : report.value;
      out.oracle_examined = report.examined;
    }
    return out;
  }
  throw ParseError("unknown kind '" + kind + "'");
}

// ---- ga ---------------------------------------------------------------

struct GaFileConfig {
  ga::GaConfig ga;
  std::string problem;
  std::string instance_path;
  std::string parents_path;
};

GaFileConfig parse_ga_config(const std::string& text) {
  GaFileConfig cfg;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  bool have_problem = false, have_instance = false;
  while (std::getline(in, line)) {
    number += 1;
    std::string trimmed = line.substr(0, line.find('#'));
    std::istringstream ls(trimmed);
    std::string key, eq, value;
    if (!(ls >> key)) continue;
    if (!(ls >> eq >> value) || eq != "=") {
      throw ParseError("config line " + std::to_string(number) + ": expected 'key = value'");
    }
    try {
      if (key == "pop") {
        cfg.ga.population = std::stoi(value);
      } else if (key == "pc") {
        cfg.ga.pc = std::stod(value);
      } else if (key == "pm") {
        cfg.ga.pm = std::stod(value);
      } else if (key == "gens") {
        cfg.ga.generations = std::stoi(value);
      } else if (key == "seed") {
        cfg.ga.seed = std::stoull(value);
      } else if (key == "problem") {
        cfg.problem = value;
        have_problem = true;
      } else if (key == "instance") {
        cfg.instance_path = value;
        have_instance = true;
      } else if (key == "parents") {
        cfg.parents_path = value;
      } else {
        throw ParseError("config line " + std::to_string(number) + ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("config line " + std::to_string(number) + ": bad value '" + value + "'");
    }
  }
  if (!have_problem || !have_instance) {
    throw ParseError("config needs at least 'problem = <kind>' and 'instance = <path>'");
  }
  return cfg;
}

std::string history_csv(const std::vector<ga::HistoryRow>& history) {
  std::ostringstream out;
  out << "generation,best,mean\n";
  for (const auto& row : history) {
    out << row.generation << ',' << row.best.str() << ',' << row.mean.str() << '\n';
  }
  return out.str();
}

template <class Problem>
int run_ga_and_report(const Problem& problem, const GaFileConfig& cfg,
                      const std::string& history_path,
                      const std::function<std::string(const typename Problem::Genotype&)>& show,
                      const std::vector<typename Problem::Genotype>& seeds = {}) {
  auto result = ga::run_ga(problem, cfg.ga, seeds);
  std::cout << "objective " << result.best_value.str() << '\n' << show(result.best) << '\n';
  std::string csv = history_csv(result.history);
  if (history_path.empty()) {
    std::cout << csv;
  } else {
    io::write_file(history_path, csv);
  }
  return 0;
}

int cmd_ga(const std::string& config_path, const std::string& history_path) {
  GaFileConfig cfg = parse_ga_config(io::read_file(config_path));
  std::string instance_text = io::read_file(cfg.instance_path);
  std::string parents_text =
      cfg.parents_path.empty() ? std::string() : io::read_file(cfg.parents_path);

  std::function<std::string(const BinaryVector&)> show_binary =
      [](const BinaryVector& x) { return binary_line(x); };
  auto binary_seeds = [&parents_text](int n) {
    std::vector<BinaryVector> seeds;
    if (!parents_text.empty()) {
      auto [p1, p2] = io::parse_parents_binary(parents_text, n);
      seeds = {std::move(p1), std::move(p2)};
    }
    return seeds;
  };

  if (cfg.problem == "clique" || cfg.problem == "is" || cfg.problem == "vc") {
    graph::WeightedGraph g = io::parse_graph(instance_text);
    auto seeds = binary_seeds(g.n);
    if (cfg.problem == "clique") {
      return run_ga_and_report(ga::CliqueProblem{g}, cfg, history_path, show_binary, seeds);
    }
    if (cfg.problem == "is") {
      return run_ga_and_report(ga::IndependentSetProblem{g}, cfg, history_path, show_binary,
                               seeds);
    }
    return run_ga_and_report(ga::VertexCoverProblem{g}, cfg, history_path, show_binary, seeds);
  }
  if (cfg.problem == "packing" || cfg.problem == "partition") {
    blp::SetSystemInstance inst = io::parse_set_system(instance_text);
    auto seeds = binary_seeds(inst.n);
    if (cfg.problem == "packing") {
      return run_ga_and_report(ga::PackingProblem{inst}, cfg, history_path, show_binary, seeds);
    }
    return run_ga_and_report(ga::PartitionProblem{inst}, cfg, history_path, show_binary, seeds);
  }
  if (cfg.problem == "splp") {
    blp::SplpInstance inst = io::parse_splp(instance_text);
    auto seeds = binary_seeds(inst.facilities * inst.clients + inst.facilities);
    return run_ga_and_report(ga::SplpProblem{inst}, cfg, history_path, show_binary, seeds);
  }
  if (cfg.problem == "tsp") {
    tsp::TspInstance inst = io::parse_tsp(instance_text);
    std::function<std::string(const tsp::Tour&)> show = [](const tsp::Tour& t) {
      return sequence_line(tsp::tour_sequence(t, 0));
    };
    std::vector<tsp::Tour> seeds;
    if (!parents_text.empty()) {
      auto [s1, s2] = io::parse_parents_sequence(parents_text, inst.n);
      seeds = {tsp::tour_from_sequence(s1), tsp::tour_from_sequence(s2)};
    }
    return run_ga_and_report(ga::TspProblem{inst}, cfg, history_path, show, seeds);
  }
  if (cfg.problem == "sched") {
    sched::SetupInstance inst = io::parse_sched(instance_text);
    std::function<std::string(const sched::JobPermutation&)> show =
        [](const sched::JobPermutation& p) { return sequence_line(p); };
    std::vector<sched::JobPermutation> seeds;
    if (!parents_text.empty()) {
      auto [s1, s2] = io::parse_parents_sequence(parents_text, inst.k);
      seeds = {std::move(s1), std::move(s2)};
    }
    return run_ga_and_report(ga::SchedProblem{inst}, cfg, history_path, show, seeds);
  }
  throw ParseError("unknown problem kind '" + cfg.problem + "' in config");
}

// ---- bench ------------------------------------------------------------

std::vector<int> parse_sizes(const std::string& sizes) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(sizes);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw ParseError("bad size '" + token + "'");
    }
  }
  return out;
}

int cmd_bench(const std::string& kind, const std::string& sizes, std::uint64_t seed) {
  std::cout << "kind,n,d_or_q,micros\n";
  for (int size : parse_sizes(sizes)) {
    if (size < 2) throw ParseError("bench size must be at least 2");
    long micros = 0;
    int n = 0;
    if (kind == "clique") {
      if (size % 2 != 0) throw ParseError("clique bench sizes must be even");
      int half = size / 2;
      n = size;
      Rng rng = Rng::derive(seed, size);
      std::vector<Rational> w(n);
      for (auto& v : w) v = Rational(rng.int_in(1, 100));
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < half; ++u) {
        for (int v = u + 1; v < half; ++v) edges.emplace_back(u, v);
      }
      for (int u = half; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      for (int u = 0; u < half; ++u) {
        for (int v = half; v < n; ++v) {
          if (rng.chance(0.5)) edges.emplace_back(u, v);
        }
      }
      graph::WeightedGraph g = graph::WeightedGraph::create(std::move(w), std::move(edges));
      BinaryVector p1(n, 0), p2(n, 0);
      for (int v = 0; v < half; ++v) p1[v] = 1;
      for (int v = half; v < n; ++v) p2[v] = 1;
      auto start = std::chrono::steady_clock::now();
      BinaryVector x = graph::clique_orp(g, p1, p2);
      micros = std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
      (void)x;
    } else if (kind == "sched") {
      int q = size;
      int k = 2 * q + 1;
      n = k;
      Rng rng = Rng::derive(seed, size);
      std::vector<Rational> proc(k, Rational(1));
      std::vector<std::vector<Rational>> setup(k, std::vector<Rational>(k, Rational(0)));
      for (int v = 0; v < k; ++v) {
        for (int u = 0; u < k; ++u) {
          if (u != v) setup[v][u] = Rational(rng.int_in(0, 99));
        }
      }
      sched::SetupInstance inst = sched::SetupInstance::create(std::move(proc), std::move(setup));
      sched::JobPermutation p1(k), p2(k);
      for (int i = 0; i < k; ++i) p1[i] = p2[i] = i;
      for (int j = 0; j < q; ++j) std::swap(p2[2 * j], p2[2 * j + 1]);
      sched::MakespanOptions opts;
      opts.max_q = std::max(25, q);
      auto start = std::chrono::steady_clock::now();
      auto r = sched::solve_makespan_orp(inst, p1, p2, opts);
      micros = std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
      (void)r;
    } else {
      throw ParseError("bench supports kinds 'clique' and 'sched'");
    }
    std::cout << kind << ',' << n << ',' << size << ',' << micros << '\n';
  }
  return 0;
}

// ---- gen --------------------------------------------------------------

int cmd_gen(const std::string& generator, const std::string& instance_path, int identity,
            int k, int n, double p, bool asym, std::uint64_t seed,
            std::string out_instance, std::string out_parents) {
  if (out_instance.empty()) out_instance = generator + "-instance.txt";
  if (out_parents.empty()) out_parents = generator + "-parents.txt";
  Rng rng(seed);

  if (generator == "setcover-hard") {
    blp::SetSystemInstance cover = [&]() {
      if (!instance_path.empty()) {
        auto inst = io::parse_set_system(io::read_file(instance_path));
        if (inst.kind != blp::SetKind::Covering) {
          throw ParseError("setcover-hard needs a covering instance");
        }
        return inst;
      }
      if (identity < 1) throw ParseError("setcover-hard needs --instance or --identity N");
      std::vector<std::vector<std::uint8_t>> a(identity,
                                               std::vector<std::uint8_t>(identity, 0));
      for (int i = 0; i < identity; ++i) a[i][i] = 1;
      return blp::SetSystemInstance::create(blp::SetKind::Covering,
                                            std::vector<Rational>(identity, Rational(1)), a);
    }();
    auto orp = blp::gen_hard_setcover_orp(cover);
    io::write_file(out_instance, io::write_set_system(orp.instance));
    io::write_file(out_parents, io::write_parents_binary(orp.p1, orp.p2));
  } else if (generator == "sched-random") {
    if (k < 2) throw ParseError("sched-random needs --k >= 2");
    std::vector<Rational> proc(k);
    for (auto& v : proc) v = Rational(rng.int_in(1, 10));
    std::vector<std::vector<Rational>> setup(k, std::vector<Rational>(k, Rational(0)));
    for (int v = 0; v < k; ++v) {
      for (int u = 0; u < k; ++u) {
        if (u != v) setup[v][u] = Rational(rng.int_in(0, 99));
      }
    }
    sched::SetupInstance inst = sched::SetupInstance::create(std::move(proc), std::move(setup));
    io::write_file(out_instance, io::write_sched(inst));
    io::write_file(out_parents, io::write_parents_sequence(rng.permutation(k),
                                                           rng.permutation(k)));
  } else if (generator == "tsp-random") {
    if (n < 3) throw ParseError("tsp-random needs --n >= 3");
    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) dist[i][j] = Rational(rng.int_in(1, 99));
      }
    }
    if (!asym) {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) dist[j][i] = dist[i][j];
      }
    }
    tsp::TspInstance inst = tsp::TspInstance::create(!asym, std::move(dist));
    io::write_file(out_instance, io::write_tsp(inst));
    io::write_file(out_parents,
                   io::write_parents_sequence(rng.permutation(n), rng.permutation(n)));
  } else if (generator == "graph-random") {
    if (n < 2) throw ParseError("graph-random needs --n >= 2");
    std::vector<Rational> w(n);
    for (auto& v : w) v = Rational(rng.int_in(1, 20));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.chance(p)) edges.emplace_back(u, v);
      }
    }
    graph::WeightedGraph g = graph::WeightedGraph::create(std::move(w), std::move(edges));
    auto greedy = [&g](Rng& r) {
      BinaryVector x(g.n, 0);
      std::vector<int> chosen;
      for (int v : r.permutation(g.n)) {
        bool ok = true;
        for (int u : chosen) {
          if (!g.adjacent(u, v)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          chosen.push_back(v);
          x[v] = 1;
        }
      }
      return x;
    };
    io::write_file(out_instance, io::write_graph(g));
    Rng r1 = Rng::derive(seed, 1);
    Rng r2 = Rng::derive(seed, 2);
    io::write_file(out_parents, io::write_parents_binary(greedy(r1), greedy(r2)));
  } else {
    throw ParseError("unknown generator '" + generator + "'");
  }
  std::cout << "wrote " << out_instance << " and " << out_parents << '\n';
  return 0;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Exact optimal-recombination solvers with a brute-force oracle and a GA driver"};
  app.require_subcommand(1);

  std::string kind, instance_path, parents_path;
  int workers = 1;
  bool cmax = false;

  auto* solve = app.add_subcommand("solve", "solve one ORP instance");
  solve->add_option("--kind", kind, "problem kind")->required()->check(CLI::IsMember(kKinds));
  solve->add_option("--instance", instance_path, "instance file")->required();
  solve->add_option("--parents", parents_path, "parents file")->required();
  solve->add_option("--workers", workers, "worker threads (tsp only)");
  solve->add_flag("--cmax", cmax, "report the makespan instead of the setup sum (sched)");

  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "cross-check the solver against the oracle");
  verify->add_option("--kind", kind, "problem kind")->required()->check(CLI::IsMember(kKinds));
  verify->add_option("--instance", instance_path, "instance file")->required();
  verify->add_option("--parents", parents_path, "parents file")->required();
  verify->add_flag("--corrupt", corrupt)->group("");  // test hook

  std::string config_path, history_path;
  auto* ga_cmd = app.add_subcommand("ga", "run the genetic algorithm");
  ga_cmd->add_option("--config", config_path, "key = value config file")->required();
  ga_cmd->add_option("--history", history_path, "write the per-generation CSV here");

  std::string bench_kind, sizes;
  std::uint64_t seed = 1;
  auto* bench = app.add_subcommand("bench", "time solver runs over a size sweep");
  bench->add_option("--kind", bench_kind, "clique or sched")->required();
  bench->add_option("--sizes", sizes, "comma-separated size list")->required();
  bench->add_option("--seed", seed, "instance seed");

  std::string generator, gen_instance;
  int identity = 0, gk = 0, gn = 0;
  double gp = 0.3;
  bool asym = false;
  std::string out_instance, out_parents;
  auto* gen = app.add_subcommand("gen", "emit instance and parents files");
  gen->add_option("--generator", generator,
                  "setcover-hard | sched-random | tsp-random | graph-random")
      ->required();
  gen->add_option("--instance", gen_instance, "input covering instance (setcover-hard)");
  gen->add_option("--identity", identity, "identity matrix size (setcover-hard)");
  gen->add_option("--k", gk, "job count (sched-random)");
  gen->add_option("--n", gn, "vertex count (tsp-random, graph-random)");
  gen->add_option("--p", gp, "edge probability (graph-random)");
  gen->add_flag("--asym", asym, "asymmetric distances (tsp-random)");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out-instance", out_instance, "instance output path");
  gen->add_option("--out-parents", out_parents, "parents output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  if (solve->parsed()) {
    SolveOutcome out = run_any_kind(kind, io::read_file(instance_path),
                                    io::read_file(parents_path), workers, cmax, false);
    std::cout << "objective " << out.value.str() << '\n' << out.witness << '\n';
    return 0;
  }
  if (verify->parsed()) {
    SolveOutcome out = run_any_kind(kind, io::read_file(instance_path),
                                    io::read_file(parents_path), 1, false, true);
    Rational solver_value = out.value;
    if (corrupt) solver_value += Rational(1);
    if (solver_value == out.oracle_value) {
      std::cout << "MATCH " << solver_value.str() << ' ' << out.oracle_value.str() << " ("
                << out.oracle_examined << " candidates)\n";
      return 0;
    }
    std::cout << "MISMATCH " << solver_value.str() << ' ' << out.oracle_value.str() << '\n';
    return kExitMismatch;
  }
  if (ga_cmd->parsed()) return cmd_ga(config_path, history_path);
  if (bench->parsed()) return cmd_bench(bench_kind, sizes, seed);
  if (gen->parsed()) {
    return cmd_gen(generator, gen_instance, identity, gk, gn, gp, asym, seed, out_instance,
                   out_parents);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const InfeasibleParentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasibleParent;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidInstanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const SolverMismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
