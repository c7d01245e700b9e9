// Command-line front end: solve, kernelize, approximate, generate and
// benchmark block-graph-vertex-deletion / weighted-feedback-vertex-set
// instances, emitting JSON or plain-text result records.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bgvd/approx.hpp"
#include "bgvd/bench.hpp"
#include "bgvd/bgvd_solver.hpp"
#include "bgvd/errors.hpp"
#include "bgvd/generator.hpp"
#include "bgvd/instance_io.hpp"
#include "bgvd/kernel.hpp"
#include "bgvd/obstruction.hpp"
#include "bgvd/oracle.hpp"
#include "bgvd/selftest.hpp"
#include "bgvd/wfvs.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace bgvd;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// ---- output --------------------------------------------------------------

void print_text(std::ostream& out, const json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      print_text(out, it.value(),
                 prefix.empty() ? it.key() : prefix + "." + it.key());
    return;
  }
  out << prefix << ":";
  if (j.is_array()) {
    for (const auto& x : j) out << " " << x.dump();
  } else if (j.is_string()) {
    out << " " << j.get<std::string>();
  } else {
    out << " " << j.dump();
  }
  out << "\n";
}

void emit(const json& rec, const std::string& format) {
  if (format == "text")
    print_text(std::cout, rec, "");
  else
    std::cout << rec.dump(2) << "\n";
}

json edge_pairs(const std::vector<std::pair<int, int>>& es) {
  json a = json::array();
  for (auto& [u, v] : es) a.push_back(json::array({u, v}));
  return a;
}

// ---- input ---------------------------------------------------------------

Instance load(const std::string& path, Instance::Problem want,
              const std::string& cmd, bool need_simple) {
  Instance inst = parse_instance_file(path);
  const char* got = inst.problem == Instance::Problem::bgvd ? "bgvd" : "wfvs";
  const char* wanted = want == Instance::Problem::bgvd ? "bgvd" : "wfvs";
  if (inst.problem != want)
    throw input_error("'" + cmd + "' needs a " + wanted +
                      " instance, got problem '" + got + "'");
  if (need_simple && !inst.g.is_simple())
    throw input_error("'" + cmd +
                      "' needs a simple graph (no loops or repeated edges)");
  return inst;
}

json base_record(const std::string& input, const std::string& cmd) {
  json rec;
  rec["instance"] = input;
  rec["command"] = cmd;
  return rec;
}

// ---- subcommands ---------------------------------------------------------

int cmd_solve(const std::string& input, int k, const std::string& format) {
  if (k < 0) throw input_error("--k must be nonnegative");
  Instance inst = load(input, Instance::Problem::bgvd, "solve", true);
  Timer t;
  auto res = solve_bgvd(inst.g, k);

  json rec = base_record(input, "solve");
  rec["parameters"] = {{"k", k}};
  bool certified = true;
  if (res) {
    certified = (int)res->s.size() <= k &&
                is_block_graph_independent(inst.g.without_vertices(res->s));
    rec["verdict"] = "yes";
    rec["witness"] = res->s;
  } else {
    rec["verdict"] = "no";
    rec["witness"] = json::array();
  }
  rec["certified"] = certified;
  json st;
  st["branch_nodes"] = res ? res->stats.nodes : 0;
  if (res) {
    st["restricted_calls"] = res->stats.restricted_calls;
    st["wfvs_branch_nodes"] = res->stats.wfvs.branch_nodes;
    st["wfvs_leaves"] = res->stats.wfvs.leaves;
    st["wfvs_measure_cuts"] = res->stats.wfvs.measure_cuts;
  }
  st["millis"] = t.ms();
  rec["statistics"] = st;
  emit(rec, format);
  require(certified, "emitted witness failed re-validation");
  return 0;
}

int cmd_wfvs(const std::string& input, int k_opt, const std::string& format) {
  Instance inst = load(input, Instance::Problem::wfvs, "wfvs", false);
  int k = k_opt >= 0 ? k_opt : inst.k;
  WeightedGraph wg = inst.weighted();
  Timer t;
  auto res = solve_wfvs(wg, k);

  json rec = base_record(input, "wfvs");
  rec["parameters"] = {{"k", k}};
  bool certified = true;
  if (res) {
    certified = (int)res->x.size() <= k &&
                is_forest(wg.g.without_vertices(res->x)) &&
                res->weight == wg.weight_of(res->x);
    rec["verdict"] = "yes";
    rec["witness"] = res->x;
    rec["weight"] = format_rat(res->weight);
  } else {
    rec["verdict"] = "no";
    rec["witness"] = json::array();
  }
  rec["certified"] = certified;
  json st;
  if (res) {
    st["branch_nodes"] = res->stats.branch_nodes;
    st["disjoint_calls"] = res->stats.disjoint_calls;
    st["leaves"] = res->stats.leaves;
    st["measure_cuts"] = res->stats.measure_cuts;
    st["parity_calls"] = res->stats.parity_calls;
  }
  st["millis"] = t.ms();
  rec["statistics"] = st;
  emit(rec, format);
  require(certified, "emitted witness failed re-validation");
  return 0;
}

int cmd_approx(const std::string& input, const std::string& format) {
  Instance inst = load(input, Instance::Problem::bgvd, "approx", true);
  Timer t;
  VSet s = approx_bgvd_4(inst.g);
  bool certified = is_block_graph_independent(inst.g.without_vertices(s));

  json rec = base_record(input, "approx");
  rec["parameters"] = json::object();
  rec["verdict"] = "yes";
  rec["witness"] = s;
  rec["certified"] = certified;
  rec["statistics"] = {{"witness_size", (int)s.size()}, {"millis", t.ms()}};
  emit(rec, format);
  require(certified, "emitted witness failed re-validation");
  return 0;
}

int cmd_kernelize(const std::string& input, int k, std::string trace_path,
                  const std::string& format) {
  if (k < 0) throw input_error("--k must be nonnegative");
  Instance inst = load(input, Instance::Problem::bgvd, "kernelize", true);
  Timer t;
  KernelState st = kernelize(inst.g, k);

  if (trace_path.empty()) {
    if (input == "-") {
      trace_path = "kernel.trace.json";
    } else {
      std::string base = input;
      auto slash = base.find_last_of('/');
      if (slash != std::string::npos) base = base.substr(slash + 1);
      auto dot = base.find_last_of('.');
      if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
      trace_path = base + ".trace.json";
    }
  }

  std::map<std::string, int> rule_counts;
  json steps = json::array();
  for (const TraceStep& s : st.trace) {
    ++rule_counts[s.rule];
    json j;
    j["rule"] = s.rule;
    j["pivot"] = s.pivot;
    j["removed_vertices"] = s.removed_vertices;
    j["removed_edges"] = edge_pairs(s.removed_edges);
    j["added_vertices"] = s.added_vertices;
    j["added_edges"] = edge_pairs(s.added_edges);
    if (s.merged_into != -1)
      j["merged"] = {{"u", s.merged_from_u},
                     {"v", s.merged_from_v},
                     {"into", s.merged_into}};
    j["k_after"] = s.k_after;
    j["note"] = s.note;
    steps.push_back(std::move(j));
  }
  {
    std::ofstream out(trace_path);
    if (!out) throw input_error("cannot write trace file '" + trace_path + "'");
    out << steps.dump(2) << "\n";
  }

  // Residual graph re-serialized with vertices renumbered to 1..n; the
  // original ids (fresh ids from gadgets included) ride along in order.
  Instance kern;
  kern.problem = Instance::Problem::bgvd;
  VSet keep = st.g.vertices();
  std::map<int, int> renum;
  for (int v : keep) {
    int id = (int)renum.size() + 1;
    renum[v] = id;
    kern.g.add_vertex(id);
  }
  for (auto [u, v, mult] : edge_list(st.g))
    kern.g.add_edge(renum[u], renum[v], mult);

  json rec = base_record(input, "kernelize");
  rec["parameters"] = {{"k", k}};
  if (st.decided) {
    rec["verdict"] = st.feasible ? "yes" : "no";
    rec["reason"] = st.verdict_reason;
  } else {
    rec["verdict"] = "kernel";
  }
  rec["witness"] = json::array();
  rec["certified"] = true;
  rec["kernel"] = {{"n", st.g.n()},
                   {"m", st.g.m()},
                   {"k", st.k},
                   {"vertices", keep},
                   {"instance", serialize_instance(kern)}};
  json st_j;
  st_j["iterations"] = st.iterations;
  st_j["rule_counts"] = rule_counts;
  st_j["kernel_size"] = st.g.n();
  st_j["warnings"] = st.warnings;
  st_j["trace_file"] = trace_path;
  st_j["millis"] = t.ms();
  rec["statistics"] = st_j;
  emit(rec, format);
  return 0;
}

int cmd_oracle(const std::string& input, int k_opt,
               const std::string& format) {
  Instance inst = parse_instance_file(input);
  json rec = base_record(input, "oracle");
  Timer t;
  bool certified = true;
  if (inst.problem == Instance::Problem::bgvd) {
    if (!inst.g.is_simple())
      throw input_error("'oracle' needs a simple graph for bgvd instances");
    rec["parameters"] = k_opt >= 0 ? json{{"k", k_opt}} : json::object();
    auto opt = brute_min_bvd(inst.g, k_opt);
    if (opt) {
      certified = is_block_graph(inst.g.without_vertices(*opt));
      rec["verdict"] = k_opt >= 0 ? "yes" : "optimal";
      rec["witness"] = *opt;
      rec["opt_size"] = (int)opt->size();
    } else {
      rec["verdict"] = "no";
      rec["witness"] = json::array();
    }
  } else {
    int k = k_opt >= 0 ? k_opt : inst.k;
    rec["parameters"] = {{"k", k}};
    WeightedGraph wg = inst.weighted();
    auto opt = brute_min_wfvs(wg, k);
    if (opt) {
      certified = is_forest(wg.g.without_vertices(opt->first));
      rec["verdict"] = "yes";
      rec["witness"] = opt->first;
      rec["opt_weight"] = format_rat(opt->second);
    } else {
      rec["verdict"] = "no";
      rec["witness"] = json::array();
    }
  }
  rec["certified"] = certified;
  rec["statistics"] = {{"millis", t.ms()}};
  emit(rec, format);
  require(certified, "emitted witness failed re-validation");
  return 0;
}

int cmd_gen(const std::string& profile, int n, double p, int k, int t,
            int petals, uint64_t seed) {
  Instance inst;
  if (profile == "random-gnp") {
    if (n < 1) throw input_error("random-gnp needs --n >= 1");
    if (p < 0.0 || p > 1.0) throw input_error("--p must be in [0,1]");
    inst = gen_random_gnp(n, p, seed);
  } else if (profile == "planted-bgvd") {
    if (n < 1) throw input_error("planted-bgvd needs --n >= 1");
    if (k < 0 || k >= n)
      throw input_error("planted-bgvd needs 0 <= --k < --n");
    inst = gen_planted_bgvd(n, k, seed);
  } else if (profile == "flower") {
    if (petals < 1) throw input_error("flower needs --petals >= 1");
    inst = gen_flower(petals, seed);
  } else if (profile == "disjoint-c4") {
    if (t < 1) throw input_error("disjoint-c4 needs --t >= 1");
    inst = gen_disjoint_c4(t, seed);
  } else {
    throw input_error("unknown profile '" + profile +
                      "' (random-gnp, planted-bgvd, flower, disjoint-c4)");
  }
  std::cout << serialize_instance(inst);
  return 0;
}

int cmd_bench(uint64_t seed, bool parallel, bool compare,
              const std::string& format) {
  if (compare) {
    std::cout << oracle_backend_comparison(seed);
    return 0;
  }
  BenchReport rep = run_bench(seed, parallel);
  if (format == "text") {
    std::cout << bench_text_table(rep);
    return 0;
  }
  json rec;
  rec["command"] = "bench";
  rec["backend"] = rep.backend;
  json rows = json::array();
  for (const BenchRow& r : rep.rows) {
    json j;
    j["instance"] = r.instance;
    j["n"] = r.n;
    j["m"] = r.m;
    j["k"] = r.k;
    j["feasible"] = r.feasible;
    j["nodes"] = r.nodes;
    j["node_budget"] = r.node_budget;
    j["leaves"] = r.leaves;
    j["leaf_ratio"] = r.leaf_ratio;
    j["kernel_n"] = r.kernel_n;
    j["kernel_ratio"] = r.kernel_ratio;
    j["approx"] = r.approx;
    j["opt"] = r.opt;
    j["approx_ratio"] = r.approx_ratio;
    j["millis"] = r.millis;
    rows.push_back(std::move(j));
  }
  rec["rows"] = rows;
  rec["max_node_ratio"] = rep.max_node_ratio;
  rec["max_leaf_ratio"] = rep.max_leaf_ratio;
  rec["max_kernel_ratio"] = rep.max_kernel_ratio;
  rec["max_approx_ratio"] = rep.max_approx_ratio;
  rec["bounds_ok"] = rep.bounds_ok;
  std::cout << rec.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block graph vertex deletion toolkit"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "json";
  std::string trace_path;
  std::string profile;
  std::string trials = "quick";
  int k = -1;
  int n = 10, t = 2, petals = 3;
  double p = 0.5;
  uint64_t seed = 1;
  bool parallel = false, compare = false;

  auto add_io = [&](CLI::App* c, bool with_k) {
    c->add_option("--input", input, "instance file, or - for stdin");
    c->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    if (with_k) c->add_option("--k", k, "budget");
  };

  CLI::App* solve = app.add_subcommand("solve", "exact block-graph deletion");
  add_io(solve, true);
  solve->get_option("--k")->required();

  CLI::App* wfvs = app.add_subcommand(
      "wfvs", "exact weighted feedback vertex set (k from header unless --k)");
  add_io(wfvs, true);

  CLI::App* approx =
      app.add_subcommand("approx", "factor-4 block-graph deletion");
  add_io(approx, false);

  CLI::App* kern = app.add_subcommand("kernelize", "reduce to a small kernel");
  add_io(kern, true);
  kern->get_option("--k")->required();
  kern->add_option("--trace", trace_path,
                   "trace file path (default <input>.trace.json)");

  CLI::App* oracle =
      app.add_subcommand("oracle", "exhaustive optimum (small graphs only)");
  add_io(oracle, true);

  CLI::App* gen = app.add_subcommand("gen", "write a generated instance");
  gen->add_option("profile", profile,
                  "random-gnp | planted-bgvd | flower | disjoint-c4")
      ->required();
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--p", p, "edge probability");
  gen->add_option("--k", k, "planted noise size");
  gen->add_option("--t", t, "number of 4-cycles");
  gen->add_option("--petals", petals, "number of petals");
  gen->add_option("--seed", seed, "rng seed");

  CLI::App* bench = app.add_subcommand("bench", "instrumented standard suite");
  bench->add_option("--seed", seed, "rng seed");
  bench->add_flag("--parallel", parallel, "use the worker pool");
  bench->add_flag("--compare-backends", compare,
                  "time the serial vs parallel exhaustive sweep instead");
  bench->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* selftest = app.add_subcommand("selftest", "internal checks");
  selftest->add_option("--trials", trials, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(input, k, format);
    if (wfvs->parsed()) return cmd_wfvs(input, k, format);
    if (approx->parsed()) return cmd_approx(input, format);
    if (kern->parsed()) return cmd_kernelize(input, k, trace_path, format);
    if (oracle->parsed()) return cmd_oracle(input, k, format);
    if (gen->parsed()) return cmd_gen(profile, n, p, k, t, petals, seed);
    if (bench->parsed()) return cmd_bench(seed, parallel, compare, format);
    if (selftest->parsed())
      return run_selftest(trials == "quick", std::cout) ? 0 : 3;
  } catch (const bgvd::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const bgvd::invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
