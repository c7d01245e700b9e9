#include "bgvd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bgvd/approx.hpp"
#include "bgvd/bgvd_solver.hpp"
#include "bgvd/errors.hpp"
#include "bgvd/generator.hpp"
#include "bgvd/kernel.hpp"
#include "bgvd/oracle.hpp"

namespace bgvd {
namespace {

double now_ms() {
  auto t = std::chrono::steady_clock::now().time_since_epoch();
  return std::chrono::duration<double, std::milli>(t).count();
}

struct Job {
  std::string name;
  Instance inst;
  int k = 0;
  bool kernel = false;  // also run the kernelizer
  bool oracle = false;  // also run the exhaustive optimum
};

BenchRow run_job(const Job& job) {
  BenchRow row;
  row.instance = job.name;
  row.n = job.inst.g.n();
  row.m = job.inst.g.m();
  row.k = job.k;
  double t0 = now_ms();
  const MultiGraph& g = job.inst.g;

  auto res = solve_bgvd(g, job.k);
  row.feasible = res.has_value();
  row.node_budget = std::pow(4.0, job.k + 1) * (row.n + 1);
  if (res) {
    row.nodes = (long long)res->stats.nodes;
    row.leaves = (long long)res->stats.wfvs.max_call_leaves;
    row.leaf_ratio = res->stats.wfvs.worst_leaf_ratio;
  }

  if (job.kernel) {
    KernelState st = kernelize(g, job.k);
    row.kernel_n = st.decided ? 0 : st.g.n();
    if (job.k >= 1)
      row.kernel_ratio = (double)row.kernel_n / std::pow((double)job.k, 4.0);
  }

  row.approx = (int)approx_bgvd_4(g).size();
  if (job.oracle && row.n <= 16) {
    auto opt = brute_min_bvd(g);
    require(opt.has_value(), "uncapped exhaustive sweep cannot fail");
    row.opt = (int)opt->size();
    if (row.opt > 0) row.approx_ratio = (double)row.approx / row.opt;
  }
  row.millis = now_ms() - t0;
  return row;
}

}  // namespace

std::vector<std::pair<Instance, int>> planted_suite(uint64_t seed) {
  std::vector<std::pair<Instance, int>> out;
  for (int k = 2; k <= 8; ++k) {
    int n = 2 * k + 8;
    out.push_back({gen_planted_bgvd(n, k, seed + (uint64_t)k), k});
  }
  return out;
}

BenchReport run_bench(uint64_t seed, bool parallel) {
  std::vector<Job> jobs;
  for (auto& [inst, k] : planted_suite(seed)) {
    Job j;
    j.name = "planted-k" + std::to_string(k);
    j.inst = inst;
    j.k = k;
    j.kernel = true;
    j.oracle = false;
    jobs.push_back(std::move(j));
  }
  for (int petals = 3; petals <= 5; ++petals) {
    Job j;
    j.name = "flower-" + std::to_string(petals);
    j.inst = gen_flower(petals, seed + 100 + (uint64_t)petals);
    j.k = 1;
    j.kernel = true;
    j.oracle = true;
    jobs.push_back(std::move(j));
  }
  for (int t = 2; t <= 4; ++t) {
    Job j;
    j.name = "disjoint-c4-" + std::to_string(t);
    j.inst = gen_disjoint_c4(t, seed + 200 + (uint64_t)t);
    j.k = t;
    j.kernel = true;
    j.oracle = true;
    jobs.push_back(std::move(j));
  }
  for (int i = 0; i < 4; ++i) {
    Job j;
    int n = 12 + (i % 3);
    j.name = "gnp-" + std::to_string(n) + "-" + std::to_string(i);
    j.inst = gen_random_gnp(n, i % 2 == 0 ? 0.3 : 0.45,
                            seed + 300 + (uint64_t)i);
    j.k = 4;
    j.kernel = false;
    j.oracle = true;
    jobs.push_back(std::move(j));
  }

  BenchReport rep;
  rep.rows.resize(jobs.size());
#ifdef _OPENMP
  rep.backend = parallel ? "openmp" : "serial";
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < jobs.size(); ++i) rep.rows[i] = run_job(jobs[i]);
  } else {
    for (size_t i = 0; i < jobs.size(); ++i) rep.rows[i] = run_job(jobs[i]);
  }
#else
  rep.backend = "serial";
  (void)parallel;
  for (size_t i = 0; i < jobs.size(); ++i) rep.rows[i] = run_job(jobs[i]);
#endif

  for (const BenchRow& r : rep.rows) {
    if (r.node_budget > 0)
      rep.max_node_ratio =
          std::max(rep.max_node_ratio, (double)r.nodes / r.node_budget);
    rep.max_leaf_ratio = std::max(rep.max_leaf_ratio, r.leaf_ratio);
    rep.max_kernel_ratio = std::max(rep.max_kernel_ratio, r.kernel_ratio);
    rep.max_approx_ratio = std::max(rep.max_approx_ratio, r.approx_ratio);
  }
  rep.bounds_ok = rep.max_node_ratio <= 1.0 && rep.max_leaf_ratio <= 1.0 &&
                  rep.max_approx_ratio <= 4.0;
  return rep;
}

std::string bench_text_table(const BenchReport& r) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "instance" << std::right
      << std::setw(5) << "n" << std::setw(6) << "m" << std::setw(4) << "k"
      << std::setw(10) << "nodes" << std::setw(10) << "node%" << std::setw(9)
      << "leaf%" << std::setw(9) << "kern" << std::setw(8) << "apx"
      << std::setw(6) << "opt" << std::setw(10) << "ms" << "\n";
  for (const BenchRow& row : r.rows) {
    out << std::left << std::setw(16) << row.instance << std::right
        << std::setw(5) << row.n << std::setw(6) << row.m << std::setw(4)
        << row.k << std::setw(10) << row.nodes << std::setw(10)
        << std::fixed << std::setprecision(2)
        << (row.node_budget > 0 ? 100.0 * row.nodes / row.node_budget : 0.0)
        << std::setw(9) << 100.0 * row.leaf_ratio << std::setw(9)
        << row.kernel_n << std::setw(8) << row.approx << std::setw(6)
        << row.opt << std::setw(10) << std::setprecision(1) << row.millis
        << "\n";
  }
  out << "max ratios: nodes " << std::setprecision(4) << r.max_node_ratio
      << ", leaves " << r.max_leaf_ratio << ", kernel " << r.max_kernel_ratio
      << ", approx " << r.max_approx_ratio << "; bounds "
      << (r.bounds_ok ? "ok" : "EXCEEDED") << "; backend " << r.backend
      << "\n";
  return out.str();
}

std::string oracle_backend_comparison(uint64_t seed) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "graph" << std::right << std::setw(5)
      << "n" << std::setw(6) << "opt" << std::setw(12) << "serial-ms"
      << std::setw(12) << "openmp-ms" << "\n";
  for (int i = 0; i < 3; ++i) {
    int n = 14 + i;
    MultiGraph g = gen_random_gnp(n, 0.25, seed + (uint64_t)i).g;
    double t0 = now_ms();
    auto serial = brute_min_bvd(g);
    double t1 = now_ms();
    auto par = brute_min_bvd_parallel(g);
    double t2 = now_ms();
    require(serial == par, "oracle backends disagree");
    out << std::left << std::setw(12) << ("gnp-" + std::to_string(n))
        << std::right << std::setw(5) << n << std::setw(6)
        << (serial ? (int)serial->size() : -1) << std::setw(12) << std::fixed
        << std::setprecision(1) << (t1 - t0) << std::setw(12) << (t2 - t1)
        << "\n";
  }
  out << "backend: " << oracle_backend() << "\n";
  return out.str();
}

}  // namespace bgvd
