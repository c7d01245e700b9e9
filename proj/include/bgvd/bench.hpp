#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bgvd/instance_io.hpp"

namespace bgvd {

struct BenchRow {
  std::string instance;
  int n = 0;
  long long m = 0;
  int k = 0;
  bool feasible = false;
  long long nodes = 0;      // solve_bgvd branching nodes
  double node_budget = 0;   // 4^(k+1) * (n+1)
  long long leaves = 0;     // heaviest single disjoint-call leaf count
  double leaf_ratio = 0;    // leaves / 1.618^(2k'+2) for that call
  int kernel_n = -1;        // residual kernel size, -1 when skipped
  double kernel_ratio = 0;  // kernel_n / k^4
  int approx = -1;          // factor-4 deletion set size
  int opt = -1;             // exhaustive optimum where the size allows
  double approx_ratio = 0;
  double millis = 0;  // wall time; never part of determinism comparisons
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double max_node_ratio = 0;
  double max_leaf_ratio = 0;
  double max_kernel_ratio = 0;
  double max_approx_ratio = 0;
  bool bounds_ok = true;  // every instrumented ceiling respected
  std::string backend;    // "openmp" or "serial" worker pool
};

// The planted part of the benchmark suite: one instance per k = 2..8,
// paired with its budget k. Shared with the acceptance harness so the
// branching-bound and kernel-size checks run on the same corpus.
std::vector<std::pair<Instance, int>> planted_suite(uint64_t seed);

// Fixed suite derived from `seed`: the planted instances plus flowers,
// disjoint 4-cycle groups and oracle-sized random graphs. With `parallel`
// the rows are computed by an OpenMP worker pool and merged in instance
// order, so the report matches the serial one apart from timings.
BenchReport run_bench(uint64_t seed, bool parallel);

std::string bench_text_table(const BenchReport& r);

// Serial vs OpenMP exhaustive-sweep comparison on a few 14-16 vertex
// graphs; the optima must agree, the table shows both timings.
std::string oracle_backend_comparison(uint64_t seed);

}  // namespace bgvd
