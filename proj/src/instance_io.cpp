#include "bgvd/instance_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "bgvd/errors.hpp"

namespace bgvd {
namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw input_error("line " + std::to_string(line) + ": " + what);
}

long long to_ll(const std::string& tok, int line, const std::string& what) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    fail(line, what + ": not an integer '" + tok + "'");
  }
  if (pos != tok.size()) fail(line, what + ": trailing junk in '" + tok + "'");
  return v;
}

}  // namespace

WeightedGraph Instance::weighted() const {
  require(problem == Problem::wfvs, "weighted() on a bgvd instance");
  WeightedGraph wg;
  wg.g = g;
  wg.w = w;
  wg.check();
  return wg;
}

Instance parse_instance(std::istream& in) {
  Instance inst;
  bool have_header = false;
  long long declared_m = 0, seen_m = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) fail(lineno, "duplicate header");
      std::string prob;
      if (!(ls >> prob)) fail(lineno, "header without a problem name");
      long long n = 0;
      std::string tok;
      if (!(ls >> tok)) fail(lineno, "header without n");
      n = to_ll(tok, lineno, "n");
      if (!(ls >> tok)) fail(lineno, "header without m");
      declared_m = to_ll(tok, lineno, "m");
      if (prob == "bgvd") {
        inst.problem = Instance::Problem::bgvd;
      } else if (prob == "wfvs") {
        inst.problem = Instance::Problem::wfvs;
        if (!(ls >> tok)) fail(lineno, "wfvs header without k");
        long long k = to_ll(tok, lineno, "k");
        if (k < 0) fail(lineno, "negative k");
        inst.k = (int)k;
      } else {
        fail(lineno, "unknown problem '" + prob + "'");
      }
      if (ls >> tok) fail(lineno, "trailing junk after header");
      if (n < 0) fail(lineno, "negative n");
      if (declared_m < 0) fail(lineno, "negative m");
      if (n > 1000000) fail(lineno, "n too large");
      for (int v = 1; v <= (int)n; ++v) inst.g.add_vertex(v);
      have_header = true;
      continue;
    }
    if (tag == "e") {
      if (!have_header) fail(lineno, "edge before header");
      std::string ut, vt, extra;
      if (!(ls >> ut >> vt)) fail(lineno, "edge needs two endpoints");
      if (ls >> extra) fail(lineno, "trailing junk after edge");
      long long u = to_ll(ut, lineno, "endpoint");
      long long v = to_ll(vt, lineno, "endpoint");
      if (u < 1 || u > inst.g.n() || v < 1 || v > inst.g.n())
        fail(lineno, "endpoint out of range");
      inst.g.add_edge((int)u, (int)v);
      ++seen_m;
      continue;
    }
    if (tag == "w") {
      if (!have_header) fail(lineno, "weight before header");
      if (inst.problem != Instance::Problem::wfvs)
        fail(lineno, "weight line in a bgvd instance");
      std::string vt, qt, extra;
      if (!(ls >> vt >> qt)) fail(lineno, "weight needs a vertex and a value");
      if (ls >> extra) fail(lineno, "trailing junk after weight");
      long long v = to_ll(vt, lineno, "vertex");
      if (v < 1 || v > inst.g.n()) fail(lineno, "vertex out of range");
      if (inst.w.count((int)v)) fail(lineno, "duplicate weight for vertex " +
                                                 std::to_string(v));
      Rat q;
      try {
        q = parse_rat(qt);
      } catch (const input_error& e) {
        fail(lineno, e.what());
      }
      if (q < 0) fail(lineno, "negative weight");
      inst.w[(int)v] = q;
      continue;
    }
    fail(lineno, "unknown line tag '" + tag + "'");
  }
  if (!have_header) fail(lineno, "missing header");
  if (seen_m != declared_m)
    fail(lineno, "header declares " + std::to_string(declared_m) +
                     " edges, body has " + std::to_string(seen_m));
  if (inst.problem == Instance::Problem::wfvs) {
    for (int v : inst.g.vertices())
      if (!inst.w.count(v)) inst.w[v] = rat(1);
  }
  return inst;
}

Instance parse_instance_file(const std::string& path) {
  if (path == "-") return parse_instance(std::cin);
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  const bool wfvs = inst.problem == Instance::Problem::wfvs;
  out << "p " << (wfvs ? "wfvs" : "bgvd") << " " << inst.g.n() << " "
      << inst.g.m();
  if (wfvs) out << " " << inst.k;
  out << "\n";
  for (auto [u, v, mult] : edge_list(inst.g))
    for (int i = 0; i < mult; ++i) out << "e " << u << " " << v << "\n";
  if (wfvs)
    for (int v : inst.g.vertices())
      out << "w " << v << " " << format_rat(inst.w.at(v)) << "\n";
  return out.str();
}

}  // namespace bgvd
