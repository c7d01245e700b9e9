#pragma once
#include <iosfwd>
#include <map>
#include <string>

#include "bgvd/multigraph.hpp"

namespace bgvd {

// DIMACS-style instance file:
//   c <free-form comment>
//   p bgvd <n> <m>          or          p wfvs <n> <m> <k>
//   e <u> <v>               1-indexed; a repeated line raises multiplicity
//   w <v> <num>/<den>       wfvs only; omitted vertices default to weight 1
// The header must come first and match the body: vertices are exactly 1..n
// and the edge lines sum to m (loops count once, like every other line).
struct Instance {
  enum class Problem { bgvd, wfvs };
  Problem problem = Problem::bgvd;
  MultiGraph g;           // vertices 1..n
  std::map<int, Rat> w;   // full weight map for wfvs, empty for bgvd
  int k = 0;              // wfvs header budget (bgvd takes k from the caller)

  WeightedGraph weighted() const;  // wfvs instances only
};

// Throw input_error with a line number on any malformed input.
Instance parse_instance(std::istream& in);
// "-" reads standard input.
Instance parse_instance_file(const std::string& path);

// Deterministic canonical text: header, then sorted edge lines (repeated per
// multiplicity), then one weight line per vertex for wfvs instances.
std::string serialize_instance(const Instance& inst);

}  // namespace bgvd
