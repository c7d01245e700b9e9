#pragma once
#include <gmpxx.h>

#include <string>

#include "bgvd/errors.hpp"

namespace bgvd {

// Exact rational arithmetic for vertex weights. No floating point anywhere in
// the solvers; mpq_class keeps values canonical after every operation.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// "num/den" with positive den; a bare integer is accepted as den = 1.
Rat parse_rat(const std::string& s);

// Canonical form "num/den" (den always printed, e.g. "3/1").
std::string format_rat(const Rat& q);

}  // namespace bgvd
