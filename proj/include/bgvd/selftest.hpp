#pragma once
#include <iosfwd>

namespace bgvd {

// Cross-checks every solver against its independent brute-force reference on
// seeded random corpora, plus the structural invariants the solvers rely on.
// Prints one line per group to `out`; returns true iff every group passed.
// `quick` shrinks the trial counts to continuous-integration size.
bool run_selftest(bool quick, std::ostream& out);

}  // namespace bgvd
