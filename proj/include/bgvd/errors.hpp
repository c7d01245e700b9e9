#pragma once
#include <stdexcept>
#include <string>

namespace bgvd {

// Bad user input (malformed instance file, out-of-range parameter). CLI exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant (violated precondition, failed self-check). CLI exit code 3.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw invariant_error(msg);
}

}  // namespace bgvd
