#pragma once

#include <stdexcept>

namespace dagsp {

// Invalid graph construction or unparseable graph text.
struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A topological sort was requested on a graph containing a directed cycle.
struct CycleDetected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A nonnegative-weight precondition was violated.
struct NegativeWeight : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every sampling attempt left a cyclic residual graph.
struct ResidualCyclic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal corruption guard: a successor-table walk did not behave like a
// path tree (missing link, or more steps than vertices).
struct MalformedTree : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A brute-force oracle was asked to enumerate more than it is sized for.
struct SizeLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dagsp
