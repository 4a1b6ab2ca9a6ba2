#pragma once

#include <stdexcept>
#include <string>

namespace seqbdd {

/// Malformed input file or token stream; message carries the line number
/// where that is known.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Graph shape violates an operation's requirements (e.g. a cycle where an
/// acyclic graph is required).
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A phrase could not be traced through the graph it was supposedly built
/// from; message identifies the phrase.
struct TracingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An enumeration exceeded its configured cap.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace seqbdd
