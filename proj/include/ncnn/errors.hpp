#pragma once

#include <stdexcept>
#include <string>

namespace ncnn {

// Malformed input: a word with a label not occurring twice, a non-contiguous
// pattern, a labeling of the wrong size, an index out of range.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well-formed but too expensive for the chosen route, e.g.
// brute force beyond the enumeration cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// solve_algebraic precondition failure.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RootNotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be written or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ncnn
