#pragma once

#include <stdexcept>
#include <string>

namespace permstack {

// Malformed textual input (words, pattern lists, literal words, step strings).
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A pattern set that cannot drive the machine: empty, a length-1 pattern,
// a non-permutation pattern, or a non-reduced set where one is required.
class pattern_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive work requested beyond the configured size cap.
class size_limit_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace permstack
