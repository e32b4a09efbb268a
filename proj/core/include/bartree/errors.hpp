#pragma once

#include <stdexcept>
#include <string>

namespace bartree {

// Error taxonomy shared by the library and the command line tool.
// The tool maps these onto exit codes: ParseError -> 1 (I/O, malformed
// input), ValidationError -> 2 (domain violations), InternalError -> 3
// (a cross-check between two computation routes disagreed).

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bartree
