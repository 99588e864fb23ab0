#pragma once

#include <stdexcept>
#include <string>

namespace nlfft {

// Exit-code contract shared with the command line tool:
//   0 success, 2 invalid input, 3 numerical failure, 4 I/O failure.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg, int exit_code)
      : std::runtime_error(msg), code(exit_code) {}
  int code;
};

// Caller handed us something outside the documented domain.
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error(msg, 2) {}
};

// The input was plausible but the computation lost its footing
// (e.g. a_{0,k} <= 0 during layer stripping, root pairing failure).
struct NumericalFailure : Error {
  explicit NumericalFailure(const std::string& msg) : Error(msg, 3) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg, 4) {}
};

}  // namespace nlfft
