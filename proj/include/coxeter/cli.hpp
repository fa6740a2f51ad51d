#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "coxeter/io.hpp"

namespace coxeter::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvalidInput = 1,
  kCapExceeded = 2,
  kVerificationFailed = 3,
};

enum class Format { Text, Json };

struct Options {
  std::vector<std::string> words;  // --word, repeatable (mul multiplies them in order)
  std::string subset;              // --subset; empty means all of S
  std::size_t cap = 20'000;
  unsigned radius = 8;
  Format format = Format::Text;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{
      "validate",  "reduce",    "mul",     "inv",    "descents", "components",
      "spherical", "longest",   "essential", "center", "enumerate", "verify"};
  return names;
}

/// Runs one command against a loaded document. Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int dispatch(const std::string& command, const SystemDocument& doc, const Options& options,
             std::ostream& out, std::ostream& err);

/// Full command-line entry point (argument parsing, document loading).
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace coxeter::cli
