#pragma once

#include <iosfwd>

#include "ado/ado.hpp"

namespace ado {

struct BraidParseError : std::runtime_error {
  explicit BraidParseError(const std::string& what)
      : std::runtime_error(what) {}
};

// Tokens are signed generator indices ("1 -2 1 -2") or caret syntax
// ("s1^3", "s2^-1"); errors carry the offending token position.
BraidWord parse_braid(const std::string& text, int strands);

// "a+bi", "a-bi", "bi" or a plain real.
std::complex<double> parse_lambda(const std::string& text);

struct RunConfig {
  std::string braidText;   // exactly one of braidText/knot is set
  std::string knot;
  int strands = 0;
  int color = 2;
  std::string method = "both";  // direct | topological | both
  std::optional<std::complex<double>> lambda;
  std::string format = "text";  // text | json
  int maxColor = 5;
};

// Exit codes: 0 ok, 2 parse/usage error, 3 degenerate specialization,
// 4 pipeline mismatch.
enum ExitCode {
  kExitOk = 0,
  kExitParseError = 2,
  kExitDegenerate = 3,
  kExitMismatch = 4,
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ado
