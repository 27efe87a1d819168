#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pgq/forms.hpp"

namespace pgq::cli {

enum ExitStatus : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Thrown for invalid configurations; mapped to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<int> order;
  std::string q_text = "1";
  Complex q = 1.0;
  std::string weights_text = "ones";
  double tolerance = 1e-9;
  std::string format = "json";
  std::string output_path;  // empty: standard output
  std::uint64_t seed = 20240601;
};

/// Weights from "ones", "factorial", "qfactorial", "rand1".."rand3" or an
/// explicit comma list. Throws ConfigError.
WeightSeq resolve_weights(const std::string& text, std::optional<int> order, Complex q);

/// Runs the tool on argv-style arguments (without the program name).
/// Output goes to `out` unless --output is given; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgq::cli
