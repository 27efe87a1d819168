#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pgq/forms.hpp"

namespace pgq {

/// One (l, q, w) instance of the verification grid.
struct GridPoint {
  int order;
  Complex q;
  std::string q_label;
  std::string weights_id;
  WeightSeq weights;

  std::string key() const;
};

struct CheckResult {
  std::string name;
  std::string grid_key;
  double residual = 0.0;
  double threshold = 0.0;
  bool passed = false;
  /// The check looked for, and found, a violation (the *-algebra criterion
  /// for non-real q).
  bool expected_violation = false;
  /// Reported but never counted as a failure.
  bool informational = false;
  std::string note;
};

struct VerifyOptions {
  Tolerance tol;
  /// Absolute threshold for closed vs definitional form agreement.
  double form_absolute = 1e-12;
  std::uint64_t seed = 20240601;
  int random_symbols = 50;
  int form_pairs = 200;
  int adjoint_pairs = 100;
  int parser_round_trips = 100;
};

struct VerifyReport {
  std::vector<CheckResult> records;

  int passed() const;
  int failed() const;
  /// 0 iff every non-informational check passed, else 1.
  int exit_status() const { return failed() == 0 ? 0 : 1; }
  /// Largest residual among records with this check name.
  double max_residual(const std::string& check) const;
  bool all_passed(const std::string& check) const;
};

/// Named weight choices of the default grid: "ones", "factorial", "rand1",
/// "rand2", "rand3" (fixed pseudo-random sequences in [0.5, 4)).
WeightSeq grid_weights(const std::string& id, int order);

struct QValue {
  Complex value;
  std::string label;
};

/// q axis of the default grid: 1, -1, 0.5, 2, exp(i pi/3).
std::vector<QValue> default_q_axis();
/// Weight axis of the default grid.
std::vector<std::string> default_weight_ids();

/// l in {2..6} x q in {1, -1, 0.5, 2, exp(i pi/3)} x the five weight choices.
std::vector<GridPoint> default_grid();

/// Every invariant at one grid point, in a fixed order.
std::vector<CheckResult> verify_point(const GridPoint& point, const VerifyOptions& options);

/// Runs all points; records are ordered by grid position then check order.
VerifyReport run_verification(std::span<const GridPoint> grid, const VerifyOptions& options);

/// Names of every check verify_point emits, in emission order.
const std::vector<std::string>& check_names();

}  // namespace pgq
