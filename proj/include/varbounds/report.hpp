#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace varbounds {

enum class BoundKind { Lower, Upper, TwoSided, Info };

std::string_view to_string(BoundKind kind);

/// One checked precondition of a bound, kept for diagnostics even when it
/// fails (failed preconditions make the bound advisory, not absent).
struct Precondition {
  std::string description;
  bool satisfied = false;
};

struct NamedValue {
  std::string name;
  double value = 0.0;
};

/// Outcome of evaluating one named bound on one input: the computed numbers,
/// the applicability verdict with per-precondition diagnostics, and an
/// optional self-check verdict (present only when both sides of an inequality
/// are computable from the input alone).
struct BoundReport {
  std::string name;
  BoundKind kind = BoundKind::Info;
  std::string reference;  // equation or theorem tag, e.g. "eq 1.5"
  std::vector<NamedValue> values;
  bool applicable = true;
  std::vector<Precondition> diagnostics;
  std::optional<bool> satisfied;
  std::string note;

  void add_value(std::string value_name, double value);
  /// nullptr when no value of that name was recorded.
  const double* find_value(std::string_view value_name) const;
  /// Records a precondition; a failed one clears `applicable`.
  void require(std::string description, bool ok);
};

/// x <= y up to the verdict slack tol * max(|x|, |y|, 1).
bool leq_tol(double x, double y, double tol = 1e-9);

/// |x - y| <= tol * max(|x|, |y|, 1).
bool close_rel(double x, double y, double tol);

}  // namespace varbounds
