#include "varbounds/report.hpp"

#include <algorithm>
#include <cmath>

namespace varbounds {

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Lower:
      return "lower";
    case BoundKind::Upper:
      return "upper";
    case BoundKind::TwoSided:
      return "two-sided";
    case BoundKind::Info:
      return "info";
  }
  return "info";
}

void BoundReport::add_value(std::string value_name, double value) {
  values.push_back({std::move(value_name), value});
}

const double* BoundReport::find_value(std::string_view value_name) const {
  for (const auto& v : values) {
    if (v.name == value_name) return &v.value;
  }
  return nullptr;
}

void BoundReport::require(std::string description, bool ok) {
  diagnostics.push_back({std::move(description), ok});
  if (!ok) applicable = false;
}

bool leq_tol(double x, double y, double tol) {
  return x <= y + tol * std::max({std::fabs(x), std::fabs(y), 1.0});
}

bool close_rel(double x, double y, double tol) {
  return std::fabs(x - y) <= tol * std::max({std::fabs(x), std::fabs(y), 1.0});
}

}  // namespace varbounds
