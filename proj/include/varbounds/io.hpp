#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "varbounds/complex_stats.hpp"
#include "varbounds/matrix.hpp"
#include "varbounds/oracle.hpp"
#include "varbounds/poly_span.hpp"
#include "varbounds/real_bounds.hpp"
#include "varbounds/report.hpp"

namespace varbounds::io {

inline constexpr std::string_view kToolName = "varbounds";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Parse failure with origin/line/column context baked into what().
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string_view origin, std::size_t line, std::size_t column,
             std::string_view message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class MatrixFormat { Auto, MatrixMarket, Csv };
enum class PointFormat { Auto, Csv, Json };

/// Matrix Market (coordinate or array, real, general or symmetric) or square
/// CSV with '#' comment lines. Auto keys off the %%MatrixMarket banner.
DenseMatrix parse_matrix_text(std::string_view text, MatrixFormat format,
                              std::string_view origin);
DenseMatrix parse_matrix(const std::filesystem::path& path,
                         MatrixFormat format = MatrixFormat::Auto);

/// Array-format Matrix Market serialization; parse(write(m)) == m exactly.
std::string write_matrix_market_array(const DenseMatrix& matrix);

/// Two-column CSV (re,im) or a JSON array of {"re": x, "im": y} objects.
ComplexSample parse_points_text(std::string_view text, PointFormat format,
                                std::string_view origin);
ComplexSample parse_points(const std::filesystem::path& path,
                           PointFormat format = PointFormat::Auto);

/// Whitespace- or comma-separated reals, '#' comment lines allowed.
RealSample parse_real_sample_text(std::string_view text,
                                  std::string_view origin);
RealSample parse_real_sample(const std::filesystem::path& path);

/// Coefficient list "1, a1, ..., an" with the mandatory leading 1.
MonicPoly parse_poly(std::string_view text, std::string_view origin = "<poly>");

enum class AnalysisKind { Stats, Disk, RealBounds, EigenBounds, Span, Verify };
std::string_view to_string(AnalysisKind kind);

struct AnalysisOptions {
  std::optional<double> nu;
  bool assert_nonneg_spectrum = false;
  double tol = 1e-9;
  bool with_oracle = false;
  std::vector<std::size_t> subset;
  MatrixFormat matrix_format = MatrixFormat::Auto;
  PointFormat point_format = PointFormat::Auto;
};

struct AnalysisRequest {
  AnalysisKind kind = AnalysisKind::Stats;
  /// File path; for Span an inline coefficient list is also accepted.
  std::string input;
  AnalysisOptions options;
};

struct OracleCheckEntry {
  std::string bound;
  std::string target;
  oracle::CheckStatus status = oracle::CheckStatus::Skipped;
  double margin_lower = 0.0;
  double margin_upper = 0.0;
  bool has_lower = false;
  bool has_upper = false;
};

/// One analysis result; serializes deterministically (fixed field order,
/// numbers at 17 significant digits) so identical inputs and options give
/// byte-identical documents.
struct ReportDocument {
  std::string kind;
  std::string input_path;
  std::string digest;
  AnalysisOptions options;
  std::vector<BoundReport> reports;
  bool has_oracle_block = false;
  std::string oracle_note;
  std::vector<NamedValue> truths;
  std::vector<OracleCheckEntry> checks;

  bool all_checks_passed() const;
  std::string to_json() const;
};

/// Dispatches the request to the right modules; with the oracle attached the
/// document carries truths and pass/fail margins for every applicable bound.
ReportDocument run(const AnalysisRequest& request);

std::string fnv1a_digest(std::string_view bytes);

}  // namespace varbounds::io
