#include "varbounds/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "varbounds/enclosing_disk.hpp"
#include "varbounds/spectral_bounds.hpp"

namespace varbounds::io {

namespace {

std::string make_message(std::string_view origin, std::size_t line,
                         std::size_t column, std::string_view message) {
  std::ostringstream out;
  out << origin;
  if (line > 0) {
    out << ":" << line;
    if (column > 0) out << ":" << column;
  }
  out << ": " << message;
  return out.str();
}

struct Token {
  std::string_view text;
  std::size_t column = 1;  // 1-based
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = end == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Strict field split on a separator; empty fields are kept.
std::vector<Token> split_fields(std::string_view line, char sep) {
  std::vector<Token> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(sep, start);
    const std::string_view raw = end == std::string_view::npos
                                     ? line.substr(start)
                                     : line.substr(start, end - start);
    fields.push_back({trim(raw), start + 1});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return fields;
}

// Loose split on commas and whitespace; empty fields are dropped.
std::vector<Token> split_loose(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\r';
  };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

double parse_number(const Token& token, std::string_view origin,
                    std::size_t line) {
  std::string_view s = token.text;
  if (s.empty()) throw ParseError(origin, line, token.column, "empty field");
  bool negate = false;
  if (s.front() == '+') {
    s.remove_prefix(1);
  } else if (s.front() == '-') {
    negate = true;
    s.remove_prefix(1);
  }
  double value = 0.0;
  const auto result = std::from_chars(s.data(), s.data() + s.size(), value);
  if (result.ec != std::errc{} || result.ptr != s.data() + s.size())
    throw ParseError(origin, line, token.column,
                     "non-numeric token '" + std::string(token.text) + "'");
  if (negate) value = -value;
  if (!std::isfinite(value))
    throw ParseError(origin, line, token.column,
                     "non-finite value '" + std::string(token.text) + "'");
  return value;
}

long parse_integer(const Token& token, std::string_view origin,
                   std::size_t line) {
  long value = 0;
  const std::string_view s = token.text;
  const auto result = std::from_chars(s.data(), s.data() + s.size(), value);
  if (result.ec != std::errc{} || result.ptr != s.data() + s.size())
    throw ParseError(origin, line, token.column,
                     "expected an integer, got '" + std::string(s) + "'");
  return value;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool comment_or_blank(std::string_view line) {
  const std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

DenseMatrix parse_matrix_market(std::string_view text, std::string_view origin) {
  const auto lines = split_lines(text);
  if (lines.empty() || !lines[0].starts_with("%%MatrixMarket"))
    throw ParseError(origin, 1, 1, "missing %%MatrixMarket banner");
  const auto header = split_loose(lines[0]);
  if (header.size() < 5)
    throw ParseError(origin, 1, 1,
                     "malformed header: expected "
                     "'%%MatrixMarket matrix <format> real <symmetry>'");
  const std::string object = lowercase(header[1].text);
  const std::string format = lowercase(header[2].text);
  const std::string field = lowercase(header[3].text);
  const std::string symmetry = lowercase(header[4].text);
  if (object != "matrix")
    throw ParseError(origin, 1, header[1].column, "only 'matrix' objects supported");
  if (format != "coordinate" && format != "array")
    throw ParseError(origin, 1, header[2].column,
                     "format must be 'coordinate' or 'array'");
  if (field != "real")
    throw ParseError(origin, 1, header[3].column, "field must be 'real'");
  if (symmetry != "general" && symmetry != "symmetric")
    throw ParseError(origin, 1, header[4].column,
                     "symmetry must be 'general' or 'symmetric'");
  const bool symmetric = symmetry == "symmetric";

  std::size_t ln = 1;  // 0-based index of the next unread line
  auto next_line = [&]() -> std::size_t {
    while (ln < lines.size()) {
      const std::string_view t = trim(lines[ln]);
      if (!t.empty() && t.front() != '%') return ln++;
      ++ln;
    }
    throw ParseError(origin, lines.size(), 1, "unexpected end of file");
  };

  const std::size_t size_ln = next_line();
  const auto size_tokens = split_loose(lines[size_ln]);

  if (format == "coordinate") {
    if (size_tokens.size() != 3)
      throw ParseError(origin, size_ln + 1, 1,
                       "size line must be '<rows> <cols> <entries>'");
    const long rows = parse_integer(size_tokens[0], origin, size_ln + 1);
    const long cols = parse_integer(size_tokens[1], origin, size_ln + 1);
    const long nnz = parse_integer(size_tokens[2], origin, size_ln + 1);
    if (rows <= 0 || cols <= 0 || nnz < 0)
      throw ParseError(origin, size_ln + 1, 1, "invalid matrix size");
    if (rows != cols)
      throw ParseError(origin, size_ln + 1, 1,
                       "non-square matrix: " + std::to_string(rows) + " x " +
                           std::to_string(cols));
    const std::size_t n = static_cast<std::size_t>(rows);
    DenseMatrix matrix(n);
    std::vector<bool> seen(n * n, false);
    for (long e = 0; e < nnz; ++e) {
      const std::size_t entry_ln = next_line();
      const auto tok = split_loose(lines[entry_ln]);
      if (tok.size() != 3)
        throw ParseError(origin, entry_ln + 1, 1,
                         "entry line must be '<row> <col> <value>'");
      const long i = parse_integer(tok[0], origin, entry_ln + 1);
      const long j = parse_integer(tok[1], origin, entry_ln + 1);
      if (i < 1 || i > rows)
        throw ParseError(origin, entry_ln + 1, tok[0].column,
                         "row index out of range");
      if (j < 1 || j > cols)
        throw ParseError(origin, entry_ln + 1, tok[1].column,
                         "column index out of range");
      const double v = parse_number(tok[2], origin, entry_ln + 1);
      std::size_t a = static_cast<std::size_t>(i - 1);
      std::size_t b = static_cast<std::size_t>(j - 1);
      const std::size_t key = symmetric ? std::min(a, b) * n + std::max(a, b)
                                        : a * n + b;
      if (seen[key])
        throw ParseError(origin, entry_ln + 1, tok[0].column, "duplicate entry");
      seen[key] = true;
      matrix(a, b) = v;
      if (symmetric) matrix(b, a) = v;
    }
    while (ln < lines.size()) {
      if (!comment_or_blank(lines[ln]) && trim(lines[ln]).front() != '%')
        throw ParseError(origin, ln + 1, 1, "unexpected data after entries");
      ++ln;
    }
    return matrix;
  }

  // array format
  if (size_tokens.size() != 2)
    throw ParseError(origin, size_ln + 1, 1, "size line must be '<rows> <cols>'");
  const long rows = parse_integer(size_tokens[0], origin, size_ln + 1);
  const long cols = parse_integer(size_tokens[1], origin, size_ln + 1);
  if (rows <= 0 || cols <= 0)
    throw ParseError(origin, size_ln + 1, 1, "invalid matrix size");
  if (rows != cols)
    throw ParseError(origin, size_ln + 1, 1,
                     "non-square matrix: " + std::to_string(rows) + " x " +
                         std::to_string(cols));
  const std::size_t n = static_cast<std::size_t>(rows);
  const std::size_t expected = symmetric ? n * (n + 1) / 2 : n * n;
  DenseMatrix matrix(n);
  // Array values run down the columns; symmetric storage holds the lower
  // triangle (diagonal included) of each column.
  std::size_t count = 0;
  std::size_t col = 0;
  std::size_t row = symmetric ? 0 : 0;
  while (count < expected) {
    const std::size_t entry_ln = next_line();
    for (const Token& tok : split_loose(lines[entry_ln])) {
      if (count >= expected)
        throw ParseError(origin, entry_ln + 1, tok.column,
                         "unexpected data after entries");
      const double v = parse_number(tok, origin, entry_ln + 1);
      if (symmetric) {
        matrix(row, col) = v;
        matrix(col, row) = v;
        ++row;
        if (row == n) {
          ++col;
          row = col;
        }
      } else {
        matrix(row, col) = v;
        ++row;
        if (row == n) {
          ++col;
          row = 0;
        }
      }
      ++count;
    }
  }
  while (ln < lines.size()) {
    if (!comment_or_blank(lines[ln]) && trim(lines[ln]).front() != '%')
      throw ParseError(origin, ln + 1, 1, "unexpected data after entries");
    ++ln;
  }
  return matrix;
}

DenseMatrix parse_matrix_csv(std::string_view text, std::string_view origin) {
  const auto lines = split_lines(text);
  std::vector<std::vector<double>> rows;
  std::size_t width = 0;
  std::size_t last_row_line = 0;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (comment_or_blank(lines[ln])) continue;
    const auto fields = split_fields(lines[ln], ',');
    std::vector<double> row;
    row.reserve(fields.size());
    for (const Token& f : fields) row.push_back(parse_number(f, origin, ln + 1));
    if (rows.empty()) {
      width = row.size();
    } else if (row.size() != width) {
      throw ParseError(origin, ln + 1, 1,
                       "ragged row: expected " + std::to_string(width) +
                           " columns, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
    last_row_line = ln + 1;
  }
  if (rows.empty()) throw ParseError(origin, 1, 1, "no matrix data");
  if (rows.size() != width)
    throw ParseError(origin, last_row_line, 1,
                     "non-square matrix: " + std::to_string(rows.size()) +
                         " rows x " + std::to_string(width) + " columns");
  const std::size_t n = rows.size();
  DenseMatrix matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) matrix(i, j) = rows[i][j];
  return matrix;
}

ComplexSample parse_points_csv(std::string_view text, std::string_view origin) {
  const auto lines = split_lines(text);
  std::vector<Complex> points;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (comment_or_blank(lines[ln])) continue;
    const auto fields = split_fields(lines[ln], ',');
    if (fields.size() < 2)
      throw ParseError(origin, ln + 1, 1, "missing column: expected 're,im'");
    if (fields.size() > 2)
      throw ParseError(origin, ln + 1, fields[2].column,
                       "expected exactly two columns 're,im'");
    const double re = parse_number(fields[0], origin, ln + 1);
    const double im = parse_number(fields[1], origin, ln + 1);
    points.emplace_back(re, im);
  }
  if (points.empty()) throw ParseError(origin, 1, 1, "no points");
  return ComplexSample(std::move(points));
}

ComplexSample parse_points_json(std::string_view text, std::string_view origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(origin, line, 0, e.what());
  }
  if (!doc.is_array()) throw ParseError(origin, 1, 1, "expected a JSON array");
  std::vector<Complex> points;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const auto& el = doc[k];
    if (!el.is_object() || !el.contains("re") || !el.contains("im") ||
        !el["re"].is_number() || !el["im"].is_number())
      throw ParseError(origin, 0, 0,
                       "element " + std::to_string(k) +
                           ": expected an object with numeric 're' and 'im'");
    const double re = el["re"].get<double>();
    const double im = el["im"].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw ParseError(origin, 0, 0,
                       "element " + std::to_string(k) + ": non-finite value");
    points.emplace_back(re, im);
  }
  if (points.empty()) throw ParseError(origin, 1, 1, "no points");
  return ComplexSample(std::move(points));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void append_escaped(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

std::string json_values(const std::vector<NamedValue>& values) {
  std::string out = "{";
  bool first = true;
  for (const NamedValue& v : values) {
    if (!first) out += ", ";
    first = false;
    append_escaped(out, v.name);
    out += ": ";
    append_number(out, v.value);
  }
  out += "}";
  return out;
}

std::string json_report(const BoundReport& r, const std::string& pad) {
  std::string out = pad + "{\n";
  const std::string inner = pad + "  ";
  out += inner + "\"name\": ";
  append_escaped(out, r.name);
  out += ",\n" + inner + "\"kind\": ";
  append_escaped(out, to_string(r.kind));
  out += ",\n" + inner + "\"reference\": ";
  append_escaped(out, r.reference);
  out += ",\n" + inner + "\"applicable\": ";
  out += r.applicable ? "true" : "false";
  if (r.satisfied.has_value()) {
    out += ",\n" + inner + "\"satisfied\": ";
    out += *r.satisfied ? "true" : "false";
  }
  if (!r.values.empty()) {
    out += ",\n" + inner + "\"values\": " + json_values(r.values);
  }
  if (!r.diagnostics.empty()) {
    out += ",\n" + inner + "\"diagnostics\": [\n";
    for (std::size_t i = 0; i < r.diagnostics.size(); ++i) {
      out += inner + "  {\"check\": ";
      append_escaped(out, r.diagnostics[i].description);
      out += ", \"ok\": ";
      out += r.diagnostics[i].satisfied ? "true" : "false";
      out += "}";
      if (i + 1 < r.diagnostics.size()) out += ",";
      out += "\n";
    }
    out += inner + "]";
  }
  if (!r.note.empty()) {
    out += ",\n" + inner + "\"note\": ";
    append_escaped(out, r.note);
  }
  out += "\n" + pad + "}";
  return out;
}

std::string_view status_string(oracle::CheckStatus status) {
  switch (status) {
    case oracle::CheckStatus::Pass:
      return "pass";
    case oracle::CheckStatus::Fail:
      return "fail";
    case oracle::CheckStatus::Skipped:
      return "skipped";
  }
  return "skipped";
}

}  // namespace

ParseError::ParseError(std::string_view origin, std::size_t line,
                       std::size_t column, std::string_view message)
    : std::runtime_error(make_message(origin, line, column, message)),
      line_(line),
      column_(column) {}

DenseMatrix parse_matrix_text(std::string_view text, MatrixFormat format,
                              std::string_view origin) {
  if (format == MatrixFormat::Auto) {
    std::string_view probe = text;
    while (!probe.empty() && (probe.front() == '\n' || probe.front() == '\r' ||
                              probe.front() == ' ' || probe.front() == '\t'))
      probe.remove_prefix(1);
    format = probe.starts_with("%%MatrixMarket") ? MatrixFormat::MatrixMarket
                                                 : MatrixFormat::Csv;
  }
  return format == MatrixFormat::MatrixMarket
             ? parse_matrix_market(text, origin)
             : parse_matrix_csv(text, origin);
}

DenseMatrix parse_matrix(const std::filesystem::path& path,
                         MatrixFormat format) {
  return parse_matrix_text(read_file(path.string()), format, path.string());
}

std::string write_matrix_market_array(const DenseMatrix& matrix) {
  std::string out = "%%MatrixMarket matrix array real general\n";
  const std::size_t n = matrix.dim();
  out += std::to_string(n) + " " + std::to_string(n) + "\n";
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      append_number(out, matrix(i, j));
      out += "\n";
    }
  }
  return out;
}

ComplexSample parse_points_text(std::string_view text, PointFormat format,
                                std::string_view origin) {
  if (format == PointFormat::Auto) {
    std::string_view probe = text;
    while (!probe.empty() &&
           (probe.front() == '\n' || probe.front() == '\r' ||
            probe.front() == ' ' || probe.front() == '\t'))
      probe.remove_prefix(1);
    format = (!probe.empty() && (probe.front() == '[' || probe.front() == '{'))
                 ? PointFormat::Json
                 : PointFormat::Csv;
  }
  return format == PointFormat::Json ? parse_points_json(text, origin)
                                     : parse_points_csv(text, origin);
}

ComplexSample parse_points(const std::filesystem::path& path,
                           PointFormat format) {
  return parse_points_text(read_file(path.string()), format, path.string());
}

RealSample parse_real_sample_text(std::string_view text,
                                  std::string_view origin) {
  const auto lines = split_lines(text);
  std::vector<double> values;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (comment_or_blank(lines[ln])) continue;
    for (const Token& tok : split_loose(lines[ln]))
      values.push_back(parse_number(tok, origin, ln + 1));
  }
  if (values.empty()) throw ParseError(origin, 1, 1, "no sample values");
  return RealSample(std::move(values));
}

RealSample parse_real_sample(const std::filesystem::path& path) {
  return parse_real_sample_text(read_file(path.string()), path.string());
}

MonicPoly parse_poly(std::string_view text, std::string_view origin) {
  std::vector<Token> tokens;
  const auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (comment_or_blank(lines[ln])) continue;
    for (const Token& tok : split_loose(lines[ln])) tokens.push_back(tok);
  }
  if (tokens.empty()) throw ParseError(origin, 1, 1, "no coefficients");
  const double lead = parse_number(tokens[0], origin, 1);
  if (lead != 1.0)
    throw ParseError(origin, 1, tokens[0].column,
                     "leading coefficient must be 1");
  std::vector<double> coeffs;
  for (std::size_t k = 1; k < tokens.size(); ++k)
    coeffs.push_back(parse_number(tokens[k], origin, 1));
  try {
    return MonicPoly(std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(origin, 1, 1, e.what());
  }
}

std::string_view to_string(AnalysisKind kind) {
  switch (kind) {
    case AnalysisKind::Stats:
      return "stats";
    case AnalysisKind::Disk:
      return "disk";
    case AnalysisKind::RealBounds:
      return "real-bounds";
    case AnalysisKind::EigenBounds:
      return "eigen-bounds";
    case AnalysisKind::Span:
      return "span";
    case AnalysisKind::Verify:
      return "verify";
  }
  return "stats";
}

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

bool ReportDocument::all_checks_passed() const {
  for (const OracleCheckEntry& c : checks)
    if (c.status == oracle::CheckStatus::Fail) return false;
  return true;
}

std::string ReportDocument::to_json() const {
  std::string out = "{\n";
  out += "  \"tool\": ";
  append_escaped(out, kToolName);
  out += ",\n  \"version\": ";
  append_escaped(out, kToolVersion);
  out += ",\n  \"kind\": ";
  append_escaped(out, kind);
  out += ",\n  \"input\": {\"path\": ";
  append_escaped(out, input_path);
  out += ", \"digest\": ";
  append_escaped(out, digest);
  out += "},\n";

  out += "  \"options\": {\"tol\": ";
  append_number(out, options.tol);
  out += ", \"oracle\": ";
  out += options.with_oracle ? "true" : "false";
  out += ", \"assert_nonneg_spectrum\": ";
  out += options.assert_nonneg_spectrum ? "true" : "false";
  if (options.nu.has_value()) {
    out += ", \"nu\": ";
    append_number(out, *options.nu);
  }
  if (!options.subset.empty()) {
    out += ", \"subset\": [";
    for (std::size_t i = 0; i < options.subset.size(); ++i) {
      if (i > 0) out += ", ";
      out += std::to_string(options.subset[i]);
    }
    out += "]";
  }
  out += "},\n";

  out += "  \"reports\": [\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out += json_report(reports[i], "    ");
    if (i + 1 < reports.size()) out += ",";
    out += "\n";
  }
  out += "  ]";

  if (has_oracle_block) {
    out += ",\n  \"oracle\": {\n";
    bool first = true;
    if (!oracle_note.empty()) {
      out += "    \"note\": ";
      append_escaped(out, oracle_note);
      first = false;
    }
    if (!truths.empty()) {
      if (!first) out += ",\n";
      out += "    \"truths\": " + json_values(truths);
      first = false;
    }
    if (!first) out += ",\n";
    out += "    \"checks\": [\n";
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const OracleCheckEntry& c = checks[i];
      out += "      {\"bound\": ";
      append_escaped(out, c.bound);
      out += ", \"target\": ";
      append_escaped(out, c.target);
      out += ", \"status\": ";
      append_escaped(out, status_string(c.status));
      if (c.has_lower) {
        out += ", \"margin_lower\": ";
        append_number(out, c.margin_lower);
      }
      if (c.has_upper) {
        out += ", \"margin_upper\": ";
        append_number(out, c.margin_upper);
      }
      out += "}";
      if (i + 1 < checks.size()) out += ",";
      out += "\n";
    }
    out += "    ],\n";
    out += "    \"all_passed\": ";
    out += all_checks_passed() ? "true" : "false";
    out += "\n  }";
  }
  out += "\n}";
  return out;
}

namespace {

// Self-check entries for reports that carry their own verdict; Info-kind
// entries are observations, not theorems, and are excluded.
void attach_self_checks(ReportDocument& doc) {
  for (const BoundReport& r : doc.reports) {
    if (r.kind == BoundKind::Info || !r.satisfied.has_value()) continue;
    OracleCheckEntry entry;
    entry.bound = r.name;
    entry.target = "self-check";
    entry.status = *r.satisfied ? oracle::CheckStatus::Pass
                                : oracle::CheckStatus::Fail;
    doc.checks.push_back(std::move(entry));
  }
}

void attach_verify(ReportDocument& doc, const BoundReport& report,
                   std::string_view target, double truth) {
  const oracle::ReportCheck check = oracle::verify_report(report, truth);
  OracleCheckEntry entry;
  entry.bound = report.name;
  entry.target = std::string(target);
  entry.status = check.status;
  entry.margin_lower = check.margin_lower;
  entry.margin_upper = check.margin_upper;
  entry.has_lower = check.has_lower;
  entry.has_upper = check.has_upper;
  doc.checks.push_back(std::move(entry));
}

std::size_t argmax_deviation_complex(const ComplexSample& sample) {
  const DispersionSummary disp = dispersion(sample);
  std::size_t best = 0;
  double best_dev = -1.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double dev = std::abs(sample[i] - disp.mean);
    if (dev > best_dev) {
      best_dev = dev;
      best = i;
    }
  }
  return best;
}

std::size_t argmax_deviation_real(const RealSample& sample) {
  std::size_t best = 0;
  double best_dev = -1.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double dev = std::fabs(sample.values()[i] - sample.mean());
    if (dev > best_dev) {
      best_dev = dev;
      best = i;
    }
  }
  return best;
}

BoundReport dispersion_info(const ComplexSample& sample) {
  const DispersionSummary d = dispersion(sample);
  BoundReport info;
  info.name = "complex-dispersion";
  info.kind = BoundKind::Info;
  info.reference = "eq 1.1-1.4";
  info.add_value("n", static_cast<double>(sample.size()));
  info.add_value("mean_re", d.mean.real());
  info.add_value("mean_im", d.mean.imag());
  info.add_value("sz2", d.sz2);
  info.add_value("s2_re", d.s2.real());
  info.add_value("s2_im", d.s2.imag());
  info.add_value("sigma_z2", d.sigma_z2);
  return info;
}

void run_stats(ReportDocument& doc, const ComplexSample& sample,
               const AnalysisOptions& options) {
  doc.reports.push_back(dispersion_info(sample));

  const CollinearityResult coll = collinearity_test(sample, options.tol);
  BoundReport coll_report;
  coll_report.name = "collinearity";
  coll_report.kind = BoundKind::Info;
  coll_report.reference = "thm 2.2";
  coll_report.add_value("sz2", coll.summary.sz2);
  coll_report.add_value("abs_s2", std::abs(coll.summary.s2));
  coll_report.diagnostics.push_back(
      {"points collinear within tolerance", coll.collinear});
  doc.reports.push_back(std::move(coll_report));

  if (sample.size() >= 2) {
    doc.reports.push_back(pairwise_gap_bound(sample));
    for (BoundReport& r : gap_upper_checks(sample))
      doc.reports.push_back(std::move(r));
  }

  std::vector<std::size_t> subset = options.subset;
  if (subset.empty()) subset.push_back(argmax_deviation_complex(sample));
  doc.reports.push_back(subset_mean_bound(sample, subset));

  if (options.with_oracle) {
    doc.has_oracle_block = true;
    attach_self_checks(doc);
  }
}

void run_disk(ReportDocument& doc, const ComplexSample& sample,
              const AnalysisOptions& options) {
  const Disk disk = min_enclosing_disk(sample);
  BoundReport info;
  info.name = "min-disk";
  info.kind = BoundKind::Info;
  info.reference = "eq 1.7";
  info.add_value("n", static_cast<double>(sample.size()));
  info.add_value("center_re", disk.center.real());
  info.add_value("center_im", disk.center.imag());
  info.add_value("radius", disk.radius);
  doc.reports.push_back(std::move(info));

  if (sample.size() >= 2) doc.reports.push_back(disk_inequality_chain(sample));
  doc.reports.push_back(circle_on_mean_check(sample, options.tol).report);

  if (options.with_oracle) {
    doc.has_oracle_block = true;
    if (sample.size() <= 50) {
      const Disk brute = oracle::min_disk_brute(sample);
      doc.truths.push_back({"oracle_radius", brute.radius});
      doc.truths.push_back({"oracle_center_re", brute.center.real()});
      doc.truths.push_back({"oracle_center_im", brute.center.imag()});
      OracleCheckEntry entry;
      entry.bound = "min-disk";
      entry.target = "radius-agreement";
      entry.margin_lower = disk.radius - brute.radius;
      entry.has_lower = true;
      entry.status =
          std::fabs(disk.radius - brute.radius) <=
                  1e-9 * std::max(1.0, brute.radius)
              ? oracle::CheckStatus::Pass
              : oracle::CheckStatus::Fail;
      doc.checks.push_back(std::move(entry));
    } else {
      doc.oracle_note = "more than 50 points; exhaustive disk oracle skipped";
    }
    attach_self_checks(doc);
  }
}

void run_real_bounds(ReportDocument& doc, const RealSample& sample,
                     const AnalysisOptions& options) {
  BoundReport info;
  info.name = "real-sample";
  info.kind = BoundKind::Info;
  info.reference = "sec 1";
  info.add_value("n", static_cast<double>(sample.size()));
  info.add_value("min", sample.min());
  info.add_value("max", sample.max());
  info.add_value("mean", sample.mean());
  info.add_value("s2", sample.variance());
  info.add_value("m4", sample.fourth_moment());
  doc.reports.push_back(std::move(info));

  for (BoundReport& r : classic_bounds(sample)) doc.reports.push_back(std::move(r));
  for (BoundReport& r : refined_bounds_positive_mean(sample))
    doc.reports.push_back(std::move(r));
  for (BoundReport& r : refined_bounds_negative_min(sample))
    doc.reports.push_back(std::move(r));
  for (BoundReport& r : kurtosis_gated_bound(sample))
    doc.reports.push_back(std::move(r));
  if (sample.size() >= 2) {
    for (BoundReport& r : extreme_value_bounds(sample))
      doc.reports.push_back(std::move(r));
    std::vector<std::size_t> subset = options.subset;
    if (subset.empty()) subset.push_back(argmax_deviation_real(sample));
    doc.reports.push_back(mallows_richter(sample, subset));
  }

  if (options.with_oracle) {
    doc.has_oracle_block = true;
    doc.truths.push_back({"min", sample.min()});
    doc.truths.push_back({"max", sample.max()});
    doc.truths.push_back({"s2", sample.variance()});
    for (const BoundReport& r : doc.reports) {
      if (r.name == "min-extreme") attach_verify(doc, r, "min", sample.min());
      if (r.name == "max-extreme") attach_verify(doc, r, "max", sample.max());
    }
    attach_self_checks(doc);
  }
}

void run_span(ReportDocument& doc, const MonicPoly& poly,
              const AnalysisOptions& options) {
  const RootMoments moments = coeff_moments(poly);
  BoundReport info;
  info.name = "coefficient-moments";
  info.kind = BoundKind::Info;
  info.reference = "eq 3.21";
  info.add_value("degree", static_cast<double>(poly.degree()));
  info.add_value("mean", moments.mean);
  info.add_value("variance", moments.variance);
  doc.reports.push_back(std::move(info));

  try {
    doc.reports.push_back(span_bounds(poly));
  } catch (const std::domain_error& e) {
    BoundReport failed;
    failed.name = "span-sandwich";
    failed.kind = BoundKind::TwoSided;
    failed.reference = "eq 3.22";
    failed.require("coefficient root variance nonnegative", false);
    failed.note = e.what();
    doc.reports.push_back(std::move(failed));
  }
  for (BoundReport& r :
       refined_span_bounds(poly, options.assert_nonneg_spectrum))
    doc.reports.push_back(std::move(r));

  if (options.with_oracle) {
    doc.has_oracle_block = true;
    try {
      const std::vector<double> roots = oracle::real_roots(poly);
      const double span = roots.back() - roots.front();
      double mean = 0.0;
      for (double r : roots) mean += r;
      mean /= static_cast<double>(roots.size());
      double var = 0.0;
      for (double r : roots) var += (r - mean) * (r - mean);
      var /= static_cast<double>(roots.size());
      doc.truths.push_back({"span", span});
      doc.truths.push_back({"root_min", roots.front()});
      doc.truths.push_back({"root_max", roots.back()});
      doc.truths.push_back({"root_mean", mean});
      doc.truths.push_back({"root_variance", var});
      for (const BoundReport& r : doc.reports) {
        if (r.name == "span-sandwich" || r.name == "span-lower-printed" ||
            r.name == "span-lower-derived" || r.name == "span-upper-refined")
          attach_verify(doc, r, "span", span);
      }
      OracleCheckEntry mean_check;
      mean_check.bound = "coefficient-moments";
      mean_check.target = "mean-agreement";
      mean_check.margin_lower = moments.mean - mean;
      mean_check.has_lower = true;
      mean_check.status = close_rel(moments.mean, mean, 1e-8)
                              ? oracle::CheckStatus::Pass
                              : oracle::CheckStatus::Fail;
      doc.checks.push_back(std::move(mean_check));
      OracleCheckEntry var_check;
      var_check.bound = "coefficient-moments";
      var_check.target = "variance-agreement";
      var_check.margin_lower = moments.variance - var;
      var_check.has_lower = true;
      var_check.status = close_rel(moments.variance, var, 1e-8)
                             ? oracle::CheckStatus::Pass
                             : oracle::CheckStatus::Fail;
      doc.checks.push_back(std::move(var_check));
    } catch (const std::exception& e) {
      doc.oracle_note = std::string("root oracle unavailable: ") + e.what();
    }
    attach_self_checks(doc);
  }
}

void run_eigen(ReportDocument& doc, const DenseMatrix& matrix,
               const AnalysisOptions& options) {
  const SpectralSummary summary = summarize(matrix);
  BoundReport info;
  info.name = "spectral-summary";
  info.kind = BoundKind::Info;
  info.reference = "eq 3.1-3.2";
  info.add_value("n", static_cast<double>(summary.n));
  info.add_value("tr_a", summary.tr_a);
  info.add_value("tr_a2", summary.tr_a2);
  info.add_value("tr_b2", summary.tr_b2);
  info.add_value("mean", summary.mean);
  info.add_value("s_lambda2", summary.s_lambda2);
  doc.reports.push_back(std::move(info));

  const bool real_spectrum_certificate = summary.tr_b2 >= 0.0;
  if (summary.n >= 2 && real_spectrum_certificate) {
    doc.reports.push_back(spread_sandwich(summary));
    for (BoundReport& r : eigen_interval(summary))
      doc.reports.push_back(std::move(r));
  } else if (!real_spectrum_certificate) {
    BoundReport failed;
    failed.name = "spread-sandwich";
    failed.kind = BoundKind::TwoSided;
    failed.reference = "eq 1.10";
    failed.require("tr B^2 >= 0 (real spectrum certificate)", false);
    doc.reports.push_back(std::move(failed));
  }

  SpectrumSign sign = SpectrumSign::Unknown;
  std::string provenance = "not asserted";
  if (options.assert_nonneg_spectrum) {
    sign = SpectrumSign::Nonnegative;
    provenance = "caller-asserted";
  } else if (matrix.is_symmetric()) {
    sign = is_positive_semidefinite(matrix) ? SpectrumSign::Nonnegative
                                            : SpectrumSign::HasNegative;
    provenance = "verified by pivoted factorization";
  }
  for (BoundReport& r : refined_spread_bounds(summary, sign, provenance))
    doc.reports.push_back(std::move(r));

  if (options.nu.has_value()) {
    for (BoundReport& r : deflated_bounds(summary, *options.nu))
      doc.reports.push_back(std::move(r));
  }

  // A real orthogonal matrix with zero trace is a unitary with zero trace.
  {
    const ComplexMatrix as_complex(matrix);
    if (as_complex.unitary_defect() <= options.tol &&
        std::abs(as_complex.trace()) <= options.tol) {
      doc.reports.push_back(
          unitary_trace_zero_check(as_complex, options.tol).report);
    }
  }

  if (options.with_oracle) {
    doc.has_oracle_block = true;
    if (!matrix.is_symmetric()) {
      doc.oracle_note = "matrix not symmetric; eigensolver oracle skipped";
    } else if (matrix.dim() > 64) {
      doc.oracle_note = "dimension above 64; eigensolver oracle skipped";
    } else {
      const oracle::Spectrum spectrum = oracle::eigenvalues_symmetric(matrix);
      const double lambda_min = spectrum.eigenvalues.front();
      const double lambda_max = spectrum.eigenvalues.back();
      const double spread = lambda_max - lambda_min;
      doc.truths.push_back({"lambda_min", lambda_min});
      doc.truths.push_back({"lambda_max", lambda_max});
      doc.truths.push_back({"spread", spread});

      double deflated_min = 0.0, deflated_max = 0.0, deflated_spread = 0.0;
      bool have_deflated = false;
      if (options.nu.has_value() && spectrum.eigenvalues.size() >= 2) {
        std::vector<double> remaining = spectrum.eigenvalues;
        std::size_t drop = 0;
        for (std::size_t i = 1; i < remaining.size(); ++i)
          if (std::fabs(remaining[i] - *options.nu) <
              std::fabs(remaining[drop] - *options.nu))
            drop = i;
        doc.truths.push_back({"nu_residual",
                              std::fabs(remaining[drop] - *options.nu)});
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(drop));
        deflated_min = remaining.front();
        deflated_max = remaining.back();
        deflated_spread = deflated_max - deflated_min;
        doc.truths.push_back({"deflated_min", deflated_min});
        doc.truths.push_back({"deflated_max", deflated_max});
        have_deflated = true;
      }

      for (const BoundReport& r : doc.reports) {
        if (r.name == "spread-sandwich" || r.name == "spread-lower-trace-ratio" ||
            r.name == "spread-upper-refined" ||
            r.name == "spread-upper-refined-derived" ||
            r.name == "spread-lower-negative-min" ||
            r.name == "spread-lower-negative-min-derived" ||
            r.name == "spread-upper-negative-min" ||
            r.name == "spread-upper-negative-min-derived") {
          attach_verify(doc, r, "spread", spread);
        } else if (r.name == "lambda-min-interval") {
          attach_verify(doc, r, "lambda_min", lambda_min);
        } else if (r.name == "lambda-max-interval") {
          attach_verify(doc, r, "lambda_max", lambda_max);
        } else if (have_deflated && r.name == "deflated-min-interval") {
          attach_verify(doc, r, "deflated_min", deflated_min);
        } else if (have_deflated && r.name == "deflated-max-interval") {
          attach_verify(doc, r, "deflated_max", deflated_max);
        } else if (have_deflated && r.name == "deflated-spread-sandwich") {
          attach_verify(doc, r, "deflated_spread", deflated_spread);
        }
      }
    }
    attach_self_checks(doc);
  }
}

}  // namespace

ReportDocument run(const AnalysisRequest& request) {
  ReportDocument doc;
  doc.kind = std::string(to_string(request.kind));
  doc.options = request.options;
  if (request.kind == AnalysisKind::Verify) doc.options.with_oracle = true;

  if (request.kind == AnalysisKind::Span &&
      !std::filesystem::exists(request.input)) {
    // Inline coefficient list.
    doc.input_path = "<inline>";
    doc.digest = fnv1a_digest(request.input);
    run_span(doc, parse_poly(request.input, "<inline>"), doc.options);
    return doc;
  }

  const std::string text = read_file(request.input);
  doc.input_path = request.input;
  doc.digest = fnv1a_digest(text);

  switch (request.kind) {
    case AnalysisKind::Stats:
      run_stats(doc, parse_points_text(text, doc.options.point_format, request.input),
                doc.options);
      break;
    case AnalysisKind::Disk:
      run_disk(doc, parse_points_text(text, doc.options.point_format, request.input),
               doc.options);
      break;
    case AnalysisKind::RealBounds:
      run_real_bounds(doc, parse_real_sample_text(text, request.input),
                      doc.options);
      break;
    case AnalysisKind::Span:
      run_span(doc, parse_poly(text, request.input), doc.options);
      break;
    case AnalysisKind::EigenBounds:
    case AnalysisKind::Verify:
      run_eigen(doc, parse_matrix_text(text, doc.options.matrix_format, request.input),
                doc.options);
      break;
  }
  return doc;
}

}  // namespace varbounds::io
