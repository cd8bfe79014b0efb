#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "varbounds/io.hpp"

namespace {

using varbounds::io::AnalysisKind;
using varbounds::io::AnalysisRequest;
using varbounds::io::MatrixFormat;
using varbounds::io::PointFormat;
using varbounds::io::ReportDocument;

struct CliOptions {
  std::vector<std::string> inputs;
  std::string out_path;
  std::string format = "auto";
  double tol = 1e-9;
  double nu = 0.0;
  bool nu_set = false;
  bool with_oracle = false;
  bool assert_nonneg = false;
  std::vector<std::size_t> subset;
};

MatrixFormat matrix_format_from(const std::string& name) {
  if (name == "matrix-market") return MatrixFormat::MatrixMarket;
  if (name == "csv") return MatrixFormat::Csv;
  return MatrixFormat::Auto;
}

PointFormat point_format_from(const std::string& name) {
  if (name == "json") return PointFormat::Json;
  if (name == "csv") return PointFormat::Csv;
  return PointFormat::Auto;
}

int run_kind(AnalysisKind kind, const CliOptions& cli) {
  std::vector<ReportDocument> documents;
  documents.reserve(cli.inputs.size());
  for (const std::string& input : cli.inputs) {
    AnalysisRequest request;
    request.kind = kind;
    request.input = input;
    request.options.tol = cli.tol;
    request.options.with_oracle = cli.with_oracle;
    request.options.assert_nonneg_spectrum = cli.assert_nonneg;
    request.options.subset = cli.subset;
    if (cli.nu_set) request.options.nu = cli.nu;
    request.options.matrix_format = matrix_format_from(cli.format);
    request.options.point_format = point_format_from(cli.format);
    documents.push_back(varbounds::io::run(request));
  }

  std::string out;
  if (documents.size() == 1) {
    out = documents[0].to_json() + "\n";
  } else {
    out = "[\n";
    for (std::size_t i = 0; i < documents.size(); ++i) {
      out += documents[i].to_json();
      if (i + 1 < documents.size()) out += ",";
      out += "\n";
    }
    out += "]\n";
  }

  if (cli.out_path.empty()) {
    std::cout << out;
  } else {
    std::ofstream file(cli.out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << cli.out_path << "\n";
      return 2;
    }
    file << out;
  }

  for (const ReportDocument& doc : documents) {
    if (doc.has_oracle_block && !doc.all_checks_passed()) return 1;
  }
  return 0;
}

void add_common_options(CLI::App* sub, CliOptions& cli, bool matrix_kind) {
  sub->add_option("inputs", cli.inputs, "input file(s)")->required();
  sub->add_option("--out", cli.out_path, "write the report here instead of stdout");
  sub->add_option("--tol", cli.tol, "tolerance for applicability checks")
      ->capture_default_str();
  sub->add_flag("--oracle", cli.with_oracle,
                "attach brute-force verification to the report");
  if (matrix_kind) {
    sub->add_option("--format", cli.format,
                    "input format: auto, matrix-market or csv")
        ->check(CLI::IsMember({"auto", "matrix-market", "csv"}))
        ->capture_default_str();
  } else {
    sub->add_option("--format", cli.format, "input format: auto, csv or json")
        ->check(CLI::IsMember({"auto", "csv", "json"}))
        ->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "variance, enclosing-disk, eigenvalue and polynomial-span bound "
      "reports with built-in brute-force verification"};
  app.require_subcommand(1);

  CliOptions cli;

  CLI::App* stats = app.add_subcommand(
      "stats", "dispersion statistics and subset-mean bounds of a point set");
  add_common_options(stats, cli, /*matrix_kind=*/false);
  stats->add_option("--subset", cli.subset,
                    "0-based indices for the subset-mean bound "
                    "(default: the farthest point)");

  CLI::App* disk = app.add_subcommand(
      "disk", "smallest enclosing disk and the radius inequality chain");
  add_common_options(disk, cli, /*matrix_kind=*/false);

  CLI::App* real = app.add_subcommand(
      "real-bounds", "variance inequalities for a real sample");
  add_common_options(real, cli, /*matrix_kind=*/false);
  real->add_option("--subset", cli.subset,
                   "0-based indices for the subset-mean bound "
                   "(default: the farthest value)");

  CLI::App* eigen = app.add_subcommand(
      "eigen-bounds", "trace-based eigenvalue and spread localization");
  add_common_options(eigen, cli, /*matrix_kind=*/true);
  CLI::Option* nu_opt = eigen->add_option(
      "--nu", cli.nu, "known eigenvalue for the deflated bounds");
  eigen->add_flag("--assert-nonneg-spectrum", cli.assert_nonneg,
                  "assert that all eigenvalues are nonnegative");

  CLI::App* span = app.add_subcommand(
      "span", "root-span bounds of a monic real-rooted polynomial; the input "
              "is a file or an inline list \"1,a1,...,an\"");
  add_common_options(span, cli, /*matrix_kind=*/false);
  span->add_flag("--assert-nonneg-spectrum", cli.assert_nonneg,
                 "assert that all polynomial zeros are nonnegative");

  CLI::App* verify = app.add_subcommand(
      "verify", "eigen-bounds with the oracle attached; exits 1 when any "
                "applicable bound fails against the oracle spectrum");
  add_common_options(verify, cli, /*matrix_kind=*/true);
  CLI::Option* verify_nu_opt = verify->add_option(
      "--nu", cli.nu, "known eigenvalue for the deflated bounds");
  verify->add_flag("--assert-nonneg-spectrum", cli.assert_nonneg,
                   "assert that all eigenvalues are nonnegative");

  CLI11_PARSE(app, argc, argv);
  cli.nu_set = nu_opt->count() > 0 || verify_nu_opt->count() > 0;

  try {
    if (stats->parsed()) return run_kind(AnalysisKind::Stats, cli);
    if (disk->parsed()) return run_kind(AnalysisKind::Disk, cli);
    if (real->parsed()) return run_kind(AnalysisKind::RealBounds, cli);
    if (eigen->parsed()) return run_kind(AnalysisKind::EigenBounds, cli);
    if (span->parsed()) return run_kind(AnalysisKind::Span, cli);
    if (verify->parsed()) return run_kind(AnalysisKind::Verify, cli);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
