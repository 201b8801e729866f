// bkc - command-line front end for the kernel calculus.
//
//   bkc verify [--check NAME ... | --all] [--n LIST] [--seed INT] [--trunc INT]
//              [--tol FLOAT] [--format json|text] [--out PATH]
//   bkc reduce --expr FILE [--out PATH]
//
// `verify` runs named suites and writes a machine-readable report (rows
// ordered by check name, stable across runs for fixed inputs).  `reduce`
// parses a pipeline from its textual form, reduces it to a kernel, and prints
// the kernel both as re-parseable input and as display text.
//
// Exit status: 0 all rows pass, 1 at least one row fails, 2 usage or input
// error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bkc/checks.hpp"
#include "bkc/sexpr.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 2;
  }
  out << text;
  return 0;
}

int run_verify(const std::vector<std::string>& names, const bkc::CheckParams& params,
               const std::string& format, const std::string& outpath) {
  std::vector<bkc::CheckRow> rows = bkc::run_checks(names, params);
  std::string text = format == "text" ? bkc::report_text(rows)
                                      : bkc::report_json(rows).dump(2) + "\n";
  int rc = write_output(text, outpath);
  if (rc != 0) return rc;
  return bkc::all_pass(rows) ? 0 : 1;
}

int run_reduce(const std::string& exprpath, const std::string& outpath) {
  std::ifstream in(exprpath, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << exprpath << "'\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  bkc::OperatorExpr e = bkc::parse_pipeline(buf.str());
  bkc::Poly k = bkc::eval_symbolic(e);
  std::string text = "(kernel {" + bkc::poly_to_text(k) + "})\n\n" + bkc::poly_str(k) + "\n";
  return write_output(text, outpath);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"model-operator kernel calculus: verification suites and pipeline reduction"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run verification suites and write a report");
  std::vector<std::string> checks;
  bool all = false;
  bkc::CheckParams params;
  std::string format = "json", outpath;
  verify->add_option("--check", checks, "suite to run (repeatable); see --list")
      ->expected(-1);
  verify->add_flag("--all", all, "run every suite");
  bool list = false;
  verify->add_flag("--list", list, "print the available suite names and exit");
  verify->add_option("--n", params.dims, "dimensions to sample (comma separated)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", params.seed, "base seed for random data");
  verify->add_option("--trunc", params.trunc, "matrix degree cutoff override")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--tol", params.tol, "tolerance override for every row")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", outpath, "write the report to a file instead of stdout");

  auto* reduce = app.add_subcommand("reduce", "reduce a pipeline file to its kernel");
  std::string exprpath, reduce_out;
  reduce->add_option("--expr", exprpath, "file holding one pipeline expression")->required();
  reduce->add_option("--out", reduce_out, "write the result to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (list) {
        for (const auto& name : bkc::all_check_names()) std::cout << name << "\n";
        return 0;
      }
      std::vector<std::string> names = all ? bkc::all_check_names() : checks;
      if (names.empty()) {
        std::cerr << "error: choose at least one suite with --check, or pass --all\n";
        return 2;
      }
      return run_verify(names, params, format, outpath);
    }
    return run_reduce(exprpath, reduce_out);
  } catch (const bkc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
