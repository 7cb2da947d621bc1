// plesken: build algebras, analyze Plesken Lie algebras, verify cellular
// decompositions and run the reproduction suite.

#include <plesken.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#ifndef PLESKEN_FIXTURES_DIR
#define PLESKEN_FIXTURES_DIR "data/groups"
#endif

namespace {

using namespace plesken;

struct Output {
  std::string out;
  std::string format = "json";
  bool timing = false;
};

/// Relative --out paths resolve against PLESKEN_OUT_DIR when it is set.
std::filesystem::path resolve_out(const std::string& out) {
  std::filesystem::path p(out);
  if (const char* dir = std::getenv("PLESKEN_OUT_DIR"); dir && *dir && p.is_relative()) p = std::filesystem::path(dir) / p;
  return p;
}

void write_text(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  auto path = resolve_out(out);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write '" + path.string() + "'");
  f << text;
}

void write_report(const Output& o, const Json& report) {
  write_text(o.out, o.format == "md" ? render_markdown(report) : report.dump(2) + "\n");
}

struct BuildArgs {
  std::string family;
  int n = 0;
  std::string delta = "0";
  std::string group;
  std::string inner = "quaternions";
  int cap = default_size_cap;
};

AlgebraWithInvolution inner_algebra(const std::string& name) {
  if (name == "quaternions") return quaternions();
  if (name == "scalars") return scalar_field(false);
  if (name == "scalars-conj") return scalar_field(true);
  throw std::invalid_argument("unknown inner algebra '" + name + "' (quaternions, scalars, scalars-conj)");
}

void require_n(const BuildArgs& b) {
  if (b.n < 1) throw std::invalid_argument("family '" + b.family + "' needs --n >= 1");
}

AlgebraDocument build_document(const BuildArgs& b) {
  AlgebraDocument doc;
  Json meta = {{"family", b.family}};
  auto assign = [&](AlgebraWithInvolution x, std::optional<CellDatum> cell = std::nullopt) {
    doc.algebra = std::move(x.algebra);
    doc.involution = std::move(x.involution);
    doc.cell = std::move(cell);
  };
  if (b.family == "quaternions") {
    assign(quaternions());
  } else if (b.family == "matrix") {
    require_n(b);
    assign(matrix_algebra(b.n, MatrixInvolution::transpose), cell_datum_matrix(b.n));
    meta["n"] = b.n;
  } else if (b.family == "matrix-conj") {
    require_n(b);
    assign(matrix_algebra(b.n, MatrixInvolution::conj_transpose));
    meta["n"] = b.n;
  } else if (b.family == "group") {
    if (b.group.empty()) throw std::invalid_argument("family 'group' needs --group <cayley-table.json>");
    assign(load_group_algebra(b.group));
  } else if (b.family == "matrix-over") {
    require_n(b);
    assign(matrix_over_algebra(b.n, inner_algebra(b.inner)));
    meta["n"] = b.n;
    meta["inner"] = b.inner;
  } else if (b.family == "planar-rook") {
    require_n(b);
    assign(planar_rook(b.n, b.cap), cell_datum_planar_rook(b.n));
    meta["n"] = b.n;
  } else if (b.family == "temperley-lieb") {
    require_n(b);
    Scalar delta = Scalar::parse(b.delta);
    assign(temperley_lieb(b.n, delta, b.cap), cell_datum_temperley_lieb(b.n));
    meta["n"] = b.n;
    meta["delta"] = delta.str();
  } else {
    throw std::invalid_argument("unknown family '" + b.family +
                                "' (quaternions, matrix, matrix-conj, group, matrix-over, planar-rook, temperley-lieb)");
  }
  validate_document(doc.algebra, doc.involution);
  if (doc.cell) {
    auto v = validate_cell_datum(doc.algebra, doc.involution, *doc.cell);
    if (!v.ok) throw consistency_error("built cell datum fails (" + v.clause + "): " + v.witness);
  }
  doc.metadata = meta;
  return doc;
}

int report_error(int code, const std::string& message, bool json_errors) {
  if (json_errors)
    std::cout << Json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << "\n";
  else
    std::cerr << "error: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plesken Lie algebras of involutive algebras and their cellular decompositions"};
  app.require_subcommand(1);
  bool json_errors = false;
  app.add_flag("--json-errors", json_errors, "Print errors as JSON on stdout");

  auto add_output = [](CLI::App* cmd, Output& o) {
    cmd->add_option("--out", o.out, "Output file (stdout when omitted; relative to $PLESKEN_OUT_DIR if set)");
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "md"}));
    cmd->add_flag("--timing", o.timing, "Include wall-clock timings (makes output non-deterministic)");
  };

  BuildArgs build;
  std::string build_out;
  auto* build_cmd = app.add_subcommand("build", "Build an algebra document (.plesken.json)");
  build_cmd->add_option("--family", build.family, "Algebra family")->required();
  build_cmd->add_option("--n", build.n, "Size parameter");
  build_cmd->add_option("--delta", build.delta, "Loop value for temperley-lieb (exact scalar, e.g. 3 or 1/2+i)");
  build_cmd->add_option("--group", build.group, "Cayley table JSON for the group family");
  build_cmd->add_option("--inner", build.inner, "Inner algebra for matrix-over: quaternions, scalars, scalars-conj");
  build_cmd->add_option("--cap", build.cap, "Size cap for diagram families");
  build_cmd->add_option("--out", build_out, "Output file (stdout when omitted; relative to $PLESKEN_OUT_DIR if set)");

  std::string analyze_doc;
  Output analyze_out;
  ReportOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Plesken Lie algebra, bracket table and fingerprint");
  analyze_cmd->add_option("document", analyze_doc, "Algebra document")->required();
  analyze_cmd->add_option("--seed", analyze_opts.seed, "Seed for sampled checks");
  analyze_cmd->add_option("--samples", analyze_opts.samples, "Random pairs for the bracket closure check");
  analyze_cmd->add_option("--cap", analyze_opts.table_cap, "Largest dimension with an explicit bracket table");
  add_output(analyze_cmd, analyze_out);

  std::string verify_doc;
  Output verify_out;
  auto* verify_cmd = app.add_subcommand("verify-cellular", "Check the cell datum and the orthogonal decomposition");
  verify_cmd->add_option("document", verify_doc, "Algebra document with a cell section")->required();
  add_output(verify_cmd, verify_out);

  SuiteOptions suite;
  suite.fixtures = PLESKEN_FIXTURES_DIR;
  Output suite_out;
  auto* suite_cmd = app.add_subcommand("paper-suite", "Run every reproduction check");
  suite_cmd->add_option("--seed", suite.seed, "Seed for sampled checks");
  suite_cmd->add_option("--samples", suite.samples, "Random pairs per bracket closure check");
  suite_cmd->add_option("--cap", suite.size_cap, "Size cap for diagram families; larger items are skipped");
  suite_cmd->add_option("--fixtures", suite.fixtures, "Directory with group Cayley tables");
  suite_cmd->add_flag("--allow-skips", suite.allow_skips, "Exit 0 even when items were skipped");
  add_output(suite_cmd, suite_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_success : exit_invalid_input;
  }

  try {
    if (*build_cmd) {
      write_text(build_out, emit(build_document(build)));
      return exit_success;
    }
    if (*analyze_cmd) {
      analyze_opts.timing = analyze_out.timing;
      auto r = analyze(load_document(analyze_doc), analyze_opts);
      write_report(analyze_out, r.report);
      return r.exit_code;
    }
    if (*verify_cmd) {
      ReportOptions opts;
      opts.timing = verify_out.timing;
      auto r = verify_cellular(load_document(verify_doc), opts);
      write_report(verify_out, r.report);
      return r.exit_code;
    }
    if (*suite_cmd) {
      suite.timing = suite_out.timing;
      auto r = paper_suite(suite);
      write_report(suite_out, r.report);
      if (r.exit_code != exit_success)
        std::cerr << "paper-suite: " << r.report["summary"]["fail"].get<std::size_t>() << " failed, "
                  << r.report["summary"]["skip"].get<std::size_t>() << " skipped "
                  << r.report["summary"]["failing_keys"].dump() << "\n";
      return r.exit_code;
    }
  } catch (const missing_cell_error& e) {
    return report_error(exit_missing_cell, e.what(), json_errors);
  } catch (const consistency_error& e) {
    return report_error(exit_inconsistent, e.what(), json_errors);
  } catch (const std::invalid_argument& e) {
    return report_error(exit_invalid_input, e.what(), json_errors);
  } catch (const std::domain_error& e) {
    return report_error(exit_invalid_input, e.what(), json_errors);
  } catch (const std::exception& e) {
    return report_error(exit_inconsistent, e.what(), json_errors);
  }
  return exit_success;
}
