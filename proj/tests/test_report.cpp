#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace plesken;

namespace {

AlgebraDocument document(AlgebraWithInvolution x, std::optional<CellDatum> cell = std::nullopt) {
  return {std::move(x.algebra), std::move(x.involution), std::move(cell), Json::object()};
}

SuiteOptions suite_options(int cap) {
  SuiteOptions o;
  o.seed = 11;
  o.samples = 20;
  o.size_cap = cap;
  o.fixtures = PLESKEN_FIXTURES_DIR;
  return o;
}

const Json& item(const Json& report, const std::string& key) {
  for (const auto& i : report["items"])
    if (i["key"] == key) return i;
  throw std::out_of_range(key);
}

}  // namespace

TEST(Analyze, QuaternionBracketPattern) {
  auto r = analyze(document(quaternions()), {});
  EXPECT_EQ(r.exit_code, exit_success);
  const Json& p = r.report["plesken"];
  EXPECT_EQ(p["dim"], 3);
  EXPECT_EQ(p["basis"]["x1"], "i");
  EXPECT_EQ(p["basis"]["x2"], "j");
  EXPECT_EQ(p["basis"]["x3"], "k");
  EXPECT_EQ(p["bracket_table"][0][1], "2*x3");
  EXPECT_EQ(p["bracket_table"][0][2], "-2*x2");
  EXPECT_EQ(p["bracket_table"][1][2], "2*x1");
  EXPECT_EQ(p["bracket_table"][1][1], "0");
  EXPECT_FALSE(r.report.contains("timing_ms"));
}

TEST(Analyze, ConjTransposeAndTL04) {
  auto c = analyze(document(matrix_algebra(2, MatrixInvolution::conj_transpose)), {});
  EXPECT_EQ(c.report["plesken"]["dim"], 4);
  EXPECT_EQ(c.report["input"]["involution"], "semilinear");

  auto t = analyze(document(temperley_lieb(4, Scalar(0))), {});
  EXPECT_EQ(t.report["plesken"]["dim"], 4);
  EXPECT_EQ(t.report["plesken"]["bracket_table"].size(), 4u);
  EXPECT_EQ(t.report["fingerprint"]["solvable"], true);
  EXPECT_EQ(t.report["fingerprint"]["derived_length"], 3);
}

TEST(Analyze, TableCapAndTiming) {
  ReportOptions o;
  o.table_cap = 2;
  o.timing = true;
  auto r = analyze(document(quaternions()), o);
  EXPECT_TRUE(r.report["plesken"]["bracket_table"].is_string());
  EXPECT_TRUE(r.report.contains("timing_ms"));
}

TEST(Analyze, RejectsInvalidAlgebra) {
  auto q = quaternions();
  StructureTable t = q.algebra.table();
  t.add(1, 1, 0, 2);
  AlgebraDocument doc{Algebra("bad", q.algebra.labels(), t, q.algebra.unit()), q.involution, std::nullopt, Json::object()};
  EXPECT_THROW(analyze(doc, {}), std::invalid_argument);
  auto m = matrix_algebra(2, MatrixInvolution::transpose);
  AlgebraDocument id{m.algebra, AntiInvolution{Matrix::identity(4)}, std::nullopt, Json::object()};
  EXPECT_THROW(analyze(id, {}), std::invalid_argument);
}

TEST(VerifyCellular, Certificates) {
  auto pr = verify_cellular(document(planar_rook(3), cell_datum_planar_rook(3)), {});
  EXPECT_EQ(pr.exit_code, exit_success);
  EXPECT_EQ(pr.report["theorem"]["certified"], true);
  EXPECT_EQ(pr.report["fingerprint_comparison"]["sizes"], Json({1, 3, 3, 1}));
  EXPECT_EQ(pr.report["predicted_decomposition"]["plesken_dim"], 6);
  EXPECT_EQ(pr.report["transport"]["model_match"], true);
  EXPECT_FALSE(pr.report.contains("inconsistencies"));

  auto tl = verify_cellular(document(temperley_lieb(4, Scalar(3)), cell_datum_temperley_lieb(4)), {});
  EXPECT_EQ(tl.exit_code, exit_success);
  EXPECT_EQ(tl.report["predicted_decomposition"]["plesken_dim"], 4);
}

TEST(VerifyCellular, RefutationForTL04) {
  auto r = verify_cellular(document(temperley_lieb(4, Scalar(0)), cell_datum_temperley_lieb(4)), {});
  EXPECT_EQ(r.exit_code, exit_refuted);
  EXPECT_EQ(r.report["semisimplicity"]["semisimple"], false);
  EXPECT_EQ(r.report["theorem"]["failed_check"], "a");
  EXPECT_EQ(r.report["fingerprint_comparison"]["match"], false);
  EXPECT_TRUE(r.report["predicted_decomposition"].contains("refused"));
}

TEST(VerifyCellular, MissingAndInvalidDatum) {
  EXPECT_THROW(verify_cellular(document(planar_rook(2)), {}), missing_cell_error);
  auto cd = cell_datum_planar_rook(2);
  for (auto& [mu, l] : cd.order) std::swap(mu, l);
  auto r = verify_cellular(document(planar_rook(2), cd), {});
  EXPECT_EQ(r.exit_code, exit_invalid_input);
  EXPECT_EQ(r.report["cell_datum"]["clause"], "C3");
}

TEST(ReproductionSuite, CapSkipsDiagramItems) {
  auto o = suite_options(3);
  auto r = paper_suite(o);
  EXPECT_EQ(r.exit_code, exit_refuted);
  EXPECT_EQ(r.report["summary"]["fail"], 0);
  EXPECT_GT(r.report["summary"]["skip"].get<int>(), 0);
  EXPECT_EQ(item(r.report, "planar-rook/n=4")["status"], "skip");
  EXPECT_EQ(item(r.report, "planar-rook/n=3")["status"], "pass");
  EXPECT_EQ(item(r.report, "temperley-lieb/n=4/delta=0/counterexample")["status"], "skip");
  o.allow_skips = true;
  EXPECT_EQ(paper_suite(o).exit_code, exit_success);
}

TEST(ReproductionSuite, CorruptedFixtureOnlyFailsItsKey) {
  auto dir = std::filesystem::temp_directory_path() / "plesken_fixture_test";
  std::filesystem::create_directories(dir);
  for (const char* f : {"s3.json", "c2.json", "c3.json", "c5.json"})
    std::filesystem::copy_file(std::filesystem::path(PLESKEN_FIXTURES_DIR) / f, dir / f,
                               std::filesystem::copy_options::overwrite_existing);
  std::ofstream(dir / "s3.json") << R"({"name":"S3","elements":["e","a"],"table":[["e","a"],["a","a"]]})";
  auto o = suite_options(2);
  o.fixtures = dir.string();
  o.allow_skips = true;
  auto r = paper_suite(o);
  EXPECT_EQ(r.exit_code, exit_refuted);
  EXPECT_EQ(r.report["summary"]["failing_keys"], Json({"group/S3"}));
  EXPECT_EQ(item(r.report, "group/C5")["status"], "pass");
  std::filesystem::remove_all(dir);
}

TEST(ReproductionSuite, DeterministicForFixedSeed) {
  auto o = suite_options(3);
  o.allow_skips = true;
  EXPECT_EQ(paper_suite(o).report.dump(), paper_suite(o).report.dump());
}

TEST(Markdown, RendersEveryReport) {
  auto a = render_markdown(analyze(document(quaternions()), {}).report);
  EXPECT_NE(a.find("| [x,y] |"), std::string::npos);
  auto v = render_markdown(verify_cellular(document(temperley_lieb(4, Scalar(0)), cell_datum_temperley_lieb(4)), {}).report);
  EXPECT_NE(v.find("refuted at check a"), std::string::npos);
  auto o = suite_options(1);
  o.allow_skips = true;
  auto s = render_markdown(paper_suite(o).report);
  EXPECT_NE(s.find("skip"), std::string::npos);
}
