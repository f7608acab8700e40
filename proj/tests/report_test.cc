#include "bentgraph/cli/report.h"

#include <gtest/gtest.h>

#include "bentgraph/cli/function_parser.h"
#include "bentgraph/generators.h"

namespace bentgraph::cli {
namespace {

bool has_warning(const Json& report, const std::string& code) {
  for (const auto& w : report["warnings"]) {
    if (w["code"] == code) return true;
  }
  return false;
}

TEST(AnalysisReport, AndFunction) {
  const auto r = analysis_report("b:0001", parse_function("b:0001"));
  EXPECT_EQ(r["is_bent"], true);
  EXPECT_EQ(r["support_size"], 1);
  EXPECT_EQ(r["fourier_numerators"][0], r["support_size"]);
  EXPECT_EQ(r["graph"]["params"], Json::parse(R"({"v":4,"k":1,"lambda":0,"mu":0})"));
  EXPECT_EQ(r["graph"]["lambda_eq_mu"], true);
  EXPECT_EQ(r["graph"]["family"], "minus");
  EXPECT_TRUE(r["warnings"].empty());
}

TEST(AnalysisReport, CompleteGraphCarriesTableWarning) {
  const auto r = analysis_report("b:0111", parse_function("b:0111"));
  EXPECT_EQ(r["graph"]["params"]["mu"], nullptr);
  EXPECT_EQ(r["graph"]["family"], "plus");
  EXPECT_TRUE(has_warning(r, "reference_table_discrepancy"));
}

TEST(AnalysisReport, LoopAndDegenerateWarnings) {
  EXPECT_TRUE(has_warning(analysis_report("b:1000", parse_function("b:1000")), "loops"));
  const auto matching = analysis_report("b:0100000000000000", parse_function("b:0100000000000000"));
  EXPECT_EQ(matching["is_bent"], false);
  EXPECT_TRUE(has_warning(matching, "degenerate_srg"));
}

TEST(AnalysisReport, InvariantsHoldOnRandomInputs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto f = random_function(2 * (1 + static_cast<int>(seed % 3)), seed);
    const auto r = analysis_report("x", f);
    EXPECT_EQ(r["support_size"], r["fourier_numerators"][0]);
    if (f(0) == 0 && !has_warning(r, "degenerate_srg")) {
      EXPECT_EQ(r["is_bent"], r["graph"]["lambda_eq_mu"]);
    }
  }
}

TEST(AnalysisReport, ByteDeterministic) {
  const auto f = random_function(6, 5);
  EXPECT_EQ(analysis_report("id", f).dump(), analysis_report("id", f).dump());
}

TEST(AnalysisReport, SkipsSrgAboveGuard) {
  ResourceLimits limits;
  limits.max_srg_arity = 4;
  const auto r = analysis_report("x", random_function(6, 1), limits);
  EXPECT_EQ(r["graph"], nullptr);
  EXPECT_TRUE(has_warning(r, "srg_skipped"));
}

TEST(SpectrumCsv, Format) {
  EXPECT_EQ(spectrum_csv(parse_function("b:0001")),
            "index,i_bits,lambda_i\n0,00,1\n1,01,-1\n2,10,-1\n3,11,1\n");
}

TEST(GraphDot, MatchingAndLoops) {
  EXPECT_EQ(graph_dot(build_cayley(parse_function("b:0001"))),
            "graph cayley {\n"
            "  v0 [label=\"00\"];\n  v1 [label=\"01\"];\n  v2 [label=\"10\"];\n  v3 [label=\"11\"];\n"
            "  v0 -- v3;\n  v1 -- v2;\n}\n");
  const auto dot = graph_dot(build_cayley(parse_function("b:1001")));
  EXPECT_NE(dot.find("  v2 -- v2;\n"), std::string::npos);
}

TEST(PredictReport, N8AndWarnings) {
  const auto r = predict_report(8);
  EXPECT_EQ(r["plus"]["k"], 136);
  EXPECT_EQ(r["plus"]["lambda"], 72);
  EXPECT_EQ(r["minus"]["k"], 120);
  EXPECT_EQ(r["minus"]["mu"], 56);
  EXPECT_TRUE(r["warnings"].empty());
  EXPECT_EQ(predict_report(2)["warnings"].size(), 1u);
  EXPECT_EQ(predict_report(4)["warnings"].size(), 1u);
}

TEST(VectorialReport, Nyberg) {
  const auto F = nyberg_vectorial_bent(4);
  const auto r = vectorial_report({"f1", "f2"}, F);
  EXPECT_EQ(r["is_vectorial_bent"], true);
  EXPECT_EQ(r["nl"], 6);
  EXPECT_EQ(r["subsets"].size(), 3u);
  EXPECT_EQ(r["all_subsets_pass"], true);
}

TEST(EnumerateOutput, CountAndCsv) {
  const auto all = enumerate_bent(2);
  EXPECT_EQ(enumerate_report(2, all)["count"], 8);
  const auto csv = enumerate_csv(all);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "index,truth_table");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
}

}  // namespace
}  // namespace bentgraph::cli
