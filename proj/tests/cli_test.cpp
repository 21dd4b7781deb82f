#include "polcovar/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "polcovar/moments.hpp"
#include "polcovar/render.hpp"
#include "test_support.hpp"

namespace polcovar {
namespace {

using testing::q;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  int status = run_cli(std::move(args), in, out, err);
  return {status, out.str(), err.str()};
}

std::string FirstLine(const std::string& s) { return s.substr(0, s.find('\n')); }

TEST(RenderTest, Human) {
  EXPECT_EQ(render_human(Polynomial()), "0");
  EXPECT_EQ(render_human(Polynomial({0, 1})), "n");
  EXPECT_EQ(render_human(Polynomial({0, q(1, 24), q(-1, 16), q(1, 48)})), "1/48 n^3 - 1/16 n^2 + 1/24 n");
  EXPECT_EQ(render_human(Polynomial({q(3, 4), -1, 0, -2})), "-2 n^3 - n + 3/4");
  EXPECT_EQ(render_human(Polynomial({-1})), "-1");
}

TEST(RenderTest, MatrixCsv) {
  EXPECT_EQ(render_matrix_csv(Polynomial()), "0\n1\n");
  EXPECT_EQ(render_matrix_csv(Polynomial({0, q(-3, 64), q(11, 128), q(-3, 64), q(1, 128)})),
            "1,-3,11,-3,0\n128,64,128,64,1\n");
  auto m = to_matrix(Polynomial({q(5, 2), 0, q(-1, 3)}));
  EXPECT_EQ(m.numerators, (std::vector<BigInt>{-1, 0, 5}));
  EXPECT_EQ(m.denominators, (std::vector<BigInt>{3, 1, 2}));
}

TEST(RenderPropertyTest, HumanFormatRoundTrips) {
  testing::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = testing::random_polynomial(rng, 8);
    EXPECT_EQ(testing::parse_human(render_human(p)), p) << render_human(p);
  }
  for (const char* name : {"triangle", "wedge", "square", "k4"}) {
    auto v = variance_report(builtin_pattern(name)).covariance;
    EXPECT_EQ(testing::parse_human(render_human(v)), v);
  }
}

TEST(RenderPropertyTest, MatrixRowsAreCanonical) {
  testing::Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = testing::random_polynomial(rng, 6);
    auto m = to_matrix(p);
    ASSERT_EQ(m.numerators.size(), m.denominators.size());
    std::vector<Rational> coeffs;
    for (std::size_t i = m.numerators.size(); i-- > 0;) {
      EXPECT_GT(m.denominators[i], 0);
      EXPECT_EQ(boost::multiprecision::gcd(boost::multiprecision::abs(m.numerators[i]), m.denominators[i]), 1);
      coeffs.emplace_back(m.numerators[i], m.denominators[i]);
    }
    EXPECT_EQ(Polynomial(coeffs), p);
  }
}

TEST(CliMeanTest, Examples) {
  auto r = Cli({"mean", "--builtin", "triangle"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "1/48 n^3 - 1/16 n^2 + 1/24 n\n");
  EXPECT_EQ(Cli({"mean", "--builtin", "node"}).out, "n\n");
  EXPECT_EQ(Cli({"mean", "--builtin", "square", "--format", "matrix-csv"}).out, "1,-3,11,-3,0\n128,64,128,64,1\n");
}

TEST(CliMeanTest, Eval) {
  auto r = Cli({"mean", "--builtin", "edge", "--eval", "5", "--digits", "3"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("mean = 5.00 (exact 5)"), std::string::npos) << r.out;
  auto csv = Cli({"mean", "--builtin", "edge", "--eval", "5", "--format", "matrix-csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find("#")), "1,-1,0\n4,4,1\n");
  EXPECT_NE(csv.out.find("# mean = 5.0000"), std::string::npos) << csv.out;
}

TEST(CliVarTest, Examples) {
  auto r = Cli({"var", "--builtin", "triangle", "--eval", "1000000", "--stddev"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(FirstLine(r.out), "1/128 n^4 - 11/384 n^3 + 1/32 n^2 - 1/96 n");
  EXPECT_NE(r.out.find("mean = 2.0833e16"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("stddev = 8.8388e10"), std::string::npos) << r.out;
  EXPECT_EQ(Cli({"var", "--builtin", "node"}).out, "0\n");
  EXPECT_EQ(Cli({"var", "--builtin", "wedge"}).out, "1/8 n^4 - 19/32 n^3 + 29/32 n^2 - 7/16 n\n");
}

TEST(CliVarTest, StddevNeedsEval) {
  EXPECT_EQ(Cli({"var", "--builtin", "triangle", "--stddev"}).status, kExitUsage);
}

TEST(CliVarTest, WorkersAndPruneDoNotChangeOutput) {
  auto base = Cli({"var", "--builtin", "square", "--workers", "1"}).out;
  EXPECT_EQ(Cli({"var", "--builtin", "square", "--workers", "4"}).out, base);
  EXPECT_EQ(Cli({"var", "--builtin", "square", "--prune"}).out, base);
}

TEST(CliCovTest, Examples) {
  EXPECT_EQ(Cli({"cov", "--builtin", "edge", "--builtin2", "triangle"}).out, "1/32 n^3 - 3/32 n^2 + 1/16 n\n");
  EXPECT_EQ(Cli({"cov", "--builtin", "node", "--builtin2", "triangle"}).out, "0\n");
  EXPECT_EQ(Cli({"cov", "--builtin", "square", "--builtin2", "square"}).out, Cli({"var", "--builtin", "square"}).out);
  EXPECT_EQ(Cli({"cov", "--builtin", "edge"}).status, kExitUsage);
}

TEST(CliVerifyTest, Examples) {
  auto r = Cli({"verify", "--builtin", "triangle", "--n", "3,4,5"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("all 3 checks passed"), std::string::npos) << r.out;

  auto pair = Cli({"verify", "--builtin", "edge", "--builtin2", "triangle", "--n", "3"});
  EXPECT_EQ(pair.status, kExitOk);
  EXPECT_NE(pair.out.find("covariance 3/16 (oracle 3/16)"), std::string::npos) << pair.out;

  auto capped = Cli({"verify", "--builtin", "k4", "--n", "9"});
  EXPECT_EQ(capped.status, kExitLimit);
  EXPECT_NE(capped.err.find("exhaustive cap"), std::string::npos) << capped.err;
}

TEST(CliPatternSourceTest, StdinAndFiles) {
  EXPECT_EQ(Cli({"mean", "--stdin"}, "0 1 1\n1 0 1\n1 1 0\n").out, "1/48 n^3 - 1/16 n^2 + 1/24 n\n");
  EXPECT_EQ(Cli({"mean", "--stdin"}, "3\n0 1\n1 2\n").out, Cli({"mean", "--builtin", "wedge"}).out);

  auto path = std::filesystem::temp_directory_path() / "polcovar_cli_test_square.txt";
  {
    std::ofstream f(path);
    f << "4\n0 1\n1 2\n2 3\n3 0\n";
  }
  EXPECT_EQ(Cli({"var", "--file", path.string()}).out, Cli({"var", "--builtin", "square"}).out);
  EXPECT_EQ(Cli({"cov", "--file", path.string(), "--file2", path.string()}).out,
            Cli({"var", "--builtin", "square"}).out);
  std::filesystem::remove(path);

  EXPECT_EQ(Cli({"mean", "--file", "/nonexistent/pattern"}).status, kExitUsage);
  EXPECT_EQ(Cli({"mean"}).status, kExitUsage);
  EXPECT_EQ(Cli({"mean", "--builtin", "edge", "--stdin"}).status, kExitUsage);
}

TEST(CliErrorTest, ValidationRulesProduceDistinctMessages) {
  auto diagonal = Cli({"mean", "--stdin"}, "0 1\n1 1\n");
  auto asymmetric = Cli({"mean", "--stdin"}, "0 1\n0 0\n");
  auto entry = Cli({"mean", "--stdin"}, "0 2\n2 0\n");
  for (const auto* r : {&diagonal, &asymmetric, &entry}) EXPECT_EQ(r->status, kExitInvalidPattern);
  EXPECT_NE(diagonal.err.find("nonzero diagonal"), std::string::npos);
  EXPECT_NE(asymmetric.err.find("not symmetric"), std::string::npos);
  EXPECT_NE(entry.err.find("not 0/1"), std::string::npos);
}

TEST(CliErrorTest, Limits) {
  auto r = Cli({"var", "--builtin", "clique:9"});
  EXPECT_EQ(r.status, kExitLimit);
  EXPECT_NE(r.err.find("9 vertices"), std::string::npos) << r.err;
  EXPECT_EQ(Cli({"mean", "--builtin", "pentagon"}).status, kExitInvalidPattern);
  EXPECT_EQ(Cli({"mean", "--builtin", "edge", "--eval", "abc"}).status, kExitUsage);
  EXPECT_EQ(Cli({"mean", "--builtin", "edge", "--format", "xml"}).status, kExitUsage);
  EXPECT_EQ(Cli({}).status, kExitUsage);
}

TEST(CliBuiltinsTest, ListsNames) {
  auto r = Cli({"builtins"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("triangle\n"), std::string::npos);
  EXPECT_NE(r.out.find("clique:K\n"), std::string::npos);
}

TEST(CliHelpTest, HelpExitsZero) { EXPECT_EQ(Cli({"--help"}).status, kExitOk); }

}  // namespace
}  // namespace polcovar
