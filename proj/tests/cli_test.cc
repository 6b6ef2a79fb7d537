#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "momsym/cli.h"
#include "momsym/serialization.h"

namespace momsym::cli {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("momsym_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write_text_file_atomic(lap(), R"({"d":1,"s":1,"r":1,"coeffs":[{"k":[-1],"m":[[[-1,0]]]},{"k":[0],"m":[[[2,0]]]},{"k":[1],"m":[[[-1,0]]]}]})");
    write_text_file_atomic(one(), R"({"d":1,"s":1,"r":1,"coeffs":[{"k":[0],"m":[[[1,0]]]}]})");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string lap() const { return (dir_ / "lap.json").string(); }
  std::string one() const { return (dir_ / "one.json").string(); }
  std::string out_dir() const { return (dir_ / "out").string(); }

  int call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(Cli, BuildToeplitzCsv) {
  ASSERT_EQ(call({"build", "--kind", "toeplitz", "--symbol", lap(), "--n", "8"}), kOk) << err_.str();
  const DenseMatrix a = matrix_from_csv(out_.str());
  EXPECT_EQ(a.rows(), 8u);
  EXPECT_EQ(a(0, 1), Complex(-1));
  EXPECT_EQ(a(7, 7), Complex(2));
}

TEST_F(Cli, BuildTauAndCirculant) {
  ASSERT_EQ(call({"build", "--kind", "tau", "--symbol", lap(), "--eps", "0", "--phi", "1", "--n", "8"}), kOk);
  EXPECT_EQ(matrix_from_csv(out_.str())(7, 7), Complex(1));
  ASSERT_EQ(call({"build", "--kind", "circulant", "--symbol", lap(), "--n", "8", "--format", "json"}), kOk);
  const DenseMatrix c = matrix_from_json(parse_json(out_.str()));
  EXPECT_EQ(c(0, 7), Complex(-1));
}

TEST_F(Cli, BuildRectAndMultilevel) {
  ASSERT_EQ(call({"build", "--kind", "toeplitz-rect", "--symbol", lap(), "--n", "2", "--m", "4"}), kOk);
  EXPECT_EQ(matrix_from_csv(out_.str()).cols(), 4u);
  EXPECT_EQ(call({"build", "--kind", "multilevel", "--symbol", lap(), "--n", "2,3"}), kShapeError);
}

TEST_F(Cli, ExitCodes) {
  write_text_file_atomic(dir_ / "bad.json", "{nope");
  EXPECT_EQ(call({"build", "--kind", "toeplitz", "--symbol", (dir_ / "bad.json").string(), "--n", "4"}), kParseError);
  EXPECT_EQ(call({"build", "--kind", "toeplitz", "--symbol", lap(), "--n", "0"}), kShapeError);
  EXPECT_EQ(call({"build", "--kind", "hexagonal", "--symbol", lap(), "--n", "4"}), kParseError);
  EXPECT_EQ(call({"frobnicate"}), kParseError);
  EXPECT_EQ(call({"--help"}), kOk);
  EXPECT_EQ(call({"build", "--kind", "tau", "--symbol", lap(), "--n", "4", "--eps", "2"}), kShapeError);
}

TEST_F(Cli, SpectrumFromFileAndBuild) {
  write_text_file_atomic(dir_ / "i.csv", "1,0,0\n0,1,0\n0,0,1\n");
  ASSERT_EQ(call({"spectrum", "--kind", "hermitian", "--matrix", (dir_ / "i.csv").string()}), kOk);
  EXPECT_EQ(out_.str(), "value\n1\n1\n1\n");
  write_text_file_atomic(dir_ / "d.csv", "3,0\n0,-2\n");
  ASSERT_EQ(call({"spectrum", "--kind", "general", "--matrix", (dir_ / "d.csv").string()}), kOk);
  EXPECT_EQ(out_.str(), "re,im\n-2,0\n3,0\n");
  write_text_file_atomic(dir_ / "s.csv", "2,-1\n-1,2\n");
  ASSERT_EQ(call({"spectrum", "--kind", "singular", "--matrix", (dir_ / "s.csv").string()}), kOk);
  ASSERT_EQ(call({"spectrum", "--kind", "hermitian", "--symbol", lap(), "--n", "3", "--matrix-kind", "toeplitz"}), kOk);
  EXPECT_EQ(call({"spectrum", "--kind", "hermitian", "--matrix", (dir_ / "missing.csv").string()}), kParseError);
  write_text_file_atomic(dir_ / "ns.csv", "1,2\n0,1\n");
  EXPECT_EQ(call({"spectrum", "--kind", "hermitian", "--matrix", (dir_ / "ns.csv").string()}), kShapeError);
}

TEST_F(Cli, CompareExample1) {
  ASSERT_EQ(call({"compare", "--symbol", lap(), "--symbol", one(), "--scaling", "one", "--scaling",
                  R"({"form":"inverse_power","p":2,"base":"n+1"})", "--n", "7", "--grid", "tau:0,1", "--matrix-kind",
                  "tau", "--eps", "0", "--phi", "1", "--format", "json"}),
            kOk)
      << err_.str();
  const Json j = parse_json(out_.str());
  EXPECT_LE(j["momentary"]["max_error"].get<double>(), 1e-12);
  for (const auto& e : j["glt"]["per_index_error"]) EXPECT_NEAR(e.get<double>(), 1.0 / 64, 1e-12);

  ASSERT_EQ(call({"compare", "--symbol", lap(), "--symbol", one(), "--scaling", "one", "--scaling",
                  "inverse_power:2:n+1", "--n", "7", "--grid", "tau:0,0", "--matrix-kind", "tau", "--phi", "1",
                  "--format", "json"}),
            kOk);
  EXPECT_GT(parse_json(out_.str())["momentary"]["max_error"].get<double>(), 1e-3);
}

TEST_F(Cli, CompareConstantSymbolAndMismatch) {
  ASSERT_EQ(call({"compare", "--symbol", one(), "--n", "5", "--grid", "circulant", "--format", "json"}), kOk);
  EXPECT_EQ(parse_json(out_.str())["glt"]["max_error"].get<double>(), 0.0);
  EXPECT_EQ(call({"compare", "--symbol", lap(), "--n", "5", "--grid", "tau:0,0", "--grid", "tau:0,0"}), kShapeError);
  EXPECT_EQ(call({"compare", "--symbol", lap(), "--n", "5", "--grid", "custom:0.1,0.2"}), kShapeError);
  EXPECT_EQ(call({"compare", "--symbol", lap(), "--scaling", "one", "--scaling", "one", "--n", "5", "--grid",
                  "tau:0,0"}),
            kShapeError);
  EXPECT_EQ(call({"compare", "--symbol", lap(), "--scaling", "cubic", "--n", "5", "--grid", "tau:0,0"}), kParseError);
}

TEST_F(Cli, CompareWritesFiles) {
  ASSERT_EQ(call({"compare", "--symbol", lap(), "--n", "6", "--grid", "tau:0,0", "--out", out_dir()}), kOk);
  EXPECT_TRUE(fs::exists(fs::path(out_dir()) / "compare_glt_tau_0_0.json"));
  EXPECT_TRUE(fs::exists(fs::path(out_dir()) / "compare_momentary_tau_0_0.csv"));
}

TEST_F(Cli, GridExport) {
  ASSERT_EQ(call({"grid", "--grid", "circulant", "--n", "2"}), kOk);
  EXPECT_EQ(out_.str(), "theta\n0\n3.141592653589793\n");
  EXPECT_EQ(call({"grid", "--grid", "tau:5,0", "--n", "2"}), kShapeError);
}

TEST_F(Cli, Distribution) {
  ASSERT_EQ(call({"distribution", "--symbol", lap(), "--n", "16", "--test", "abs_power_1", "--format", "json"}), kOk);
  EXPECT_NEAR(parse_json(out_.str())["gap"].get<double>(), 0.0, 1e-12);
  ::setenv("MOMSYM_QUAD_POINTS", "1", 1);
  EXPECT_EQ(call({"distribution", "--symbol", lap(), "--n", "16"}), kParseError);
  ::setenv("MOMSYM_QUAD_POINTS", "64", 1);
  EXPECT_EQ(call({"distribution", "--symbol", lap(), "--n", "16"}), kOk);
  ::unsetenv("MOMSYM_QUAD_POINTS");
  EXPECT_EQ(call({"distribution", "--symbol", lap(), "--n", "16", "--test", "exp"}), kParseError);
}

TEST_F(Cli, ExamplesWriteArtifactsDeterministically) {
  ASSERT_EQ(call({"example", "1", "--n", "31", "--out", out_dir()}), kOk) << err_.str();
  const auto json = fs::path(out_dir()) / "example1_n31_dirichlet_neumann.json";
  ASSERT_TRUE(fs::exists(json));
  const std::string first = read_text_file(json);
  EXPECT_TRUE(parse_json(first)["all_passed"].get<bool>());
  ASSERT_EQ(call({"example", "1", "--n", "31", "--out", out_dir()}), kOk);
  EXPECT_EQ(read_text_file(json), first);
  EXPECT_TRUE(fs::exists(fs::path(out_dir()) / "example1_n31_dirichlet_neumann_glt_tau_0_1.csv"));

  ASSERT_EQ(call({"example", "3", "--N", "2", "--n", "4", "--out", out_dir()}), kOk) << err_.str();
  EXPECT_TRUE(fs::exists(fs::path(out_dir()) / "example3_N2_n4.json"));
  ASSERT_EQ(call({"example", "2", "--n", "5", "--out", out_dir()}), kOk) << err_.str();
  EXPECT_TRUE(fs::exists(fs::path(out_dir()) / "example2_n5_fig1_curves.csv"));
  EXPECT_TRUE(fs::exists(fs::path(out_dir()) / "example2_n5_fig1_eigenvalues.csv"));
  ASSERT_EQ(call({"example", "4", "--n", "7"}), kOk);
  EXPECT_TRUE(parse_json(out_.str())["all_passed"].get<bool>());
}

TEST_F(Cli, ExampleErrors) {
  EXPECT_EQ(call({"example", "5", "--n", "4"}), kParseError);
  EXPECT_EQ(call({"example", "4", "--n", "8"}), kShapeError);
  EXPECT_EQ(call({"example", "3", "--n", "4"}), kShapeError);
  EXPECT_EQ(call({"example", "1"}), kShapeError);
}

}  // namespace
}  // namespace momsym::cli
