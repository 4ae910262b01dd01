#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "monoclose/cli.hpp"

namespace monoclose {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
  fs::path dir;

  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("monoclose-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string file(const std::string& name, const std::string& content) {
    const auto p = dir / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string i32() { return file("i32.txt", "ring: x1 x2 x3\ngens: x1^2*x2^2, x1^2*x3^2, x2^2*x3^2\n"); }
};

TEST_F(Cli, ClosureText) {
  const auto r = run({"closure", i32()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_ideal(r.out).to_ideal(),
            MonomialIdeal(3, {{2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}}));
}

TEST_F(Cli, JsonIsByteStableAndRoundTrips) {
  const auto a = run({"--format", "json", "closure", i32()});
  const auto b = run({"--format", "json", "closure", i32()});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto again = run({"--format", "json", "closure", file("c.json", a.out)});
  EXPECT_EQ(again.out, a.out);
}

TEST_F(Cli, Queries) {
  EXPECT_EQ(run({"cm", i32()}).out, "true\npd: 2\ncodim: 2\n");
  EXPECT_EQ(run({"pd", i32()}).out, "2\n");
  EXPECT_EQ(run({"codim", i32()}).out, "2\n");
  EXPECT_EQ(run({"member", i32(), "--point", "1,1,1"}).out, "outside\nfunctional: 1 1 1\n");
  const auto colon = run({"colon", i32(), "--by", "x1"});
  EXPECT_EQ(parse_ideal(colon.out).to_ideal(), MonomialIdeal(3, {{1, 2, 0}, {1, 0, 2}, {0, 2, 2}}));
  EXPECT_EQ(run({"reduce", "--n", "3", "--t", "3", "--point", "2,2,2"}).out, "2,2,2\n");
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(run({"closure", (dir / "missing.txt").string()}).code, cli::kUsageError);
  EXPECT_EQ(run({"closure", file("bad.txt", "ring: x\ngens: y\n")}).code, cli::kUsageError);
  EXPECT_EQ(run({"closure", file("unit.txt", "ring: x\ngens: 1\n")}).code, cli::kComputationError);
  EXPECT_EQ(run({"--budget", "3", "closure", i32()}).code, cli::kComputationError);
  EXPECT_EQ(run({"family", "--n", "2", "--t", "1"}).code, cli::kComputationError);
  EXPECT_EQ(run({"verify-paper", "--nmax", "2"}).code, cli::kUsageError);
  EXPECT_EQ(run({"colon", i32()}).code, cli::kUsageError);
  EXPECT_EQ(run({"figure", "--t", "2", "--n", "4", "--out", (dir / "f.svg").string()}).code, cli::kUsageError);
}

TEST_F(Cli, FigureCsv) {
  const auto path = (dir / "fig.csv").string();
  ASSERT_EQ(run({"figure", "--t", "1", "--out", path, "--csv"}).code, 0);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "a1,a2,a3,kind,x,y");
  int rows = 0;
  while (std::getline(in, line))
    ++rows;
  EXPECT_EQ(rows, 3);
}

TEST_F(Cli, FigureSvg) {
  const auto path = (dir / "fig.svg").string();
  ASSERT_EQ(run({"figure", "--t", "2", "--out", path}).code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("<svg"), std::string::npos);
}

}  // namespace
}  // namespace monoclose
