#include <gtest/gtest.h>

#include "monoclose/cli.hpp"
#include "monoclose/verify.hpp"

namespace monoclose {
namespace {

VerifyOptions small() {
  VerifyOptions opt;
  opt.n_max = 3;
  opt.t_max = 2;
  opt.property_cases = 20;
  return opt;
}

TEST(Verify, SmallGridPassesWithOneFlag) {
  const auto report = verify_paper(small());
  EXPECT_TRUE(report.passed()) << report.to_json().dump(2);
  ASSERT_EQ(report.discrepancies.size(), 1u);
  EXPECT_NE(report.discrepancies[0].computed.find("y*z"), std::string::npos) << report.discrepancies[0].computed;
}

TEST(Verify, ReportIsIdempotent) {
  EXPECT_EQ(verify_paper(small()).to_json().dump(), verify_paper(small()).to_json().dump());
}

TEST(Verify, RejectsBadGrid) {
  auto opt = small();
  opt.n_max = 2;
  EXPECT_THROW(verify_paper(opt), UsageError);
  opt = small();
  opt.t_max = 0;
  EXPECT_THROW(verify_paper(opt), UsageError);
}

TEST(Verify, CliJsonShape) {
  std::ostringstream out, err;
  const int code = cli::run({"--format", "json", "verify-paper", "--nmax", "3", "--tmax", "1", "--cases", "10"}, out, err);
  ASSERT_EQ(code, 0) << err.str();
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_TRUE(j.contains("checks"));
  EXPECT_EQ(j["flagged"].size(), 1u);
  EXPECT_EQ(j["overall"], "pass");
}

}  // namespace
}  // namespace monoclose
