#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "smallcover/commands.hpp"
#include "support.hpp"

using namespace smallcover;
namespace cli = smallcover::cli;

namespace {

std::string payload(const std::string& out) { return out.substr(out.find("---\n") + 4); }

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "smallcover-cli-test";
  std::filesystem::create_directories(dir);
  return dir;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(SMALLCOVER_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, ValidateReportsStatistics) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_validate("dodecahedron", {}, out, err), cli::kOk);
  const std::string p = payload(out.str());
  EXPECT_NE(p.find("valid dim 3 facets 12 vertices 20"), std::string::npos);
  EXPECT_NE(p.find("h_vector 1 9 9 1"), std::string::npos);
  EXPECT_NE(out.str().find("# input dodecahedron sha256 "), std::string::npos);
}

TEST(Cli, ValidateRejectsBadScheme) {
  const auto path = (scratch() / "bad.scheme").string();
  { std::ofstream(path) << "dim 3\nfacets 4\n1 2 3 4\n"; }
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_validate(path, {}, out, err), cli::kFailure);
  EXPECT_NE(err.str().find("vertex 1 has 4 facets, expected 3"), std::string::npos);
}

TEST(Cli, EnumeratePayloadIsIndependentOfThreads) {
  cli::CommonOptions one, four;
  four.threads = 4;
  std::ostringstream a, b, err;
  ASSERT_EQ(cli::cmd_enumerate("dodecahedron", one, a, err), cli::kOk);
  ASSERT_EQ(cli::cmd_enumerate("dodecahedron", four, b, err), cli::kOk);
  EXPECT_EQ(payload(a.str()), payload(b.str()));
  EXPECT_NE(payload(a.str()).find("classes 25\n"), std::string::npos);
}

TEST(Cli, EnumerateGuardRail) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_enumerate("c120", {}, out, err), cli::kFailure);
  EXPECT_NE(err.str().find("limited to 16"), std::string::npos);
}

TEST(Cli, SwReportFromClassList) {
  const auto path = (scratch() / "classes.txt").string();
  {
    std::ofstream f(path);
    write_class_list(f, sctest::dodecahedral_classes());
  }
  std::ostringstream a, b, err;
  ASSERT_EQ(cli::cmd_sw_report("dodecahedron", path, {}, a, err), cli::kOk);
  ASSERT_EQ(cli::cmd_sw_report("dodecahedron", std::nullopt, {}, b, err), cli::kOk);
  EXPECT_EQ(payload(a.str()), payload(b.str()));
  EXPECT_NE(payload(a.str()).find("w2_nonzero: 22 / 25\n"), std::string::npos);
  EXPECT_NE(payload(a.str()).find("class 1 w1 "), std::string::npos);
}

TEST(Cli, Build4dAndReplay) {
  const auto cert = (scratch() / "c.cert").string();
  cli::Build4dOptions b;
  b.class_ordinal = 1;
  b.cert_path = cert;
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_build4d(b, {}, out, err), cli::kOk) << err.str();
  std::ostringstream rout, rerr;
  EXPECT_EQ(cli::cmd_replay(cert, {}, rout, rerr), cli::kOk) << rerr.str();
  EXPECT_NE(rout.str().find("replay ok"), std::string::npos);
}

TEST(Cli, Build4dUsageErrors) {
  std::ostringstream out, err;
  cli::Build4dOptions b;
  b.cert_path = (scratch() / "x.cert").string();
  EXPECT_EQ(cli::cmd_build4d(b, {}, out, err), cli::kUsage);  // neither --class nor --coloring
  b.class_ordinal = 26;
  EXPECT_EQ(cli::cmd_build4d(b, {}, out, err), cli::kUsage);
  b.class_ordinal = 1;
  b.c = "10x";
  EXPECT_EQ(cli::cmd_build4d(b, {}, out, err), cli::kUsage);
  b.c = "101";
  EXPECT_EQ(cli::cmd_build4d(b, {}, out, err), cli::kUsage);
}

TEST(Cli, Build4dFailsWhenNoDualClassExists) {
  std::size_t ordinal = 0;
  const auto& classes = sctest::dodecahedral_classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (total_sw(classes[i].representative).w[2].is_zero()) ordinal = i + 1;
  }
  ASSERT_NE(ordinal, 0u);
  cli::Build4dOptions b;
  b.class_ordinal = ordinal;
  b.cert_path = (scratch() / "none.cert").string();
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_build4d(b, {}, out, err), cli::kFailure);
}

TEST(Cli, Gen120CheckPasses) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_gen120(true, {}, out, err), cli::kOk);
  EXPECT_NE(out.str().find("isomorphic_to_bundled true"), std::string::npos);
}

TEST(CliBinary, ExitCodes) {
  const auto dir = scratch();
  EXPECT_EQ(run_binary("validate pentagon"), 0);
  EXPECT_EQ(run_binary("validate /nonexistent/file"), 1);
  EXPECT_EQ(run_binary(""), 2);
  EXPECT_EQ(run_binary("frobnicate"), 2);
  EXPECT_EQ(run_binary("enumerate"), 2);
  EXPECT_EQ(run_binary("--threads 0 enumerate pentagon"), 2);
  EXPECT_EQ(run_binary("--out " + dir.string() + " build4d --class 1 --c w1"), 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "build4d.cert"));
  EXPECT_TRUE(std::filesystem::exists(dir / "build4d.txt"));
  EXPECT_EQ(run_binary("replay " + (dir / "build4d.cert").string()), 0);

  std::string text;
  {
    std::ifstream in(dir / "build4d.cert");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  text[text.find("facet 1: ") + 9] ^= 1;
  { std::ofstream(dir / "tampered.cert") << text; }
  EXPECT_EQ(run_binary("replay " + (dir / "tampered.cert").string()), 1);
}

TEST(CliBinary, DataDirectoryOverride) {
  const auto dir = scratch() / "data";
  std::filesystem::create_directories(dir);
  std::filesystem::remove(dir / "c120.scheme");
  EXPECT_EQ(run_binary("validate c120"), 0);
  const std::string env = "SMALLCOVER_DATA_DIR=" + dir.string() + " ";
  const int status = std::system((env + SMALLCOVER_CLI + " validate c120 >/dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 1);
}
