#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "laxforge/error.hpp"
#include "laxforge/shell.hpp"

using namespace laxforge;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int sh(const std::string& cmd) {
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

class ShellTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("laxforge-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string out() const { return dir.string(); }
  fs::path dir;
};

}  // namespace

TEST(ShellHelpers, Fingerprint) {
  EXPECT_EQ(fingerprint(""), "cbf29ce484222325");
  EXPECT_EQ(fingerprint("a"), "af63dc4c8601ec8c");
  const auto alg = build_algebra(3, 2);
  EXPECT_EQ(rep_fingerprint(*build_vector_rep(alg)), rep_fingerprint(*build_vector_rep(alg)));
  EXPECT_NE(rep_fingerprint(*build_vector_rep(alg)), rep_fingerprint(*trivial_rep(alg)));
}

TEST(ShellHelpers, ParseZ) {
  EXPECT_EQ(parse_z("q"), LaurentPoly::parse("s^2"));
  EXPECT_EQ(parse_z("q^2"), LaurentPoly::parse("s^4"));
  EXPECT_EQ(parse_z("-q^1/2"), LaurentPoly::parse("-1*s"));
  EXPECT_EQ(parse_z("3/2"), LaurentPoly(make_rational(3, 2)));
  EXPECT_THROW(parse_z("q^x"), InvalidInput);
}

TEST(ShellHelpers, CacheDirPrecedence) {
  JobConfig cfg;
  cfg.out_dir = "/o";
  ::unsetenv("LAXFORGE_CACHE");
  EXPECT_EQ(fs::path(resolve_cache_dir(cfg)), fs::path("/o/.laxforge-cache"));
  ::setenv("LAXFORGE_CACHE", "/env", 1);
  EXPECT_EQ(resolve_cache_dir(cfg), "/env");
  cfg.cache_dir = "/flag";
  EXPECT_EQ(resolve_cache_dir(cfg), "/flag");
  ::unsetenv("LAXFORGE_CACHE");
}

TEST_F(ShellTest, GenerateThenCacheHit) {
  const CliRun a = cli({"generate", "--m", "3", "--n", "2", "--out", out()});
  ASSERT_EQ(a.code, 0) << a.err;
  const Json ja = parse_json(a.out);
  EXPECT_EQ(ja["cache"], "miss");
  EXPECT_TRUE(fs::exists(dir / "sigma_3_2_vector.json"));
  EXPECT_TRUE(fs::exists(dir / "r_vector_3_2.json"));
  const std::string sigma = slurp(dir / "sigma_3_2_vector.json"), r = slurp(dir / "r_vector_3_2.json");
  fs::remove(dir / "sigma_3_2_vector.json");

  const CliRun b = cli({"generate", "--m", "3", "--n", "2", "--out", out()});
  ASSERT_EQ(b.code, 0) << b.err;
  const Json jb = parse_json(b.out);
  EXPECT_EQ(jb["cache"], "hit");
  EXPECT_EQ(jb["fingerprint"], ja["fingerprint"]);
  EXPECT_EQ(slurp(dir / "sigma_3_2_vector.json"), sigma);
  EXPECT_EQ(slurp(dir / "r_vector_3_2.json"), r);
  EXPECT_TRUE(fs::exists(dir / ".laxforge-cache" / ja["fingerprint"].get<std::string>()));
}

TEST_F(ShellTest, UsageErrors) {
  const CliRun small = cli({"generate", "--m", "2", "--n", "0", "--out", out()});
  EXPECT_EQ(small.code, 2);
  EXPECT_NE(small.err.find("m > 2"), std::string::npos);
  EXPECT_EQ(cli({"generate", "--m", "3", "--n", "1", "--out", out()}).code, 2);
  EXPECT_EQ(cli({"verify", "--m", "3", "--n", "0", "--out", out()}).code, 2);  // --suite is required
  EXPECT_EQ(cli({"verify", "--m", "3", "--n", "0", "--suite", "bogus", "--out", out()}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"spectral", "--m", "3", "--n", "0", "--s", "2", "--out", out()}).code, 2);
  EXPECT_EQ(cli({"eval", "--m", "3", "--n", "0", "--out", out()}).code, 2);
  EXPECT_EQ(cli({"generate", "--m", "3", "--n", "0", "--rep", (dir / "missing.json").string(), "--out", out()}).code,
            2);
}

TEST_F(ShellTest, VerifyAllPasses) {
  const CliRun r = cli({"verify", "--m", "3", "--n", "0", "--suite", "all", "--out", out()});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json reports = parse_json(r.out);
  ASSERT_TRUE(reports.is_array());
  EXPECT_EQ(reports.size(), suite_names().size());
  for (const auto& rep : reports) EXPECT_NE(rep["status"], "fail") << rep.dump();
}

TEST_F(ShellTest, VacuousSuiteSucceeds) {
  const CliRun r = cli({"verify", "--m", "3", "--n", "2", "--suite", "extra-serre", "--format", "text", "--out", out()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("vacuous"), std::string::npos);
}

TEST_F(ShellTest, CorruptedSigmaFileFails) {
  ASSERT_EQ(cli({"generate", "--m", "3", "--n", "2", "--out", out()}).code, 0);
  const fs::path file = dir / "sigma_3_2_vector.json";
  Json j = parse_json(slurp(file));
  Json& entries = j["entries"]["mu1,i2"]["matrix"];
  ASSERT_FALSE(entries.empty());
  entries[0][2] = (-LaurentPoly::parse(entries[0][2].get<std::string>())).to_string();
  std::ofstream(file) << dump(j);

  const CliRun r = cli({"verify", "--m", "3", "--n", "2", "--suite", "path-independence", "--sigma", file.string(),
                     "--out", out()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("FAIL"), std::string::npos);
  const Json reports = parse_json(r.out);
  EXPECT_EQ(reports[0]["status"], "fail");
  EXPECT_TRUE(reports[0].contains("witness"));
}

TEST_F(ShellTest, SpectralAtOneIsPermutation) {
  const CliRun r = cli({"spectral", "--m", "3", "--n", "2", "--kind", "untwisted", "--z", "1", "--s", "2", "--out", out()});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = parse_json(slurp(parse_json(r.out)["file"].get<std::string>()));
  const auto alg = build_algebra(3, 2);
  const GradedSpace V = vector_space(*alg);
  const RationalMatrix X = rational_entries_from_json(doc["entries"], GradedSpace::tensor(V, V));
  EXPECT_EQ(X, graded_permutation<Rational>(V));
  EXPECT_EQ(doc["z"], "1");
}

TEST_F(ShellTest, SpectralSymbolicAndPole) {
  const CliRun sym = cli({"spectral", "--m", "3", "--n", "0", "--kind", "twisted", "--out", out()});
  ASSERT_EQ(sym.code, 0) << sym.err;
  EXPECT_TRUE(fs::exists(dir / "spectral_twisted_3_0.json"));
  const CliRun pole = cli({"spectral", "--m", "3", "--n", "0", "--z", "q^2", "--s", "2", "--out", out()});
  EXPECT_EQ(pole.code, 1);
  EXPECT_NE(pole.err.find("error"), std::string::npos);
  EXPECT_EQ(cli({"spectral", "--m", "4", "--n", "2", "--kind", "untwisted", "--out", out()}).code, 1);
}

TEST_F(ShellTest, EvalAnchor) {
  const CliRun r = cli({"eval", "--m", "3", "--n", "0", "--s", "2", "--out", out()});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = parse_json(slurp(dir / "eval_vector_3_0.json"));
  bool found = false;
  for (const auto& e : doc["entries"]) found |= (e[0] == 4 && e[1] == 2 && e[2] == "15/4");
  EXPECT_TRUE(found);
  EXPECT_EQ(cli({"eval", "--m", "3", "--n", "0", "--s", "0", "--out", out()}).code, 2);
}

TEST_F(ShellTest, BinaryHonoursCacheEnvironment) {
  const std::string bin = LAXFORGE_BIN;
  const fs::path env_cache = dir / "env-cache";
  EXPECT_EQ(sh("LAXFORGE_CACHE='" + env_cache.string() + "' '" + bin + "' generate --m 3 --n 0 --format text --out '" +
               out() + "' > /dev/null"),
            0);
  EXPECT_TRUE(fs::exists(env_cache));
  EXPECT_FALSE(fs::exists(dir / ".laxforge-cache"));
  EXPECT_EQ(sh("'" + bin + "' generate --m 2 --n 0 --out '" + out() + "' 2> /dev/null"), 2);
  EXPECT_EQ(sh("'" + bin + "' verify --m 3 --n 0 --suite ybe --out '" + out() + "' > /dev/null"), 0);
}
