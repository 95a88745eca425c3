#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <memory>

#include "support.hpp"

namespace noricert {
namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + " " NORICERT_CLI " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

RunConfig quick(std::vector<int> ns) {
  RunConfig cfg;
  cfg.n_list = std::move(ns);
  cfg.samples = 200;
  cfg.atlas_samples = 300;
  cfg.atlas_max_index = 4;
  return cfg;
}

TEST(ParseNList, RangesAndLists) {
  EXPECT_EQ(parse_n_list("2..4"), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(parse_n_list("2,3"), (std::vector<int>{2, 3}));
  EXPECT_EQ(parse_n_list("3"), (std::vector<int>{3}));
  EXPECT_THROW(parse_n_list("4..2"), ConfigError);
  EXPECT_THROW(parse_n_list("two"), ConfigError);
  EXPECT_THROW(parse_n_list("2,x"), ConfigError);
  EXPECT_THROW(parse_n_list(""), ConfigError);
}

TEST(Validate, RejectsBadConfigs) {
  RunConfig ok;
  EXPECT_NO_THROW(validate(ok));
  auto bad = ok;
  bad.n_list = {1};
  EXPECT_THROW(validate(bad), ConfigError);
  bad = ok;
  bad.n_list = {6};
  EXPECT_THROW(validate(bad), ConfigError);
  bad = ok;
  bad.r = make_rational(9, 10);
  EXPECT_THROW(validate(bad), ConfigError);
  bad = ok;
  bad.rho = Rational(1);
  EXPECT_THROW(validate(bad), ConfigError);
  bad = ok;
  bad.n_list = {};
  EXPECT_THROW(validate(bad), ConfigError);
  bad = ok;
  bad.eps_override = Rational(0);
  EXPECT_THROW(validate(bad), ConfigError);
}

TEST(Digest, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(family_digest(testing::family(2)), family_digest(build_family(2)));
  EXPECT_NE(family_digest(testing::family(2)), family_digest(testing::family(3)));
}

TEST(RunVerify, LemmaDivEntriesPerN) {
  for (int n : {2, 4}) {
    const auto res = run_verify(quick({n}));
    EXPECT_EQ(res.exit_code(), kExitOk) << n;
    const auto j = report_json(res, false);
    std::vector<int> ks;
    for (const auto& c : j.at("per_n").at(0).at("certificates"))
      if (c.at("kind") == "lemma_div") ks.push_back(c.at("index").get<int>());
    std::vector<int> expected;
    for (int k = 1; k <= n - 1; ++k) expected.push_back(k);
    EXPECT_EQ(ks, expected);
  }
}

TEST(RunVerify, ReportSchema) {
  const auto res = run_verify(quick({2}));
  const auto j = report_json(res);
  for (const char* key : {"params", "per_n", "atlas", "summary", "timing"}) EXPECT_TRUE(j.contains(key)) << key;
  const auto& e = j.at("per_n").at(0);
  for (const char* key : {"n", "verdict", "family", "family_digest", "certificates", "trace"})
    EXPECT_TRUE(e.contains(key)) << key;
  const auto& t = e.at("trace");
  for (const char* key : {"condition_I", "condition_II", "condition_III", "condition_IV", "sample_plan"})
    EXPECT_TRUE(t.contains(key)) << key;
  EXPECT_EQ(t.at("condition_IV").at("escape_index"), 1);
  EXPECT_FALSE(report_json(res, false).contains("timing"));
  EXPECT_EQ(j.at("summary").at("exit_code"), 0);
}

TEST(RunVerify, TextReportNamesLemmas) {
  const auto text = report_text(run_verify(quick({2})));
  for (const char* s : {"Lemma roots", "Corollary bounds", "Lemma div", "certified"})
    EXPECT_NE(text.find(s), std::string::npos) << s;
}

TEST(RunVerify, LargeEpsilonRefutesMathematically) {
  auto cfg = quick({2});
  const auto N = make_constants(2).N;
  cfg.eps_override = choose_epsilon(2, cfg.r) * pow(Rational(10), static_cast<unsigned long>(N));
  cfg.unsafe_eps = true;
  const auto res = run_verify(cfg);
  EXPECT_EQ(res.exit_code(), kExitRefuted);
  bool math_refuted = false;
  for (const auto& c : res.per_n.at(0).certificates)
    if (c.kind != "parameters" && c.verdict == Verdict::refuted) math_refuted = true;
  EXPECT_TRUE(math_refuted);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("verify --n 1").status, 64);
  EXPECT_EQ(run_cli("verify --n 2 --r 9/10").status, 64);
  EXPECT_EQ(run_cli("verify --n 2 --r 0.2").status, 64);
  EXPECT_EQ(run_cli("verify --n 2 --format xml").status, 64);
  EXPECT_EQ(run_cli("").status, 64);
  EXPECT_EQ(run_cli("verify --n 2 --eps 1/2").status, 1);
  EXPECT_EQ(run_cli("verify --n 2 --eps 1/2 --unsafe-eps --samples 50 --atlas-samples 50").status, 1);
  EXPECT_EQ(run_cli("verify --n 2 --budget 1 --samples 50 --atlas-samples 50").status, 2);
  EXPECT_EQ(run_cli("verify --n 2 --samples 50 --atlas-samples 50", "NORICERT_BUDGET=1").status, 2);
  EXPECT_EQ(run_cli("verify --n 2..3 --r 1/5 --rho 1/2 --seed 7 --format json --samples 300 --atlas-samples 300").status, 0);
}

TEST(Cli, JsonIsDeterministicApartFromTiming) {
  const std::string args = "verify --n 2..3 --seed 7 --samples 200 --atlas-samples 300 --format json";
  auto a = run_cli(args), b = run_cli(args);
  ASSERT_EQ(a.status, 0);
  ASSERT_EQ(b.status, 0);
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  EXPECT_TRUE(ja.contains("timing"));
  ja.erase("timing");
  jb.erase("timing");
  EXPECT_EQ(ja.dump(), jb.dump());
  auto c = nlohmann::json::parse(run_cli("verify --n 2..3 --seed 8 --samples 200 --atlas-samples 300").out);
  c.erase("timing");
  EXPECT_NE(c.dump(), ja.dump());
}

TEST(Cli, TextFormatShowsHistogram) {
  const auto r = run_cli("verify --n 2 --samples 100 --atlas-samples 100 --format text");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("exit 0"), std::string::npos);
  EXPECT_NE(r.out.find("chart indices of sampled images"), std::string::npos);
  EXPECT_NE(r.out.find("k=0 #"), std::string::npos);
}

}  // namespace
}  // namespace noricert
