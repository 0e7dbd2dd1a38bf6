#include <gtest/gtest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  json parsed() const { return json::parse(out); }
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CSFORGE_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("csforge_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const json& j) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << j.dump();
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const double kLog3 = 2.0 / std::numbers::pi * std::log(3.0);

json scaled_params() {
  return {{"m", 3}, {"H", 4}, {"pi", {2, 1, 3}}, {"e", {kLog3, 0.0, 0.0}}};
}

std::vector<double> reals(const json& seq) { return seq.at("re").get<std::vector<double>>(); }

}  // namespace

TEST_F(Cli, EncodeFromParamsFile) {
  const auto r = run("encode --params " + write("p.json", scaled_params()));
  ASSERT_EQ(r.code, 0);
  const auto rec = r.parsed().at(0);
  EXPECT_EQ(rec.at("schema"), 1);
  EXPECT_EQ(rec.at("id"), "seq-0");
  EXPECT_EQ(rec.at("length"), 8);
  const std::vector<double> expected{1, 1, 3, 3, 3, -3, -1, 1};
  const auto re = reals(rec.at("values"));
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(re[i], expected[i], 1e-12);
  EXPECT_LT(rec.at("gcp_residual").get<double>(), 1e-12);
  EXPECT_FALSE(rec.at("overlap").get<bool>());
  EXPECT_EQ(rec.at("params").at("pi"), json({2, 1, 3}));
}

TEST_F(Cli, EncodeFromFlags) {
  const auto r = run("encode --m 1 --H 2 --seed-trivial");
  ASSERT_EQ(r.code, 0);
  const auto rec = r.parsed().at(0);
  EXPECT_EQ(reals(rec.at("values")), (std::vector<double>{1, 1}));
  EXPECT_EQ(reals(rec.at("mate")), (std::vector<double>{1, -1}));
  EXPECT_EQ(rec.at("support"), json({0, 1}));
}

TEST_F(Cli, EncodeRoundTripsThroughRecords) {
  const auto first = run("encode --m 3 --H 8 --k 1,2,3 --pi 3,1,2 --e 0.2,0,0.1");
  ASSERT_EQ(first.code, 0);
  const auto again = run("encode --params " + write("rec.json", first.parsed()));
  ASSERT_EQ(again.code, 0);
  EXPECT_EQ(first.parsed().at(0).at("values"), again.parsed().at(0).at("values"));
}

TEST_F(Cli, RuleOutputIsQam) {
  const auto enc = run("encode --rule cyan --s 4 --indices 2,1,4,2 --m 3 --base-k 1,0,3 --z 2");
  ASSERT_EQ(enc.code, 0);
  const auto v = run("verify " + write("cyan.json", enc.parsed()));
  ASSERT_EQ(v.code, 0);
  const auto rep = v.parsed().at(0);
  EXPECT_TRUE(rep.at("gcp_ok").get<bool>());
  EXPECT_EQ(rep.at("alphabet"), "64-qam");
  EXPECT_TRUE(rep.at("residual_matches_record").get<bool>());
  EXPECT_LE(rep.at("papr_db").get<double>(), rep.at("papr_bound_db").get<double>() + 1e-9);
}

TEST_F(Cli, VerifyDetectsBrokenPair) {
  auto recs = run("encode --m 2 --H 4 --k 1,3").parsed();
  ASSERT_EQ(run("verify " + write("ok.json", recs)).parsed().at(0).at("alphabet"), "qpsk");
  recs[0]["mate"]["re"][0] = 5.0;
  const auto bad = run("verify " + write("bad.json", recs));
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(bad.parsed().at(0).at("gcp_ok").get<bool>());
}

TEST_F(Cli, VerifyReportsGaps) {
  auto p = scaled_params();
  p["seed"] = {{"a", {{"re", {1, 0, 1}}, {"im", {0, 1, 0}}}}, {"b", {{"re", {1, 1, -1}}, {"im", {0, 0, 0}}}}};
  p["d"] = {0, 60, 0};
  const auto enc = run("encode --params " + write("gap.json", p));
  ASSERT_EQ(enc.code, 0);
  EXPECT_EQ(enc.parsed().at(0).at("length"), 84);
  const auto v = run("verify " + write("rec.json", enc.parsed()));
  ASSERT_EQ(v.code, 0);
  const auto rep = v.parsed().at(0);
  EXPECT_EQ(rep.at("clusters"), json({{0, 12}, {72, 84}}));
  EXPECT_EQ(rep.at("gaps"), json({60}));
  EXPECT_LE(rep.at("papr_db").get<double>(), 3.02);
}

TEST_F(Cli, InvalidInputs) {
  EXPECT_EQ(run("encode --m 3 --pi 1,1,2").code, 2);
  EXPECT_EQ(run("encode --m 2 --H 3").code, 2);
  EXPECT_EQ(run("encode --rule yellow --s 2 --indices 2,2 --m 2").code, 2);
  EXPECT_EQ(run("encode --params " + path("missing.json")).code, 2);
  EXPECT_EQ(run("verify " + write("junk.json", json{{"values", 3}})).code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  const json seed{{"a", {{"re", {1, 1}}, {"im", {0, 0}}}}, {"b", {{"re", {1, 1}}, {"im", {0, 0}}}}};
  EXPECT_EQ(run("encode --m 2 --seed-pair " + write("seed.json", seed)).code, 2);
}

TEST_F(Cli, EnumerateCounts) {
  auto r = run("enumerate --s 1 --m 3");
  ASSERT_EQ(r.code, 0);
  auto j = r.parsed();
  EXPECT_EQ(j.at("count"), 768);
  EXPECT_EQ(j.at("bits"), 9);
  EXPECT_EQ(j.at("length"), 8);
  EXPECT_EQ(j.at("unit_name"), "G0");

  r = run("enumerate --s 2 --m 2");
  j = r.parsed();
  EXPECT_EQ(j.at("count"), 2432);
  EXPECT_EQ(j.at("units"), 38);
  EXPECT_EQ(j.at("rules").at("green").at("units"), 4);

  j = run("enumerate --s 2 --m 2 --N 3").parsed();
  EXPECT_EQ(j.at("unit_name"), "A0");
  EXPECT_EQ(j.at("length"), 12);
}

TEST_F(Cli, EnumerateDedup) {
  const auto small = run("enumerate --rule green --s 1 --m 2 --dedup");
  ASSERT_EQ(small.code, 0);
  EXPECT_EQ(small.parsed().at("dedup").at("green").at("distinct"), 64);
  const auto r = run("enumerate --rule green --s 2 --m 2 --dedup");
  ASSERT_EQ(r.code, 0);
  const auto d = r.parsed().at("dedup").at("green");
  EXPECT_EQ(d.at("distinct"), 256);
  EXPECT_TRUE(d.at("match").get<bool>());
}

TEST_F(Cli, EnumerateGuard) {
  EXPECT_EQ(run("enumerate --rule blue --s 8 --m 6 --dedup").code, 3);
  EXPECT_EQ(run("enumerate --rule total --s 1024 --m 20").code, 3);
}

TEST_F(Cli, PaprCsv) {
  const auto csv = path("trace.csv");
  const auto r = run("papr --m 2 --H 2 --oversample 4 --out " + csv);
  ASSERT_EQ(r.code, 0);
  const auto rep = r.parsed().at(0);
  EXPECT_NEAR(rep.at("mean").get<double>(), 4.0, 1e-12);
  EXPECT_LE(rep.at("papr_db").get<double>(), 3.0103);
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t_norm,power");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 16);
  EXPECT_EQ(run("papr --m 2 --oversample 2").code, 2);
}

TEST_F(Cli, SimulateIsDeterministic) {
  const std::string args = "simulate --rule green --s 1 --m 2 --pi 1,2 --ebn0 inf,3 --trials 4000 --rng-seed 11";
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = a.parsed();
  EXPECT_EQ(j.at("codebook_size"), 64);
  EXPECT_EQ(j.at("points").at(0).at("ebn0_db"), "inf");
  EXPECT_EQ(j.at("points").at(0).at("bit_errors"), 0);
}

TEST_F(Cli, SimulateCodebookGuard) {
  EXPECT_EQ(run("simulate --rule blue --s 4 --m 3 --trials 10").code, 3);
  EXPECT_EQ(run("simulate --rule green --s 1 --m 5 --trials 10").code, 2);
}
