// Copyright 2026 The windres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace windres::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  std::filesystem::path dir;

  void SetUp() override {
    dir = std::filesystem::temp_directory_path() /
          ("windres_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                               ->random_seed()) +
           "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir);
  }
  void TearDown() override { std::filesystem::remove_all(dir); }

  std::string path(const std::string& name) const { return (dir / name).string(); }

  std::string write(const std::string& name, const std::string& body) const {
    std::ofstream(path(name)) << body;
    return path(name);
  }

  std::string generate(const std::string& name, const std::string& station,
                       double k, double c, int n, int seed) const {
    const Result r = run_args({"generate", "--k", std::to_string(k), "--c",
                               std::to_string(c), "--n", std::to_string(n),
                               "--seed", std::to_string(seed), "--station",
                               station, "--output", path(name)});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return path(name);
  }
};

TEST_F(CliTest, NoArgumentsIsUsage) {
  EXPECT_EQ(run_args({}).code, kExitUsage);
  EXPECT_EQ(run_args({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_args({"fit"}).code, kExitUsage);
  EXPECT_EQ(run_args({"report", "--format", "pdf"}).code, kExitUsage);
  EXPECT_EQ(run_args({"report", "--table", "nope"}).code, kExitUsage);
}

TEST_F(CliTest, HelpSucceeds) {
  const Result r = run_args({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("reproduce-paper"), std::string::npos);
}

TEST_F(CliTest, ReproduceCommandPasses) {
  const Result r = run_args({"reproduce-paper"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST_F(CliTest, ReproduceCommandFailsWithBadCurve) {
  const std::string curve = write(
      "curve.csv", "speed_mps,power_kw\n0,0\n3.5,0\n8,200\n13.5,1000\n25,1000\n");
  const Result r = run_args({"reproduce-paper", "--curve", curve});
  EXPECT_EQ(r.code, kExitVerification);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, FitSyntheticData) {
  const std::string input = generate("syn.csv", "syn", 2.0, 6.0, 200000, 5);
  const Result r = run_args({"fit", "--input", input});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header,
            "station_key,n_raw,n_used,n_dropped,k,c_mps,log_likelihood,"
            "distribution_mean_mps,arithmetic_mean_mps,mean_gap,validation,"
            "iterations");
  EXPECT_EQ(row.rfind("syn,200000,200000,0,", 0), 0u);
  EXPECT_NE(row.find(",pass,"), std::string::npos);
}

TEST_F(CliTest, FitValidationFailureIsExitFour) {
  // Two clusters: the Weibull mean misses the sample mean by far more than 2%.
  std::string body = "station_key,timestamp_iso8601,speed_mps,direction_deg\n";
  for (int i = 0; i < 500; ++i) body += "bimodal,2020-01-01,0.1,\n";
  for (int i = 0; i < 500; ++i) body += "bimodal,2020-01-01,10,\n";
  const Result r = run_args({"fit", "--input", write("b.csv", body)});
  EXPECT_EQ(r.code, kExitVerification) << r.out;
  EXPECT_NE(r.out.find(",fail,"), std::string::npos);
}

TEST_F(CliTest, DataErrors) {
  EXPECT_EQ(run_args({"fit", "--input", path("missing.csv")}).code, kExitData);
  const std::string bad = write("bad.csv", "station,time,speed,dir\n");
  const Result r = run_args({"fit", "--input", bad});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("station_key"), std::string::npos);
  const std::string flat = write(
      "flat.csv",
      "station_key,timestamp_iso8601,speed_mps,direction_deg\n"
      "f,2020-01-01,3,10\nf,2020-01-02,3,10\n");
  const Result degenerate = run_args({"fit", "--input", flat});
  EXPECT_EQ(degenerate.code, kExitData);
  EXPECT_NE(degenerate.err.find("'f'"), std::string::npos);
}

TEST_F(CliTest, StrictMode) {
  const std::string body =
      "station_key,timestamp_iso8601,speed_mps,direction_deg\n"
      "s,2020-01-01,3,10\ns,2020-01-02,x,10\ns,2020-01-03,4,20\n"
      "s,2020-01-04,5,30\n";
  const std::string input = write("s.csv", body);
  const Result lenient = run_args({"fit", "--input", input});
  EXPECT_EQ(lenient.code, kExitOk) << lenient.err;
  EXPECT_NE(lenient.out.find("s,4,3,1,"), std::string::npos) << lenient.out;
  EXPECT_EQ(run_args({"fit", "--input", input, "--strict"}).code, kExitData);
}

TEST_F(CliTest, ReportBuiltinTables) {
  const Result r = run_args({"report", "--table", "speeds", "--station", "thumrait"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "station,mode_mps,median_mps,mean_mps,max_energy_mps\n"
            "Thumrait,4.79515,5.38954,5.65327,8.63517\n");
  const Result all = run_args({"report", "--format", "text"});
  EXPECT_EQ(all.code, kExitOk);
  EXPECT_NE(all.out.find("Duqm"), std::string::npos);
  EXPECT_NE(all.out.find("rho_kg_per_m3"), std::string::npos);
}

TEST_F(CliTest, ReportFromObservationsUsesRegistryAltitude) {
  const std::string input = generate("saiq.csv", "saiq", 1.9, 3.6, 20000, 9);
  const Result r = run_args({"report", "--input", input, "--table", "corrected"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("Saiq,1.03"), std::string::npos) << r.out;

  const std::string registry =
      write("extra.toml", "[saiq]\nname = \"Saiq Low\"\naltitude_m = 0\n");
  const Result moved = run_args(
      {"report", "--input", input, "--table", "corrected", "--registry", registry});
  ASSERT_EQ(moved.code, kExitOk) << moved.err;
  EXPECT_NE(moved.out.find("Saiq Low,1.225,1,"), std::string::npos) << moved.out;
}

TEST_F(CliTest, ReportOptionsChangeMetrics) {
  const Result base = run_args({"report", "--table", "metrics", "--station", "sur"});
  const Result tau = run_args({"report", "--table", "metrics", "--station", "sur",
                               "--tau-hours", "17520", "--threshold", "5",
                               "--density", "1.0", "--evaluator", "polynomial"});
  ASSERT_EQ(tau.code, kExitOk) << tau.err;
  EXPECT_NE(base.out, tau.out);
  EXPECT_NE(tau.out.find("p_exceed_5mps_pct"), std::string::npos);
}

TEST_F(CliTest, RoseAndHistogramFormats) {
  const std::string input = generate("r.csv", "r", 2.0, 6.0, 5000, 2);
  const Result csv = run_args({"rose", "--input", input});
  ASSERT_EQ(csv.code, kExitOk) << csv.err;
  EXPECT_EQ(csv.out.rfind("angle_deg,frequency\n10,", 0), 0u);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 37);
  const Result text = run_args({"rose", "--input", input, "--format", "text"});
  EXPECT_NE(text.out.find("SSW"), std::string::npos);
  const Result svg = run_args({"rose", "--input", input, "--format", "svg"});
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);

  const Result hist = run_args({"histogram", "--input", input, "--bin-width", "1"});
  ASSERT_EQ(hist.code, kExitOk) << hist.err;
  EXPECT_EQ(hist.out.rfind("bin_start_mps,bin_end_mps,count,density_per_mps,"
                           "weibull_pdf_per_mps\n0,1,",
                           0),
            0u);
  EXPECT_EQ(run_args({"histogram", "--input", input, "--format", "svg"})
                .out.rfind("<svg", 0),
            0u);
}

TEST_F(CliTest, CurveCheck) {
  const Result r = run_args({"curve-check"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("mad_kw,3.37"), std::string::npos);
  EXPECT_NE(r.out.find("argmax_speed_mps,11"), std::string::npos);
  const std::string curve =
      write("c.csv", "speed_mps,power_kw\n0,0\n3,0\n10,500\n20,500\n");
  EXPECT_EQ(run_args({"curve-check", "--curve", curve}).code, kExitUsage);
}

TEST_F(CliTest, OutputFileMatchesStdout) {
  const Result direct = run_args({"reproduce-paper"});
  ASSERT_EQ(run_args({"reproduce-paper", "--output", path("v.csv")}).code, kExitOk);
  std::ifstream in(path("v.csv"));
  std::stringstream buffer;
  buffer << in.rdbuf();
  EXPECT_EQ(buffer.str(), direct.out);
}

TEST_F(CliTest, GenerateIsDeterministic) {
  const Result a = run_args({"generate", "--n", "100", "--seed", "3"});
  const Result b = run_args({"generate", "--n", "100", "--seed", "3"});
  const Result c = run_args({"generate", "--n", "100", "--seed", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(a.out.rfind("station_key,timestamp_iso8601,speed_mps,direction_deg\n"
                        "synthetic,2000-01-01T00:00:00Z,",
                        0),
            0u);
  EXPECT_EQ(run_args({"generate", "--start", "soon"}).code, kExitUsage);
}

TEST_F(CliTest, MultiStationFitAcrossThreads) {
  std::string body;
  for (const auto& [key, k, c] :
       {std::tuple{"a", 1.8, 4.0}, std::tuple{"b", 2.5, 7.0},
        std::tuple{"c", 3.1, 3.2}}) {
    const Result g = run_args({"generate", "--station", key, "--k", std::to_string(k),
                               "--c", std::to_string(c), "--n", "3000"});
    body += body.empty() ? g.out : g.out.substr(g.out.find('\n') + 1);
  }
  const std::string input = write("multi.csv", body);
  const Result one = run_args({"fit", "--input", input, "--threads", "1"});
  const Result eight = run_args({"fit", "--input", input, "--threads", "8"});
  ASSERT_EQ(one.code, kExitOk) << one.err;
  EXPECT_EQ(one.out, eight.out);
  EXPECT_EQ(std::count(one.out.begin(), one.out.end(), '\n'), 4);
  EXPECT_EQ(run_args({"rose", "--input", input}).code, kExitData);
  EXPECT_EQ(run_args({"rose", "--input", input, "--station", "b"}).code, kExitOk);
}

}  // namespace
}  // namespace windres::cli
