// Copyright 2026 The routegame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Outcome {
  int code;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(ROUTEGAME_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  Outcome r{-1, ""};
  if (p == nullptr) return r;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("routegame_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

const char* kFive = R"({"capacities":["2","4","9","12","20"],"r":"30","r_a":"20"})";

TEST_F(CliTest, ClassifyThresholdsVoi) {
  const std::string five = write("five.json", kFive);
  Outcome r = run("classify " + five);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["regime"], "no_ne");

  r = run("thresholds " + five + " --r 20");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["g"]["exact"], "7");

  const std::string two = write("two.json", R"({"capacities":["3","6"],"r":"5","r_a":{"lo":"4","hi":"7"}})");
  r = run("voi " + two);
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["value"]["exact"], "1/2");
  EXPECT_EQ(j["value"]["approx"], 0.5);
  EXPECT_EQ(j["route"][0]["exact"], "2");
  EXPECT_EQ(j["route"][1]["exact"], "3");
}

TEST_F(CliTest, AllSubcommandsRun) {
  const std::string five = write("five.json", kFive);
  const std::string three = write("three.json",
                                R"({"capacities":["2","3","5"],"r":"6","route":["0.5","2","3.5"],"r_a":{"lo":"0","hi":"10"}})");
  const std::string kp = write("kp.json", R"({"items":[{"w":"2","v":"3"},{"w":"3","v":"4"},{"w":"4","v":"5"}],"W":"5"})");
  EXPECT_EQ(Json::parse(run("block " + five + " --r 25 --route 1,1,5,10,8 --attack 2,4,4,4,6").out)["total"]["exact"], "4");
  EXPECT_EQ(Json::parse(run("best-response " + five + " --route 1,1,5,10,8 --r 25").out)["value"]["exact"], "14");
  EXPECT_EQ(Json::parse(run("se " + five).out)["value"]["exact"], "59/5");
  EXPECT_EQ(Json::parse(run("risk " + three).out)["risk"]["exact"], "3/2");
  EXPECT_EQ(run("risk " + three + " --csv").out.rfind("ra,b_star,b_se,diff\n", 0), 0u);
  EXPECT_EQ(Json::parse(run("kp " + kp).out)["agree"], true);
  EXPECT_EQ(Json::parse(run("kp --via-attack " + kp).out)["selection"], Json::array({0, 1}));
  EXPECT_EQ(Json::parse(run("kp --dp " + kp).out)["value"]["exact"], "7");
  EXPECT_EQ(run("kp --dp --via-attack " + kp).code, 2);

  const std::string svg = (dir_ / "curve.svg").string();
  Outcome r = run("curve " + three + " --samples 11 --svg " + svg);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("ra,value,b_star\n", 0), 0u);
  EXPECT_TRUE(fs::exists(svg));

  const std::string map = (dir_ / "map.svg").string();
  r = run("regions " + five + " --r-max 47 --ra-max 47 --step 1 --svg " + map);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 48 * 48 + 1);
  EXPECT_TRUE(fs::exists(map));
}

TEST_F(CliTest, ReadsStdin) {
  const Outcome p = run("classify - < " + write("five.json", kFive));
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(Json::parse(p.out)["regime"], "no_ne");
}

TEST_F(CliTest, ExitCodes) {
  const std::string five = write("five.json", kFive);
  EXPECT_EQ(run("classify " + write("bad.json", "{\"capacities\": [")).code, 2);
  EXPECT_EQ(run("classify " + (dir_ / "missing.json").string()).code, 2);
  EXPECT_EQ(run("classify " + five + " --ra 100").code, 3);
  EXPECT_EQ(run("best-response " + five + " --route 1,2").code, 3);  // shape
  EXPECT_EQ(run("se " + five + " --max-edges 3").code, 4);
  const Outcome r = run("se " + five + " --max-iter 3 --max-cut-rounds 0 --tol 1e-12");
  EXPECT_EQ(r.code, 5);
  EXPECT_EQ(Json::parse(r.out)["converged"], false);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(CliTest, Deterministic) {
  const std::string doc = write("four.json", R"({"capacities":["2","3","5","7"],"r":"9","r_a":{"lo":"2","hi":"12"}})");
  const std::string a = run("voi " + doc + " --seed 4").out;
  const std::string b = run("voi " + doc + " --seed 4 --threads 1").out;
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, b);
}

}  // namespace
