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

#include "routegame/routegame.h"

#include <string>
#include <thread>
#include <vector>

#include "gtest/gtest.h"

namespace {

struct Owned {
  rg_instance* inst = nullptr;
  rg_result* res = nullptr;
  ~Owned() {
    rg_result_destroy(res);
    rg_instance_destroy(inst);
  }
};

std::string exact(const rg_result* r, const char* key) {
  const char* s = rg_result_exact(r, key);
  return s ? s : "<none>";
}

TEST(CApiTest, ClassifyFromJson) {
  Owned o;
  ASSERT_EQ(rg_instance_parse(R"({"capacities":["2","4","9","12","20"],"r":"30","r_a":"20"})", &o.inst),
            RG_OK);
  EXPECT_EQ(rg_instance_edge_count(o.inst), 5u);
  ASSERT_EQ(rg_classify(o.inst, &o.res), RG_OK);
  EXPECT_NE(std::string(rg_result_json(o.res)).find("\"no_ne\""), std::string::npos);
  EXPECT_EQ(exact(o.res, "g"), "15/4");
  EXPECT_EQ(exact(o.res, "h"), "8");
  EXPECT_EQ(exact(o.res, "high_threshold"), "39");
  EXPECT_EQ(rg_result_exact(o.res, "regime"), nullptr);
  EXPECT_STREQ(rg_result_csv(o.res), "");
}

TEST(CApiTest, BuildInstanceProgrammatically) {
  Owned o;
  const char* caps[] = {"2", "4", "9", "12", "20"};
  ASSERT_EQ(rg_instance_create(caps, 5, &o.inst), RG_OK);
  const char* route[] = {"1", "1", "5", "10", "8"};
  const char* attack[] = {"2", "4", "4", "4", "6"};
  ASSERT_EQ(rg_instance_set_profile(o.inst, "route", route, 5), RG_OK);
  ASSERT_EQ(rg_instance_set_profile(o.inst, "attack", attack, 5), RG_OK);
  ASSERT_EQ(rg_block(o.inst, &o.res), RG_OK);
  EXPECT_EQ(exact(o.res, "total"), "4");
  rg_result_destroy(o.res);
  o.res = nullptr;

  ASSERT_EQ(rg_instance_set(o.inst, "r", "25"), RG_OK);
  ASSERT_EQ(rg_instance_set(o.inst, "r_a", "20"), RG_OK);
  ASSERT_EQ(rg_best_response(o.inst, nullptr, &o.res), RG_OK);
  EXPECT_EQ(exact(o.res, "value"), "14");
}

TEST(CApiTest, VoiAndRisk) {
  Owned o;
  ASSERT_EQ(rg_instance_parse(R"({"capacities":["3","6"],"r":"5","r_a":{"lo":"4","hi":"7"},"route":["2","3"]})",
                              &o.inst),
            RG_OK);
  ASSERT_EQ(rg_voi(o.inst, nullptr, &o.res), RG_OK);
  EXPECT_EQ(exact(o.res, "value"), "1/2");
  EXPECT_EQ(rg_result_converged(o.res), 1);
  rg_result_destroy(o.res);
  o.res = nullptr;
  ASSERT_EQ(rg_risk(o.inst, nullptr, &o.res), RG_OK);
  EXPECT_EQ(exact(o.res, "risk"), "1/2");
  EXPECT_EQ(std::string(rg_result_csv(o.res)).rfind("ra,b_star,b_se,diff\n", 0), 0u);
}

TEST(CApiTest, KnapsackBothPaths) {
  rg_knapsack* kp = nullptr;
  ASSERT_EQ(rg_knapsack_parse(R"({"items":[{"w":"2","v":"3"},{"w":"3","v":"4"},{"w":"4","v":"5"}],"W":"5"})", &kp),
            RG_OK);
  for (rg_kp_method m : {RG_KP_BOTH, RG_KP_VIA_ATTACK, RG_KP_DP}) {
    rg_result* r = nullptr;
    ASSERT_EQ(rg_knapsack_solve(kp, m, nullptr, &r), RG_OK);
    EXPECT_EQ(exact(r, "value"), "7");
    rg_result_destroy(r);
  }
  rg_knapsack_destroy(kp);
}

TEST(CApiTest, CurveAndRegionsCarryCsvAndSvg) {
  Owned o;
  ASSERT_EQ(rg_instance_parse(R"({"capacities":["3","6"],"r":"5","route":["2","3"]})", &o.inst), RG_OK);
  ASSERT_EQ(rg_curve(o.inst, nullptr, 10, nullptr, &o.res), RG_OK);
  EXPECT_EQ(std::string(rg_result_csv(o.res)).rfind("ra,value,b_star\n", 0), 0u);
  EXPECT_EQ(std::string(rg_result_svg(o.res)).rfind("<?xml", 0), 0u);
  rg_result_destroy(o.res);
  o.res = nullptr;
  ASSERT_EQ(rg_regions(o.inst, "9", "9", "1/2", &o.res), RG_OK);
  EXPECT_EQ(exact(o.res, "cells"), "<none>");
  EXPECT_EQ(std::string(rg_result_csv(o.res)).rfind("r,ra,regime\n", 0), 0u);
}

TEST(CApiTest, StatusCodes) {
  rg_instance* inst = nullptr;
  EXPECT_EQ(rg_instance_parse("{", &inst), RG_ERR_PARSE);
  EXPECT_EQ(inst, nullptr);
  EXPECT_NE(std::string(rg_last_error()).find("line 1"), std::string::npos);
  EXPECT_EQ(rg_instance_parse(nullptr, &inst), RG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(rg_instance_parse("{}", nullptr), RG_ERR_INVALID_ARGUMENT);

  Owned o;
  ASSERT_EQ(rg_instance_parse(R"({"capacities":["2","4","9","12","20"],"r":"30"})", &o.inst), RG_OK);
  EXPECT_EQ(rg_classify(o.inst, &o.res), RG_ERR_PARSE);  // r_a missing
  EXPECT_NE(std::string(rg_last_error()).find("r_a"), std::string::npos);
  EXPECT_EQ(rg_instance_set(o.inst, "r_a", "48"), RG_OK);
  EXPECT_EQ(rg_classify(o.inst, &o.res), RG_ERR_DOMAIN);
  EXPECT_EQ(rg_instance_set(o.inst, "r_a", "1/0"), RG_ERR_PARSE);
  EXPECT_EQ(rg_instance_set(o.inst, "bogus", "1"), RG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(rg_instance_set(o.inst, "r_a", "20"), RG_OK);

  rg_options opt;
  rg_options_init(&opt);
  opt.max_edges = 3;
  EXPECT_EQ(rg_stackelberg(o.inst, &opt, &o.res), RG_ERR_SIZE);
  opt.max_edges = 20;
  opt.tolerance = -1;
  EXPECT_EQ(rg_stackelberg(o.inst, &opt, &o.res), RG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(o.res, nullptr);

  const char* route[] = {"1", "2"};
  ASSERT_EQ(rg_instance_set_profile(o.inst, "route", route, 2), RG_OK);
  EXPECT_EQ(rg_best_response(o.inst, nullptr, &o.res), RG_ERR_SHAPE);
  EXPECT_STREQ(rg_status_name(RG_ERR_SHAPE), "shape error");
}

TEST(CApiTest, NotConvergedStillReturnsResult) {
  Owned o;
  ASSERT_EQ(rg_instance_parse(R"({"capacities":["2","4","9","12","20"],"r":"30","r_a":"20"})", &o.inst), RG_OK);
  rg_options opt;
  rg_options_init(&opt);
  opt.max_iterations = 3;
  opt.max_cut_rounds = 0;
  opt.tolerance = 1e-12;
  ASSERT_EQ(rg_stackelberg(o.inst, &opt, &o.res), RG_NOT_CONVERGED);
  ASSERT_NE(o.res, nullptr);
  EXPECT_EQ(rg_result_converged(o.res), 0);
  EXPECT_NE(exact(o.res, "value"), "<none>");
}

TEST(CApiTest, DeterministicAndThreadSafe) {
  const char* doc = R"({"capacities":["2","3","5","7"],"r":"9","r_a":"6"})";
  auto solve = [&](std::string* out) {
    rg_instance* inst = nullptr;
    rg_result* res = nullptr;
    if (rg_instance_parse(doc, &inst) == RG_OK && rg_stackelberg(inst, nullptr, &res) == RG_OK) {
      *out = rg_result_json(res);
    }
    rg_result_destroy(res);
    rg_instance_destroy(inst);
  };
  std::vector<std::string> outs(4);
  std::vector<std::thread> threads;
  for (auto& s : outs) threads.emplace_back(solve, &s);
  for (auto& t : threads) t.join();
  ASSERT_FALSE(outs[0].empty());
  for (const auto& s : outs) EXPECT_EQ(s, outs[0]);

  // Errors are per thread.
  rg_instance* bad = nullptr;
  EXPECT_EQ(rg_instance_parse("{", &bad), RG_ERR_PARSE);
  std::string other;
  std::thread([&] { other = rg_last_error(); }).join();
  EXPECT_EQ(other, "");
  EXPECT_NE(std::string(rg_last_error()), "");
}

}  // namespace
