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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "routegame/routegame.h"

namespace {

struct InstanceDeleter {
  void operator()(rg_instance* p) const { rg_instance_destroy(p); }
};
struct KnapsackDeleter {
  void operator()(rg_knapsack* p) const { rg_knapsack_destroy(p); }
};
struct ResultDeleter {
  void operator()(rg_result* p) const { rg_result_destroy(p); }
};
using Instance = std::unique_ptr<rg_instance, InstanceDeleter>;
using Knapsack = std::unique_ptr<rg_knapsack, KnapsackDeleter>;
using Result = std::unique_ptr<rg_result, ResultDeleter>;

int exit_code(rg_status s) {
  switch (s) {
    case RG_OK: return 0;
    case RG_ERR_PARSE: return 2;
    case RG_ERR_DOMAIN: return 3;
    case RG_ERR_SIZE: return 4;
    case RG_NOT_CONVERGED: return 5;
    case RG_ERR_SHAPE: return 3;
    case RG_ERR_INVALID_ARGUMENT: return 2;
    case RG_ERR_INTERNAL: return 1;
  }
  return 1;
}

struct Failure {
  rg_status status;
};

void check(rg_status s) {
  if (s != RG_OK && s != RG_NOT_CONVERGED) throw Failure{s};
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Failure{RG_ERR_PARSE};
  }
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{RG_ERR_INVALID_ARGUMENT};
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
  return out;
}

struct Settings {
  double tol = 1e-6;
  int max_iter = 5000;
  std::uint64_t seed = 0;
  int max_cut_rounds = 400;
  int max_edges = 20;
  unsigned threads = 0;

  rg_options options() const {
    rg_options o;
    rg_options_init(&o);
    o.tolerance = tol;
    o.max_iterations = max_iter;
    o.seed = seed;
    o.max_cut_rounds = max_cut_rounds;
    o.max_edges = max_edges;
    o.threads = threads;
    return o;
  }
};

struct Overrides {
  std::optional<std::string> r, ra, ra_lo, ra_hi, route, attack;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--r", r, "Legitimate demand, overrides the file");
    cmd->add_option("--ra", ra, "Attack budget, overrides the file");
    cmd->add_option("--ra-lo", ra_lo, "Budget interval lower end");
    cmd->add_option("--ra-hi", ra_hi, "Budget interval upper end");
    cmd->add_option("--route", route, "Comma-separated route, overrides the file");
    cmd->add_option("--attack", attack, "Comma-separated attack, overrides the file");
  }

  void apply(rg_instance* inst) const {
    if (r) check(rg_instance_set(inst, "r", r->c_str()));
    if (ra) check(rg_instance_set(inst, "r_a", ra->c_str()));
    if (ra_lo) check(rg_instance_set(inst, "r_a_lo", ra_lo->c_str()));
    if (ra_hi) check(rg_instance_set(inst, "r_a_hi", ra_hi->c_str()));
    for (const auto& [key, text] : {std::pair{"route", route}, std::pair{"attack", attack}}) {
      if (!text) continue;
      const auto parts = split_list(*text);
      std::vector<const char*> ptrs;
      for (const auto& p : parts) ptrs.push_back(p.c_str());
      check(rg_instance_set_profile(inst, key, ptrs.data(), ptrs.size()));
    }
  }
};

Instance load(const std::string& path, const Overrides& ov) {
  const std::string text = read_input(path);
  rg_instance* raw = nullptr;
  check(rg_instance_parse(text.c_str(), &raw));
  Instance inst(raw);
  ov.apply(inst.get());
  return inst;
}

// Prints the chosen form and returns the status for the exit code.
template <typename Call>
rg_status run(Call&& call, bool csv, const std::string& svg_path) {
  rg_result* raw = nullptr;
  const rg_status s = call(&raw);
  check(s);
  Result res(raw);
  const char* body = csv ? rg_result_csv(res.get()) : rg_result_json(res.get());
  std::fputs(body, stdout);
  if (!svg_path.empty()) write_file(svg_path, rg_result_svg(res.get()));
  if (s == RG_NOT_CONVERGED) std::cerr << "warning: " << rg_last_error() << "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Routing games against a budgeted attacker on parallel networks"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings st;
  app.add_option("--tol", st.tol, "Solver gap tolerance")->capture_default_str();
  app.add_option("--max-iter", st.max_iter, "Subgradient iterations per start")->capture_default_str();
  app.add_option("--seed", st.seed, "Seed for randomized restarts")->capture_default_str();
  app.add_option("--max-cut-rounds", st.max_cut_rounds, "Exact refinement rounds")->capture_default_str();
  app.add_option("--max-edges", st.max_edges, "Cap on edges for exact enumeration")->capture_default_str();
  app.add_option("--threads", st.threads, "Worker threads (0: ROUTEGAME_THREADS or all cores)");
  app.set_version_flag("--version", std::string(rg_version()));

  std::string file, svg_path, r_max, ra_max, step = "1", kp_file;
  int samples = 21;
  bool as_csv = false, as_json = false, via_attack = false, dp = false;
  Overrides ov;

  auto instance_cmd = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("file", file, "Instance JSON document ('-' for stdin)")->required();
    ov.add_to(c);
    return c;
  };
  auto* block = instance_cmd("block", "Traffic blocked by a route and an attack");
  auto* br = instance_cmd("best-response", "Optimal attack against a route");
  auto* th = instance_cmd("thresholds", "Thresholds g, h and the policies f^lo, f^hi");
  auto* cl = instance_cmd("classify", "Equilibrium regime of (r, r^a)");
  auto* rg = instance_cmd("regions", "Regime map over a grid of (r, r^a)");
  rg->add_option("--r-max", r_max, "Largest demand")->required();
  rg->add_option("--ra-max", ra_max, "Largest attack budget")->required();
  rg->add_option("--step", step, "Grid step")->capture_default_str();
  rg->add_option("--svg", svg_path, "Write an SVG heat map");
  rg->add_flag("--json", as_json, "Print a JSON summary instead of CSV");
  auto* se = instance_cmd("se", "Stackelberg route and value");
  auto* cu = instance_cmd("curve", "B^SE (and B* for a given route) against r^a");
  cu->add_option("--ra-max", ra_max, "Largest attack budget (default C(E))");
  cu->add_option("--samples", samples, "Uniform samples besides the breakpoints")->capture_default_str();
  cu->add_option("--svg", svg_path, "Write an SVG plot");
  cu->add_flag("--json", as_json, "Print the per-point results as JSON instead of CSV");
  auto* ri = instance_cmd("risk", "Risk of a route over a budget interval");
  ri->add_flag("--csv", as_csv, "Print per-candidate rows as CSV");
  auto* vo = instance_cmd("voi", "Value of information over a budget interval");
  bool numerical = false;
  vo->add_flag("--numerical", numerical, "Use the general solver even for two links");
  auto* kp = app.add_subcommand("kp", "0-1 knapsack through the attack reduction or DP");
  kp->add_option("file", kp_file, "Knapsack JSON document ('-' for stdin)")->required();
  auto* kp_attack = kp->add_flag("--via-attack", via_attack, "Solve through the best-response reduction");
  kp->add_flag("--dp", dp, "Solve by dynamic programming")->excludes(kp_attack);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const rg_options opt = st.options();
    rg_status s = RG_OK;
    if (kp->parsed()) {
      const std::string text = read_input(kp_file);
      rg_knapsack* raw = nullptr;
      check(rg_knapsack_parse(text.c_str(), &raw));
      Knapsack k(raw);
      const rg_kp_method m = via_attack ? RG_KP_VIA_ATTACK : dp ? RG_KP_DP : RG_KP_BOTH;
      s = run([&](rg_result** o) { return rg_knapsack_solve(k.get(), m, &opt, o); }, false, "");
      return exit_code(s);
    }
    Instance inst = load(file, ov);
    rg_instance* in = inst.get();
    if (block->parsed()) {
      s = run([&](rg_result** o) { return rg_block(in, o); }, false, "");
    } else if (br->parsed()) {
      s = run([&](rg_result** o) { return rg_best_response(in, &opt, o); }, false, "");
    } else if (th->parsed()) {
      s = run([&](rg_result** o) { return rg_thresholds(in, o); }, false, "");
    } else if (cl->parsed()) {
      s = run([&](rg_result** o) { return rg_classify(in, o); }, false, "");
    } else if (rg->parsed()) {
      s = run([&](rg_result** o) {
        return rg_regions(in, r_max.c_str(), ra_max.c_str(), step.c_str(), o);
      }, !as_json, svg_path);
    } else if (se->parsed()) {
      s = run([&](rg_result** o) { return rg_stackelberg(in, &opt, o); }, false, "");
    } else if (cu->parsed()) {
      const char* top = ra_max.empty() ? nullptr : ra_max.c_str();
      s = run([&](rg_result** o) { return rg_curve(in, top, samples, &opt, o); }, !as_json, svg_path);
    } else if (ri->parsed()) {
      s = run([&](rg_result** o) { return rg_risk(in, &opt, o); }, as_csv, "");
    } else if (vo->parsed()) {
      rg_options v = opt;
      v.two_link_closed_form = numerical ? 0 : 1;
      s = run([&](rg_result** o) { return rg_voi(in, &v, o); }, false, "");
    }
    return exit_code(s);
  } catch (const Failure& f) {
    const char* msg = rg_last_error();
    if (msg && *msg) std::cerr << "error: " << msg << "\n";
    return exit_code(f.status);
  }
}
