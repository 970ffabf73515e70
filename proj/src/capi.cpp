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

#include <algorithm>
#include <map>
#include <new>
#include <string>

#include "json.hpp"
#include "routegame/error.hpp"
#include "routegame/io.hpp"

using namespace routegame;

struct rg_instance {
  InstanceDocument doc;
};

struct rg_knapsack {
  KnapsackInstance kp;
};

struct rg_result {
  std::string json, csv, svg;
  bool converged = true;
  std::map<std::string, std::string, std::less<>> exact;
};

namespace {

thread_local std::string last_error;

rg_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return RG_ERR_PARSE;
    case ErrorKind::kDomain: return RG_ERR_DOMAIN;
    case ErrorKind::kShape: return RG_ERR_SHAPE;
    case ErrorKind::kInvalidSubset: return RG_ERR_INVALID_ARGUMENT;
    case ErrorKind::kSize: return RG_ERR_SIZE;
    case ErrorKind::kInternal: return RG_ERR_INTERNAL;
  }
  return RG_ERR_INTERNAL;
}

rg_status set_error(rg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
rg_status guard(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(RG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(RG_ERR_INTERNAL, e.what());
  }
}

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::kInvalidSubset, what);
}

void require_out(const void* p, const char* name) {
  if (p == nullptr) invalid(std::string(name) + " is null");
}

StackelbergOptions solver_options(const rg_options* o) {
  StackelbergOptions s;
  if (o == nullptr) return s;
  if (!(o->tolerance > 0)) invalid("tolerance must be positive");
  if (o->max_iterations <= 0) invalid("max_iterations must be positive");
  if (o->max_cut_rounds < 0) invalid("max_cut_rounds must be non-negative");
  if (o->max_edges <= 0) invalid("max_edges must be positive");
  s.tolerance = o->tolerance;
  s.max_iterations = o->max_iterations;
  s.seed = o->seed;
  s.max_cut_rounds = o->max_cut_rounds;
  s.max_edges = static_cast<std::size_t>(o->max_edges);
  s.threads = o->threads;
  return s;
}

template <typename T>
const T& need(const std::optional<T>& field, const char* name) {
  if (!field) throw Error(ErrorKind::kParse, std::string("instance needs field '") + name + "' for this operation");
  return *field;
}

BudgetInterval need_interval(const InstanceDocument& doc) {
  if (doc.interval) return *doc.interval;
  if (doc.budget) return {*doc.budget, *doc.budget};
  throw Error(ErrorKind::kParse, "instance needs field 'r_a' (a number or {\"lo\", \"hi\"})");
}

void check_demand(const InstanceDocument& doc) {
  if (doc.demand) GameInstance{doc.network, *doc.demand, Rational()}.validate();
}

rg_status emit(rg_result** out, std::string json, bool converged = true, std::string csv = {},
               std::string svg = {}) {
  auto* r = new rg_result;
  r->json = std::move(json);
  r->csv = std::move(csv);
  r->svg = std::move(svg);
  r->converged = converged;
  const auto j = nlohmann::ordered_json::parse(r->json);
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && value.contains("exact")) r->exact[key] = value["exact"].get<std::string>();
  }
  *out = r;
  if (!converged) return set_error(RG_NOT_CONVERGED, "solver gap above tolerance; result is an estimate");
  return RG_OK;
}

Rational parse_arg(const char* text, const char* name) {
  if (text == nullptr) invalid(std::string(name) + " is null");
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::kParse, std::string(name) + ": " + e.what());
  }
}

std::vector<std::pair<double, double>> to_points(const PiecewiseLinearCurve& c) {
  std::vector<std::pair<double, double>> out;
  for (const auto& p : c.points()) out.emplace_back(p.x.to_double(), p.y.to_double());
  return out;
}

}  // namespace

extern "C" {

void rg_options_init(rg_options* options) {
  if (options == nullptr) return;
  const StackelbergOptions d;
  options->tolerance = d.tolerance;
  options->max_iterations = d.max_iterations;
  options->seed = d.seed;
  options->max_cut_rounds = d.max_cut_rounds;
  options->max_edges = static_cast<int>(d.max_edges);
  options->threads = d.threads;
  options->two_link_closed_form = 1;
}

const char* rg_version(void) { return "0.1.0"; }

const char* rg_status_name(rg_status status) {
  switch (status) {
    case RG_OK: return "ok";
    case RG_ERR_PARSE: return "parse error";
    case RG_ERR_DOMAIN: return "domain error";
    case RG_ERR_SIZE: return "size limit";
    case RG_NOT_CONVERGED: return "not converged";
    case RG_ERR_SHAPE: return "shape error";
    case RG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rg_last_error(void) { return last_error.c_str(); }

rg_status rg_instance_parse(const char* json, rg_instance** out) {
  return guard([&] {
    require_out(out, "out");
    if (json == nullptr) invalid("json is null");
    *out = new rg_instance{parse_instance(json)};
    return RG_OK;
  });
}

rg_status rg_instance_create(const char* const* capacities, size_t count, rg_instance** out) {
  return guard([&] {
    require_out(out, "out");
    if (capacities == nullptr || count == 0) invalid("capacities must be a non-empty array");
    std::vector<Rational> caps;
    for (size_t i = 0; i < count; ++i) caps.push_back(parse_arg(capacities[i], "capacity"));
    *out = new rg_instance{InstanceDocument(ParallelNetwork(std::move(caps)))};
    return RG_OK;
  });
}

rg_status rg_instance_set(rg_instance* instance, const char* key, const char* value) {
  return guard([&] {
    require_out(instance, "instance");
    require_out(key, "key");
    auto& d = instance->doc;
    const std::string k = key;
    std::optional<Rational> v;
    if (value != nullptr) v = parse_arg(value, key);
    if (k == "r") {
      d.demand = v;
    } else if (k == "r_a") {
      d.budget = v;
      d.interval.reset();
    } else if (k == "r_a_lo" || k == "r_a_hi") {
      if (!v) {
        d.interval.reset();
      } else {
        BudgetInterval iv = d.interval.value_or(BudgetInterval{*v, *v});
        (k == "r_a_lo" ? iv.lo : iv.hi) = *v;
        d.interval = iv;
        d.budget.reset();
      }
    } else {
      invalid("unknown key '" + k + "'");
    }
    return RG_OK;
  });
}

rg_status rg_instance_set_profile(rg_instance* instance, const char* key, const char* const* values,
                                  size_t count) {
  return guard([&] {
    require_out(instance, "instance");
    require_out(key, "key");
    const std::string k = key;
    if (k != "route" && k != "attack") invalid("unknown profile '" + k + "'");
    std::optional<FlowProfile> p;
    if (values != nullptr) {
      std::vector<Rational> xs;
      for (size_t i = 0; i < count; ++i) xs.push_back(parse_arg(values[i], key));
      p = FlowProfile(std::move(xs));
    }
    (k == "route" ? instance->doc.route : instance->doc.attack) = std::move(p);
    return RG_OK;
  });
}

size_t rg_instance_edge_count(const rg_instance* instance) {
  return instance ? instance->doc.network.size() : 0;
}

void rg_instance_destroy(rg_instance* instance) { delete instance; }

rg_status rg_knapsack_parse(const char* json, rg_knapsack** out) {
  return guard([&] {
    require_out(out, "out");
    if (json == nullptr) invalid("json is null");
    *out = new rg_knapsack{parse_knapsack(json)};
    return RG_OK;
  });
}

void rg_knapsack_destroy(rg_knapsack* knapsack) { delete knapsack; }

rg_status rg_block(const rg_instance* instance, rg_result** out) {
  return guard([&] {
    require_out(instance, "instance");
    require_out(out, "out");
    const auto& d = instance->doc;
    const auto& route = need(d.route, "route");
    const auto& attack = need(d.attack, "attack");
    if (d.demand) require_feasible(d.network, *d.demand, route, "route");
    if (d.budget) require_feasible(d.network, *d.budget, attack, "attack");
    return emit(out, block_json(blocked(d.network, route, attack)));
  });
}

rg_status rg_best_response(const rg_instance* instance, const rg_options* options, rg_result** out) {
  return guard([&] {
    require_out(instance, "instance");
    require_out(out, "out");
    const auto& d = instance->doc;
    const auto opt = solver_options(options);
    const auto& route = need(d.route, "route");
    const auto& budget = need(d.budget, "r_a");
    if (d.demand) require_feasible(d.network, *d.demand, route, "route");
    return emit(out, best_response_json(budget, best_response(d.network, route, budget, {opt.max_edges})));
  });
}

rg_status rg_thresholds(const rg_instance* instance, rg_result** out) {
  return guard([&] {
    require_out(instance, "instance");
    require_out(out, "out");
    const auto& d = instance->doc;
    const auto& r = need(d.demand, "r");
    check_demand(d);
    return emit(out, thresholds_json(d.network, r));
  });
}

rg_status rg_classify(const rg_instance* instance, rg_result** out) {
  return guard([&] {
    require_out(instance, "instance");
    require_out(out, "out");
    const auto& d = instance->doc;
    const GameInstance g{d.network, need(d.demand, "r"), need(d.budget, "r_a")};
    return emit(out, regime_json(classify_regime(g)));
  });
}

rg_status rg_regions(const rg_instance* instance, const char* r_max, const char* ra_max,
                     const char* step, rg_result** out) {
  return guard([&] {
    require_out(instance, "instance");
    require_out(out, "out");
    const auto& net = instance->doc.network;
    const Rational s = parse_arg(step, "step");
    const auto cells = region_map(net, parse_arg(r_max, "r_max"), parse_arg(ra_max, "ra_max"), s);
    nlohmann::ordered_json j;
    j["cells"] = cells.size();
    for (Regime r : {Regime::kZeroBlockNE, Regime::kFullBlockNE, Regime::kNoNE}) {
      j[std::string(to_string(r))] = std::count_if(cells.begin(), cells.end(),
                                                   [r](const RegionCell& c) { return c.regime == r; });
    }
    return emit(out, j.dump(2) + "\n", true, regions_csv(cells),
                svg_region_map(cells, s, "Equilibrium regimes"));
  });
}

rg_status rg_stackelberg(const rg_instance* instance, const rg_options* options, rg_result** out) {
  return guard([&] {
    require_out(instance, "instance");
    require_out(out, "out");
    const auto& d = instance->doc;
    const auto opt = solver_options(options);
    const GameInstance g{d.network, need(d.demand, "r"), need(d.budget, "r_a")};
    const auto res = solve_stackelberg(g, opt);
    return emit(out, stackelberg_json(g.budget, res), res.converged);
  });
}

rg_status rg_curve(const rg_instance* instance, const char* ra_max, int samples,
                   const rg_options* options, rg_result** out) {
  return guard([&] {
    require_out(instance, "instance");
    require_out(out, "out");
    const auto& d = instance->doc;
    const auto opt = solver_options(options);
    const Rational& r = need(d.demand, "r");
    check_demand(d);
    if (samples < 0) invalid("samples must be non-negative");
    const Rational top = ra_max ? parse_arg(ra_max, "ra_max") : d.network.total_capacity();
    if (d.route) require_feasible(d.network, r, *d.route, "route");
    const auto se = stackelberg_curve(d.network, r, top, samples, opt);
    std::optional<PiecewiseLinearCurve> bs;
    if (d.route) bs = b_star_curve(d.network, *d.route, top, {opt.max_edges});

    nlohmann::ordered_json j;
    j["r"] = {{"exact", r.str()}, {"approx", r.to_double()}};
    j["converged"] = se.converged;
    j["points"] = nlohmann::ordered_json::array();
    const auto xs = se.curve.points();
    for (std::size_t k = 0; k < se.points.size() && k < xs.size(); ++k) {
      j["points"].push_back(nlohmann::ordered_json::parse(stackelberg_json(xs[k].x, se.points[k])));
    }
    std::vector<SvgSeries> series{{"B_SE(r, r^a)", "#e07b00", to_points(se.curve)}};
    if (bs) series.push_back({"B*(f, r^a)", "#808080", to_points(*bs)});
    return emit(out, j.dump(2) + "\n", se.converged, curve_csv(se.curve, bs ? &*bs : nullptr),
                svg_line_plot(series, "Blocked traffic", "r^a", "blocked"));
  });
}

rg_status rg_risk(const rg_instance* instance, const rg_options* options, rg_result** out) {
  return guard([&] {
    require_out(instance, "instance");
    require_out(out, "out");
    const auto& d = instance->doc;
    const auto opt = solver_options(options);
    const auto res = risk(d.network, need(d.demand, "r"), need(d.route, "route"), need_interval(d), opt);
    return emit(out, risk_json(res), res.converged, risk_csv(res));
  });
}

rg_status rg_voi(const rg_instance* instance, const rg_options* options, rg_result** out) {
  return guard([&] {
    require_out(instance, "instance");
    require_out(out, "out");
    const auto& d = instance->doc;
    VoiOptions vo;
    vo.solver = solver_options(options);
    vo.two_link_closed_form = options == nullptr || options->two_link_closed_form != 0;
    const BudgetInterval iv = need_interval(d);
    const auto res = value_of_information(d.network, need(d.demand, "r"), iv, vo);
    return emit(out, voi_json(iv, res), res.converged);
  });
}

rg_status rg_knapsack_solve(const rg_knapsack* knapsack, rg_kp_method method,
                            const rg_options* options, rg_result** out) {
  return guard([&] {
    require_out(knapsack, "knapsack");
    require_out(out, "out");
    const auto opt = solver_options(options);
    switch (method) {
      case RG_KP_VIA_ATTACK:
        return emit(out, knapsack_json("via_attack", solve_kp_via_attack(knapsack->kp, opt.max_edges)));
      case RG_KP_DP:
        return emit(out, knapsack_json("dp", knapsack_dp(knapsack->kp)));
      case RG_KP_BOTH:
        return emit(out, knapsack_compare_json(solve_kp_via_attack(knapsack->kp, opt.max_edges),
                                               knapsack_dp(knapsack->kp)));
    }
    invalid("unknown knapsack method");
  });
}

const char* rg_result_json(const rg_result* result) { return result ? result->json.c_str() : ""; }
const char* rg_result_csv(const rg_result* result) { return result ? result->csv.c_str() : ""; }
const char* rg_result_svg(const rg_result* result) { return result ? result->svg.c_str() : ""; }
int rg_result_converged(const rg_result* result) { return result && result->converged ? 1 : 0; }

const char* rg_result_exact(const rg_result* result, const char* key) {
  if (result == nullptr || key == nullptr) return nullptr;
  const auto it = result->exact.find(std::string_view(key));
  return it == result->exact.end() ? nullptr : it->second.c_str();
}

void rg_result_destroy(rg_result* result) { delete result; }

}  // extern "C"
