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

#include "routegame/io.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"
#include "routegame/error.hpp"

namespace routegame {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::kParse, "field '" + path + "': " + what);
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::kParse, "malformed JSON at line " + std::to_string(line) + ", column " +
                                       std::to_string(column));
  }
}

Rational number(const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("exact")) return number(j.at("exact"), path);
  if (j.is_number_integer()) return Rational::parse(j.dump());
  if (j.is_number_float()) {
    fail(path, "write non-integer numbers as strings (\"19/3\" or \"6.333\") to keep them exact");
  }
  if (!j.is_string()) fail(path, "expected a number or a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

std::vector<Rational> numbers(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void reject_unknown(const Json& j, std::initializer_list<std::string_view> allowed,
                    const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(where.empty() ? key : where + "." + key, "unknown field");
    }
  }
}

Json num(const Rational& x) {
  Json j;
  j["exact"] = x.str();
  j["approx"] = x.to_double();
  return j;
}

Json nums(std::span<const Rational> xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(num(x));
  return j;
}

Json edges(const EdgeSet& set) {
  Json j = Json::array();
  for (int e : set) j.push_back(e);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

constexpr double kWidth = 640, kHeight = 440, kLeft = 64, kRight = 150, kTop = 40, kBottom = 56;

struct Frame {
  double x0, x1, y0, y1;
  double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); }
  double py(double y) const { return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom); }
};

void open_svg(std::ostringstream& os, const Frame& fr, std::string_view title,
              std::string_view x_label, std::string_view y_label) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"15\">" << escape(title) << "</text>\n";
  const double xa = fr.px(fr.x0), xb = fr.px(fr.x1), ya = fr.py(fr.y0), yb = fr.py(fr.y1);
  os << "<g stroke=\"black\" stroke-width=\"1\">"
     << "<line x1=\"" << fmt(xa) << "\" y1=\"" << fmt(ya) << "\" x2=\"" << fmt(xb) << "\" y2=\"" << fmt(ya) << "\"/>"
     << "<line x1=\"" << fmt(xa) << "\" y1=\"" << fmt(ya) << "\" x2=\"" << fmt(xa) << "\" y2=\"" << fmt(yb) << "\"/>"
     << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = fr.x0 + (fr.x1 - fr.x0) * i / 5, yv = fr.y0 + (fr.y1 - fr.y0) * i / 5;
    os << "<text x=\"" << fmt(fr.px(xv)) << "\" y=\"" << fmt(ya + 16) << "\" text-anchor=\"middle\">"
       << tick_label(xv) << "</text>"
       << "<text x=\"" << fmt(xa - 6) << "\" y=\"" << fmt(fr.py(yv) + 4) << "\" text-anchor=\"end\">"
       << tick_label(yv) << "</text>\n";
  }
  os << "<text x=\"" << fmt((xa + xb) / 2) << "\" y=\"" << fmt(kHeight - 14)
     << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n"
     << "<text x=\"16\" y=\"" << fmt((ya + yb) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << fmt((ya + yb) / 2) << ")\">" << escape(y_label) << "</text>\n</g>\n";
}

void legend(std::ostringstream& os, int row, std::string_view color, std::string_view label) {
  const double x = kWidth - kRight + 16, y = kTop + 10 + 20 * row;
  os << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y - 9) << "\" width=\"14\" height=\"10\" fill=\""
     << color << "\"/><text x=\"" << fmt(x + 20) << "\" y=\"" << fmt(y)
     << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(label) << "</text>\n";
}

}  // namespace

InstanceDocument parse_instance(std::string_view text) {
  const Json j = parse_text(text);
  if (!j.is_object()) throw Error(ErrorKind::kParse, "instance document must be a JSON object");
  reject_unknown(j, {"name", "comment", "capacities", "r", "r_a", "route", "attack"}, "");
  if (!j.contains("capacities")) fail("capacities", "missing");
  auto caps = numbers(j.at("capacities"), "capacities");
  if (caps.empty()) fail("capacities", "needs at least one edge");
  InstanceDocument doc{ParallelNetwork(std::move(caps))};
  if (j.contains("r")) doc.demand = number(j.at("r"), "r");
  if (j.contains("r_a")) {
    const Json& ra = j.at("r_a");
    if (ra.is_object() && !ra.contains("exact")) {
      reject_unknown(ra, {"lo", "hi"}, "r_a");
      if (!ra.contains("lo")) fail("r_a.lo", "missing");
      if (!ra.contains("hi")) fail("r_a.hi", "missing");
      doc.interval = BudgetInterval{number(ra.at("lo"), "r_a.lo"), number(ra.at("hi"), "r_a.hi")};
    } else {
      doc.budget = number(ra, "r_a");
    }
  }
  if (j.contains("route")) doc.route = FlowProfile(numbers(j.at("route"), "route"));
  if (j.contains("attack")) doc.attack = FlowProfile(numbers(j.at("attack"), "attack"));
  return doc;
}

KnapsackInstance parse_knapsack(std::string_view text) {
  const Json j = parse_text(text);
  if (!j.is_object()) throw Error(ErrorKind::kParse, "knapsack document must be a JSON object");
  reject_unknown(j, {"name", "comment", "items", "W"}, "");
  if (!j.contains("items")) fail("items", "missing");
  if (!j.contains("W")) fail("W", "missing");
  const Json& items = j.at("items");
  if (!items.is_array()) fail("items", "expected an array");
  KnapsackInstance kp;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string path = "items[" + std::to_string(i) + "]";
    const Json& it = items[i];
    if (!it.is_object()) fail(path, "expected {\"w\": ..., \"v\": ...}");
    reject_unknown(it, {"w", "v"}, path);
    if (!it.contains("w")) fail(path + ".w", "missing");
    if (!it.contains("v")) fail(path + ".v", "missing");
    kp.items.push_back({number(it.at("w"), path + ".w"), number(it.at("v"), path + ".v")});
  }
  kp.W = number(j.at("W"), "W");
  kp.validate();
  return kp;
}

Rational parse_number_json(std::string_view text) { return number(parse_text(text), "value"); }

std::string block_json(const BlockReport& report) {
  Json j;
  j["per_edge"] = nums(report.per_edge);
  j["total"] = num(report.total);
  return dump(j);
}

std::string best_response_json(const Rational& budget, const BestResponseResult& result) {
  Json j;
  j["budget"] = num(budget);
  j["value"] = num(result.value);
  j["attack"] = nums(result.attack.flows());
  Json s;
  s["saturated"] = edges(result.structure.saturated);
  if (result.structure.partial) {
    s["partial"] = {{"edge", result.structure.partial->edge},
                    {"amount", num(result.structure.partial->amount)}};
  } else {
    s["partial"] = nullptr;
  }
  s["dump"] = Json::array();
  for (const auto& [e, amount] : result.structure.dump) {
    s["dump"].push_back({{"edge", e}, {"amount", num(amount)}});
  }
  j["structure"] = s;
  return dump(j);
}

std::string thresholds_json(const ParallelNetwork& network, const Rational& demand) {
  const Threshold g = compute_g(network, demand), h = compute_h(network, demand);
  Json j;
  j["r"] = num(demand);
  j["total_capacity"] = num(network.total_capacity());
  j["g"] = num(g.value);
  j["g_argmax"] = edges(g.argmax);
  j["h"] = num(h.value);
  j["h_argmax"] = edges(h.argmax);
  j["high_threshold"] = num(network.total_capacity() - h.value);
  j["f_lo"] = nums(build_flo(network, demand).flows());
  j["f_hi"] = nums(build_fhi(network, demand).flows());
  return dump(j);
}

std::string regime_json(const RegimeReport& report) {
  Json j;
  j["regime"] = std::string(to_string(report.regime));
  j["zero_block"] = report.zero_block;
  j["full_block"] = report.full_block;
  j["g"] = num(report.g);
  j["h"] = num(report.h);
  j["high_threshold"] = num(report.high_threshold);
  if (report.regime != Regime::kNoNE) j["value"] = num(report.value);
  return dump(j);
}

std::string stackelberg_json(const Rational& budget, const StackelbergResult& result) {
  Json j;
  j["budget"] = num(budget);
  j["value"] = num(result.value);
  j["route"] = nums(result.route.flows());
  j["certificate"] = {{"upper", num(result.certificate.upper)},
                      {"lower", num(result.certificate.lower)},
                      {"gap", num(result.certificate.gap)}};
  j["converged"] = result.converged;
  j["method"] = std::string(to_string(result.method));
  j["iterations"] = result.iterations;
  j["cut_rounds"] = result.cut_rounds;
  return dump(j);
}

std::string risk_json(const RiskResult& result) {
  Json j;
  j["risk"] = num(result.risk);
  j["risk_upper"] = num(result.risk_upper);
  j["argmax_budget"] = num(result.argmax_budget);
  j["converged"] = result.converged;
  j["per_candidate"] = Json::array();
  for (const auto& p : result.per_candidate) {
    j["per_candidate"].push_back({{"ra", num(p.ra)},
                                  {"b_star", num(p.b_star)},
                                  {"b_se", num(p.b_se)},
                                  {"b_se_lower", num(p.b_se_lower)},
                                  {"diff", num(p.diff)}});
  }
  return dump(j);
}

std::string voi_json(const BudgetInterval& interval, const VoiResult& result) {
  Json j;
  j["interval"] = {{"lo", num(interval.lo)}, {"hi", num(interval.hi)}};
  j["value"] = num(result.value);
  j["route"] = nums(result.route.flows());
  j["lower"] = num(result.lower);
  j["upper"] = num(result.upper);
  j["gap"] = num(result.gap);
  j["converged"] = result.converged;
  j["method"] = std::string(to_string(result.method));
  if (result.method == VoiMethod::kClosedForm || result.method == VoiMethod::kCorrected) {
    j["formula_value"] = num(result.formula_value);
  }
  return dump(j);
}

std::string knapsack_json(std::string_view method, const KnapsackSolution& solution) {
  Json j;
  j["method"] = std::string(method);
  j["value"] = num(solution.value);
  j["selection"] = edges(solution.selection);
  return dump(j);
}

std::string knapsack_compare_json(const KnapsackSolution& via_attack, const KnapsackSolution& dp) {
  Json j;
  j["value"] = num(via_attack.value);
  j["via_attack"] = {{"value", num(via_attack.value)}, {"selection", edges(via_attack.selection)}};
  j["dp"] = {{"value", num(dp.value)}, {"selection", edges(dp.selection)}};
  j["agree"] = via_attack.value == dp.value;
  return dump(j);
}

std::string regions_csv(const std::vector<RegionCell>& cells) {
  std::string out = "r,ra,regime\n";
  for (const auto& c : cells) {
    out += c.r.str() + "," + c.ra.str() + "," + std::string(to_string(c.regime)) + "\n";
  }
  return out;
}

std::string curve_csv(const PiecewiseLinearCurve& b_se, const PiecewiseLinearCurve* b_star) {
  std::set<Rational> xs;
  for (const auto& p : b_se.points()) xs.insert(p.x);
  if (b_star) {
    for (const auto& p : b_star->points()) {
      if (p.x >= b_se.x_min() && p.x <= b_se.x_max()) xs.insert(p.x);
    }
  }
  std::string out = b_star ? "ra,value,b_star\n" : "ra,value\n";
  for (const auto& x : xs) {
    out += x.str() + "," + b_se.value_at(x).str();
    if (b_star) out += "," + b_star->value_at(x).str();
    out += "\n";
  }
  return out;
}

std::string risk_csv(const RiskResult& result) {
  std::string out = "ra,b_star,b_se,diff\n";
  for (const auto& p : result.per_candidate) {
    out += p.ra.str() + "," + p.b_star.str() + "," + p.b_se.str() + "," + p.diff.str() + "\n";
  }
  return out;
}

std::string svg_line_plot(const std::vector<SvgSeries>& series, std::string_view title,
                          std::string_view x_label, std::string_view y_label) {
  Frame fr{0, 1, 0, 1};
  bool first = true;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (first) {
        fr = {x, x, y, y};
        first = false;
      }
      fr.x0 = std::min(fr.x0, x), fr.x1 = std::max(fr.x1, x);
      fr.y0 = std::min(fr.y0, y), fr.y1 = std::max(fr.y1, y);
    }
  }
  fr.y0 = std::min(fr.y0, 0.0);
  if (fr.x1 <= fr.x0) fr.x1 = fr.x0 + 1;
  if (fr.y1 <= fr.y0) fr.y1 = fr.y0 + 1;

  std::ostringstream os;
  open_svg(os, fr, title, x_label, y_label);
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      os << (k ? " " : "") << fmt(fr.px(s.points[k].first)) << ',' << fmt(fr.py(s.points[k].second));
    }
    os << "\"/>\n";
    legend(os, static_cast<int>(i), s.color, s.label);
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_region_map(const std::vector<RegionCell>& cells, const Rational& step,
                           std::string_view title) {
  Frame fr{0, 1, 0, 1};
  for (const auto& c : cells) {
    fr.x1 = std::max(fr.x1, (c.r + step).to_double());
    fr.y1 = std::max(fr.y1, (c.ra + step).to_double());
  }
  auto color = [](Regime r) {
    switch (r) {
      case Regime::kZeroBlockNE: return "#4c9f70";
      case Regime::kFullBlockNE: return "#3b6ea8";
      case Regime::kNoNE: return "#d9822b";
    }
    return "#999999";
  };
  std::ostringstream os;
  open_svg(os, fr, title, "r", "r^a");
  const double s = step.to_double();
  for (const auto& c : cells) {
    const double x = c.r.to_double(), y = c.ra.to_double();
    os << "<rect x=\"" << fmt(fr.px(x)) << "\" y=\"" << fmt(fr.py(y + s)) << "\" width=\""
       << fmt(fr.px(x + s) - fr.px(x)) << "\" height=\"" << fmt(fr.py(y) - fr.py(y + s))
       << "\" fill=\"" << color(c.regime) << "\"/>\n";
  }
  legend(os, 0, color(Regime::kZeroBlockNE), "zero_block_ne");
  legend(os, 1, color(Regime::kFullBlockNE), "full_block_ne");
  legend(os, 2, color(Regime::kNoNE), "no_ne");
  os << "</svg>\n";
  return os.str();
}

}  // namespace routegame
