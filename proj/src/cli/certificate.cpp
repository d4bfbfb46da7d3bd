#include "hybrid/cli/certificate.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "json.hpp"

namespace hybrid::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skip: return "SKIP";
  }
  return "?";
}

double rounded(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Check& Check::interval(const std::string& key, const RealInterval& x) {
  number(key, x.midpoint());
  return value(key + "_interval", x.to_string(15));
}

Check& Certificate::add(std::string name, std::string anchor) {
  Check c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  checks.push_back(std::move(c));
  return checks.back();
}

bool Certificate::pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

std::string Certificate::to_json() const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = command;
  ordered_json in = ordered_json::object();
  for (const auto& [k, v] : inputs) in[k] = v;
  doc["inputs"] = in;
  ordered_json list = ordered_json::array();
  for (const Check& c : checks) {
    ordered_json j;
    j["name"] = c.name;
    j["status"] = to_string(c.status);
    j["anchor"] = c.anchor;
    ordered_json exact = ordered_json::object();
    for (const auto& [k, v] : c.exact) exact[k] = v;
    j["exact_values"] = exact;
    ordered_json numeric = ordered_json::object();
    for (const auto& [k, v] : c.numeric) numeric[k] = rounded(v);
    j["numeric_values"] = numeric;
    if (!c.detail.empty()) j["detail"] = c.detail;
    list.push_back(std::move(j));
  }
  doc["checks"] = list;
  doc["verdict"] = pass() ? "PASS" : "FAIL";
  return doc.dump(2) + "\n";
}

std::string Certificate::to_table() const {
  std::size_t width = 0;
  for (const Check& c : checks) width = std::max(width, c.name.size());
  std::string out = command + "\n";
  for (const Check& c : checks) {
    out += "  " + std::string(to_string(c.status)) + "  " + c.name;
    if (!c.detail.empty()) out += std::string(width - c.name.size() + 2, ' ') + c.detail;
    out += "\n";
    for (const auto& [k, v] : c.exact) out += "          " + k + " = " + v + "\n";
    for (const auto& [k, v] : c.numeric) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g", v);
      out += "          " + k + " ~ " + buf + "\n";
    }
  }
  out += std::string("verdict: ") + (pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace hybrid::cli
