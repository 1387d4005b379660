#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace unideal::cli {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

namespace {

std::string text_of(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_array()) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : " ") + text_of(x);
    return out;
  }
  return v.dump();
}

template <class T>
nlohmann::ordered_json or_null(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string render(const Report& r, bool json, bool timings) {
  if (json) {
    nlohmann::ordered_json j;
    j["decision"] = or_null(r.decision);
    j["value"] = or_null(r.value);
    j["error_bound"] = or_null(r.error_bound);
    j["seed"] = or_null(r.seed);
    j["algorithm"] = r.algorithm;
    if (timings) {
      nlohmann::ordered_json t = nlohmann::ordered_json::object();
      for (const auto& [k, v] : r.timings) t[k] = v;
      j["timings"] = t;
    } else {
      j["timings"] = nullptr;
    }
    j["details"] = r.details;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (r.decision) out << *r.decision << '\n';
  if (r.value) out << *r.value << '\n';
  out << "algorithm: " << r.algorithm << '\n';
  for (const auto& [k, v] : r.details.items()) out << k << ": " << text_of(v) << '\n';
  if (r.error_bound) out << "error_bound: " << format_double(*r.error_bound) << '\n';
  if (r.seed) out << "seed: " << *r.seed << '\n';
  if (timings)
    for (const auto& [k, v] : r.timings) out << "time_" << k << ": " << format_double(v) << " s\n";
  return out.str();
}

}  // namespace unideal::cli
