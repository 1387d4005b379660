#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace unideal::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kCap = 3, kUndecided = 4 };

/// The result of one command: a headline (decision or value) and an ordered
/// provenance block. Text and JSON renderings carry the same fields.
struct Report {
  std::string algorithm;
  std::optional<std::string> decision;
  std::optional<std::string> value;
  std::optional<double> error_bound;
  std::optional<std::uint64_t> seed;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, double>> timings;

  void detail(const std::string& key, nlohmann::ordered_json v) { details[key] = std::move(v); }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string format_double(double x);

/// Timings are printed only when `timings` is set, keeping default output a
/// pure function of argv.
std::string render(const Report& r, bool json, bool timings);

}  // namespace unideal::cli
