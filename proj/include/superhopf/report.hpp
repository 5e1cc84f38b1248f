#pragma once

// Check results, suite reports, and the bounded worker pool suites use.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#ifndef SUPERHOPF_VERSION
#define SUPERHOPF_VERSION "0.0.0"
#endif

namespace superhopf {

inline constexpr const char* engine_version = SUPERHOPF_VERSION;

/// Outcome of one property check. A check marked expected_failure is a
/// negative control: it is satisfied when the property does NOT hold.
struct check_result {
  std::string name;
  bool holds = true;
  bool expected_failure = false;
  nlohmann::json witness; // null when there is nothing to show
  std::string detail;

  bool ok() const { return holds != expected_failure; }

  static check_result pass(std::string name, std::string detail = {}) {
    return {std::move(name), true, false, nullptr, std::move(detail)};
  }
  static check_result fail(std::string name, nlohmann::json witness, std::string detail = {}) {
    return {std::move(name), false, false, std::move(witness), std::move(detail)};
  }
  static check_result of(std::string name, bool holds, nlohmann::json witness = nullptr, std::string detail = {}) {
    return {std::move(name), holds, false, holds ? nlohmann::json() : std::move(witness), std::move(detail)};
  }
  check_result& negative_control() {
    expected_failure = true;
    return *this;
  }
};

inline nlohmann::json to_json(const check_result& c) {
  nlohmann::json j{{"name", c.name}, {"status", c.holds ? "pass" : "fail"}, {"expected_failure", c.expected_failure},
                   {"ok", c.ok()}};
  if (!c.witness.is_null()) j["witness"] = c.witness;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

class report {
public:
  report(std::string suite, nlohmann::json config) : suite_(std::move(suite)), config_(std::move(config)) {}

  const std::string& suite() const { return suite_; }
  const nlohmann::json& config() const { return config_; }
  const std::vector<check_result>& checks() const { return checks_; }

  void add(check_result c) { checks_.push_back(std::move(c)); }
  void add(std::vector<check_result> cs) {
    for (auto& c : cs) checks_.push_back(std::move(c));
  }
  void set_data(const std::string& key, nlohmann::json value) { data_[key] = std::move(value); }
  void set_timing(const std::string& key, double seconds) { timings_[key] = seconds; }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const check_result& c) { return c.ok(); });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](auto& c) { return !c.ok(); }));
  }

  /// Everything except `timings` is a function of the config alone.
  nlohmann::json to_json(bool with_timings = true) const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : checks_) checks.push_back(superhopf::to_json(c));
    nlohmann::json j{{"suite", suite_},   {"engine_version", engine_version}, {"config", config_},
                     {"checks", checks}, {"passed", passed()}};
    if (!data_.empty()) j["data"] = data_;
    if (with_timings) j["timings"] = timings_;
    return j;
  }

  std::string text() const {
    std::ostringstream os;
    os << suite_ << ": " << (passed() ? "PASS" : "FAIL") << " (" << checks_.size() - failures() << "/"
       << checks_.size() << " checks ok)\n";
    for (const auto& c : checks_) {
      os << "  [" << (c.ok() ? " ok " : "FAIL") << "] " << c.name;
      if (c.expected_failure) os << " (negative control: " << (c.holds ? "unexpectedly holds" : "fails as expected") << ")";
      if (!c.detail.empty()) os << " - " << c.detail;
      os << '\n';
      if (!c.ok() && !c.witness.is_null()) os << "         witness: " << c.witness.dump() << '\n';
    }
    return os.str();
  }

private:
  std::string suite_;
  nlohmann::json config_;
  std::vector<check_result> checks_;
  nlohmann::json data_ = nlohmann::json::object();
  std::map<std::string, double> timings_;
};

/// Worker count: SUPERHOPF_WORKERS if set to a positive integer, else the
/// hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("SUPERHOPF_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(i) for i in [0, count) on a bounded pool and returns the results in
/// index order, so output never depends on scheduling. The first exception
/// thrown by any case is rethrown after all workers stop.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn, unsigned workers = worker_count()) {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out(count);
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

/// splitmix64: per-case seeds derived from a suite seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed ^ (index + 0x9E3779B97F4A7C15ULL * (index + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class stopwatch {
public:
  stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

} // namespace superhopf
