#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qito {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;
};

// Result of a verification: a flat, name-sorted list of checks.
struct Report {
  std::string suite;
  bool q_symbolic = true;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
  }

  Check& add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back(Check{std::move(name), ok, std::move(detail), std::nullopt, std::nullopt});
    return checks.back();
  }
  Check& add(std::string name, bool ok, std::string detail, std::string lhs, std::string rhs) {
    checks.push_back(Check{std::move(name), ok, std::move(detail), std::move(lhs), std::move(rhs)});
    return checks.back();
  }

  /// Appends another report's checks under `prefix/`.
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) {
      Check copy = c;
      if (!prefix.empty()) copy.name = prefix + "/" + copy.name;
      checks.push_back(std::move(copy));
    }
  }

  void sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  }

  nlohmann::json to_json() const {
    Report sorted = *this;
    sorted.sort();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : sorted.checks) {
      nlohmann::json j{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
      if (c.lhs) j["lhs"] = *c.lhs;
      if (c.rhs) j["rhs"] = *c.rhs;
      arr.push_back(std::move(j));
    }
    return {{"status", passed() ? "pass" : "fail"}, {"suite", suite}, {"q_symbolic", q_symbolic}, {"checks", arr}};
  }
};

}  // namespace qito
