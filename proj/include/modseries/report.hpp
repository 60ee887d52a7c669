#pragma once

#include <string>
#include <vector>

namespace modseries {

struct Issue {
  std::string clause;   // short machine-stable tag, e.g. "strictness"
  std::string message;  // human-readable, carries the offending index
};

struct ValidationReport {
  std::vector<Issue> issues;
  std::vector<std::string> notes;

  bool ok() const noexcept { return issues.empty(); }
  void fail(std::string clause, std::string message) {
    issues.push_back({std::move(clause), std::move(message)});
  }
};

}  // namespace modseries
