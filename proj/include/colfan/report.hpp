#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace colfan {

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Ordered pass/fail record of named checks plus free-form notes.
struct ValidationReport {
  std::vector<AxiomResult> axioms;
  std::vector<std::string> notes;

  void add(std::string name, bool passed, std::string detail = {}) {
    axioms.push_back({std::move(name), passed, std::move(detail)});
  }

  bool passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.passed; });
  }

  const AxiomResult* find(std::string_view name) const {
    for (const auto& a : axioms)
      if (a.name == name) return &a;
    return nullptr;
  }

  /// First failing check, or nullptr.
  const AxiomResult* first_failure() const {
    for (const auto& a : axioms)
      if (!a.passed) return &a;
    return nullptr;
  }
};

}  // namespace colfan
