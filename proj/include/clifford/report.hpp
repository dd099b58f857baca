#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace clifford {

struct ReportCell {
  std::string key;
  bool pass = false;
  std::string detail;
  double millis = 0.0;
};

// Outcome of a verification sweep. Serializes to
// { "suite": str, "cells": [{"key", "pass", "detail", "ms"}], "violations": int }.
struct Report {
  std::string suite;
  std::vector<ReportCell> cells;

  std::size_t violations() const;
  bool passed() const { return violations() == 0; }
};

nlohmann::json to_json(const Report& report);

}  // namespace clifford
