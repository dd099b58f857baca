#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "clifford/report.hpp"

namespace clifford {

// Largest p + q accepted by the verification sweeps.
inline constexpr int kMaxVerifyDimension = 8;

struct SuiteOptions {
  int max_n = 4;             // exhaustive sweeps cover p + q <= max_n
  int random_max_n = 8;      // randomized cells cover p + q <= random_max_n
  int random_trials = 1000;  // per randomized cell
  std::uint64_t seed = 20021;
  unsigned threads = 1;
  bool randomize_odd_sets = false;  // table4 only
};

// clifford, evenpart, table4, periodicity, dichotomy, closure, core, veeform,
// tilt, veeprime, sigchange.
const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown suite or max_n above
// kMaxVerifyDimension.
Report run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace clifford
