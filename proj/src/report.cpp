#include "clifford/report.hpp"

namespace clifford {

std::size_t Report::violations() const {
  std::size_t n = 0;
  for (const auto& c : cells) n += c.pass ? 0 : 1;
  return n;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"key", c.key}, {"pass", c.pass}, {"detail", c.detail}, {"ms", c.millis}});
  }
  return {{"suite", report.suite}, {"cells", cells}, {"violations", report.violations()}};
}

}  // namespace clifford
