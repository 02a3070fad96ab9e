#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fano {

struct GoldenRow {
  std::string claim;
  std::string expected;
  std::string computed;
  bool pass = false;
};

// Version of the embedded golden table.
inline constexpr int kGoldenTableVersion = 1;

// Recomputes every published value with dimension <= max_dim and compares.
// max_dim < 4 is InvalidInput.
std::vector<GoldenRow> run_golden_suite(std::size_t max_dim);

}  // namespace fano
