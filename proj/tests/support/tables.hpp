#pragma once

// Compact fixture builders shared by the test suites.

#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "granred/table.hpp"

namespace granred::testing {

/// Builds a DecisionTable from code rows plus a label string: one char per
/// row, 'p' positive, 'n' negative, '?' unlabeled.
inline DecisionTable make_table(std::vector<std::vector<std::int32_t>> rows,
                                const std::string& labels) {
  const std::size_t n_attrs = rows.empty() ? 0 : rows.front().size();
  std::vector<std::int32_t> codes;
  codes.reserve(rows.size() * n_attrs);
  for (const auto& r : rows) codes.insert(codes.end(), r.begin(), r.end());
  std::vector<std::int8_t> decisions;
  decisions.reserve(labels.size());
  for (char c : labels) {
    decisions.push_back(c == 'p' ? std::int8_t{1} : c == 'n' ? std::int8_t{0}
                                                             : std::int8_t{-1});
  }
  std::vector<std::string> names(n_attrs);
  for (std::size_t a = 0; a < n_attrs; ++a) names[a] = "a" + std::to_string(a + 1);
  return DecisionTable::from_parts(std::move(names), std::move(codes),
                                   std::move(decisions));
}

/// The 4-row example used across the measure tests: a1 splits rows in
/// halves, a2 alternates, decision (p,p,p,n). GH(D|{a1}) = 0.25 and adding
/// a2 settles everything.
inline DecisionTable four_row_table() {
  return make_table({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, "pppn");
}

inline RawTable raw_from_csv(const std::string& text,
                             const std::string& missing = "?") {
  std::istringstream in(text);
  return load_csv(in, missing);
}

}  // namespace granred::testing
