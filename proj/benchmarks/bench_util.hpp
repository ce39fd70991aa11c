#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "granred/rng.hpp"
#include "granred/table.hpp"

namespace granred_bench {

/// Random dense categorical table with a binary decision. Codes are drawn
/// uniformly; column cardinalities stay small so partitions have realistic
/// block structure.
inline granred::DecisionTable random_table(std::size_t rows, std::size_t attrs,
                                           std::int32_t cardinality,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int32_t> codes(rows * attrs);
  std::vector<std::int8_t> decisions(rows);
  for (std::size_t c = 0; c < attrs; ++c) {
    // Pin the full code range so every column is dense.
    for (std::size_t r = 0; r < rows; ++r) {
      codes[r * attrs + c] =
          r < static_cast<std::size_t>(cardinality)
              ? static_cast<std::int32_t>(r)
              : static_cast<std::int32_t>(
                    granred::bounded_uniform(rng, static_cast<std::uint64_t>(cardinality)));
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    decisions[r] = static_cast<std::int8_t>(granred::bounded_uniform(rng, 2));
  }
  std::vector<std::string> names(attrs);
  for (std::size_t c = 0; c < attrs; ++c) names[c] = "a" + std::to_string(c);
  return granred::DecisionTable::from_parts(std::move(names), std::move(codes),
                                            std::move(decisions));
}

}  // namespace granred_bench
