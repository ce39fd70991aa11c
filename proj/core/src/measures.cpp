#include "granred/measures.hpp"

#include <cmath>
#include <unordered_map>
#include <vector>

#include "granred/errors.hpp"

namespace granred {
namespace {

/// sum_j (n_j/n) log2 (n_j/n) over class counts inside one block of size n.
/// Returned non-negated.
double block_plogp(const std::vector<std::int64_t>& counts, std::int64_t n) {
  double acc = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(n);
    acc += p * std::log2(p);
  }
  return acc;
}

template <typename ClassOf>
Bits weighted_conditional(const Partition& cond, ClassOf&& class_of,
                          bool square_weight) {
  const double universe = static_cast<double>(cond.universe_size());
  if (universe == 0.0) throw StateError("entropy over an empty universe");
  std::unordered_map<std::int32_t, std::int64_t> counts;
  Bits total = 0.0;
  for (std::size_t b = 0; b < cond.block_count(); ++b) {
    const auto block = cond.block(b);
    counts.clear();
    for (auto row : block) ++counts[class_of(row)];
    if (counts.size() < 2) continue;  // pure block: inner sum is exactly 0
    const auto n = static_cast<std::int64_t>(block.size());
    double inner = 0.0;
    for (const auto& [cls, cnt] : counts) {
      const double p = static_cast<double>(cnt) / static_cast<double>(n);
      inner += p * std::log2(p);
    }
    double weight = static_cast<double>(n) / universe;
    if (square_weight) weight *= weight;
    total -= weight * inner;
  }
  return total;
}

std::int32_t decision_class(const DecisionTable& table, std::int32_t row) {
  const auto d = table.decisions[static_cast<std::size_t>(row)];
  if (d < 0) {
    throw StateError("entropy computation over unlabeled row " +
                     std::to_string(row));
  }
  return d;
}

}  // namespace

Bits entropy(const Partition& p) {
  const double universe = static_cast<double>(p.universe_size());
  if (universe == 0.0) throw StateError("entropy over an empty universe");
  Bits total = 0.0;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    const double prob = static_cast<double>(p.block(b).size()) / universe;
    if (prob > 0.0) total -= prob * std::log2(prob);
  }
  return total;
}

Bits conditional_entropy(const Partition& cond, const DecisionTable& table) {
  return weighted_conditional(
      cond, [&](std::int32_t row) { return decision_class(table, row); },
      /*square_weight=*/false);
}

double granularity(const Partition& p) {
  const double universe = static_cast<double>(p.universe_size());
  if (universe == 0.0) throw StateError("granularity over an empty universe");
  double total = 0.0;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    const double prob = static_cast<double>(p.block(b).size()) / universe;
    total += prob * prob;
  }
  return total;
}

Bits granular_conditional_entropy(const Partition& cond,
                                  const DecisionTable& table) {
  return weighted_conditional(
      cond, [&](std::int32_t row) { return decision_class(table, row); },
      /*square_weight=*/true);
}

Bits granular_conditional_entropy(const Partition& cond,
                                  std::span<const std::int32_t> classes) {
  return weighted_conditional(
      cond,
      [&](std::int32_t row) {
        const auto c = classes[static_cast<std::size_t>(row)];
        if (c < 0) {
          throw StateError("negative class value at row " + std::to_string(row));
        }
        return c;
      },
      /*square_weight=*/true);
}

Bits significance(const Partition& cond, const DecisionTable& table,
                  std::int32_t attr) {
  const Bits before = granular_conditional_entropy(cond, table);
  const Bits after =
      granular_conditional_entropy(refine(cond, table, attr), table);
  return before - after;
}

Bits gh_attribute_given_reduct(const Partition& cond,
                               const DecisionTable& table, std::int32_t attr) {
  if (attr < 0 || static_cast<std::size_t>(attr) >= table.n_attrs()) {
    throw ParameterError("attribute index " + std::to_string(attr) +
                         " out of range");
  }
  return weighted_conditional(
      cond,
      [&](std::int32_t row) {
        return table.code(static_cast<std::size_t>(row),
                          static_cast<std::size_t>(attr));
      },
      /*square_weight=*/true);
}

}  // namespace granred
