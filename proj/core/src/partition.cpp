#include "granred/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "granred/errors.hpp"

namespace granred {
namespace {

/// Sorts block order by smallest member and row order within blocks.
/// Grouping loops below emit rows in ascending order per block already, so
/// only the block order needs fixing.
Partition canonicalize(std::vector<std::vector<std::int32_t>> blocks,
                       std::int32_t universe_size) {
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<std::int32_t> rows;
  std::vector<std::int32_t> offsets;
  offsets.reserve(blocks.size() + 1);
  offsets.push_back(0);
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  rows.reserve(total);
  for (const auto& b : blocks) {
    rows.insert(rows.end(), b.begin(), b.end());
    offsets.push_back(static_cast<std::int32_t>(rows.size()));
  }
  return Partition(std::move(rows), std::move(offsets), universe_size);
}

std::vector<std::int32_t> all_row_indices(const DecisionTable& table) {
  std::vector<std::int32_t> rows(table.n_rows());
  std::iota(rows.begin(), rows.end(), 0);
  return rows;
}

}  // namespace

Partition::Partition(std::vector<std::int32_t> rows,
                     std::vector<std::int32_t> offsets,
                     std::int32_t universe_size)
    : rows_(std::move(rows)),
      offsets_(std::move(offsets)),
      universe_size_(universe_size) {
  if (offsets_.empty() || offsets_.front() != 0 ||
      offsets_.back() != static_cast<std::int32_t>(rows_.size())) {
    throw ParameterError("partition offsets do not cover the row array");
  }
  if (universe_size_ < static_cast<std::int32_t>(rows_.size())) {
    throw ParameterError("partition covers more rows than its universe");
  }
}

Partition partition_by(const DecisionTable& table,
                       const AttributeSubset& attrs) {
  auto rows = all_row_indices(table);
  return partition_by(table, attrs, rows);
}

Partition partition_by(const DecisionTable& table, const AttributeSubset& attrs,
                       std::span<const std::int32_t> rows) {
  for (auto a : attrs) {
    if (a < 0 || static_cast<std::size_t>(a) >= table.n_attrs()) {
      throw ParameterError("attribute index " + std::to_string(a) +
                           " out of range");
    }
  }
  const auto universe = static_cast<std::int32_t>(table.n_rows());
  if (attrs.empty()) return partition_trivial(rows, universe);

  // Radix-style grouping: fold one attribute at a time into a running key.
  // Keys stay dense (< covered row count) so the map stays small.
  std::vector<std::int32_t> keys(rows.size(), 0);
  std::int32_t n_keys = 1;
  std::unordered_map<std::int64_t, std::int32_t> remap;
  for (auto a : attrs) {
    remap.clear();
    remap.reserve(rows.size());
    const auto card = table.cardinalities[static_cast<std::size_t>(a)];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::int64_t wide =
          static_cast<std::int64_t>(keys[i]) * card +
          table.code(static_cast<std::size_t>(rows[i]), static_cast<std::size_t>(a));
      auto [it, inserted] =
          remap.try_emplace(wide, static_cast<std::int32_t>(remap.size()));
      keys[i] = it->second;
    }
    n_keys = static_cast<std::int32_t>(remap.size());
  }

  std::vector<std::vector<std::int32_t>> blocks(
      static_cast<std::size_t>(n_keys));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    blocks[static_cast<std::size_t>(keys[i])].push_back(rows[i]);
  }
  return canonicalize(std::move(blocks), universe);
}

Partition partition_trivial(std::span<const std::int32_t> rows,
                            std::int32_t universe_size) {
  std::vector<std::int32_t> copy(rows.begin(), rows.end());
  std::sort(copy.begin(), copy.end());
  std::vector<std::int32_t> offsets = {0};
  if (!copy.empty()) offsets.push_back(static_cast<std::int32_t>(copy.size()));
  return Partition(std::move(copy), std::move(offsets), universe_size);
}

Partition refine(const Partition& base, const DecisionTable& table,
                 std::int32_t attr) {
  if (attr < 0 || static_cast<std::size_t>(attr) >= table.n_attrs()) {
    throw ParameterError("attribute index " + std::to_string(attr) +
                         " out of range");
  }
  std::vector<std::vector<std::int32_t>> blocks;
  const auto card =
      static_cast<std::size_t>(table.cardinalities[static_cast<std::size_t>(attr)]);
  std::vector<std::vector<std::int32_t>> buckets(card);
  for (std::size_t b = 0; b < base.block_count(); ++b) {
    for (auto& bucket : buckets) bucket.clear();
    for (auto row : base.block(b)) {
      buckets[static_cast<std::size_t>(
                  table.code(static_cast<std::size_t>(row),
                             static_cast<std::size_t>(attr)))]
          .push_back(row);
    }
    for (const auto& bucket : buckets) {
      if (!bucket.empty()) blocks.push_back(bucket);
    }
  }
  return canonicalize(std::move(blocks), base.universe_size());
}

Partition decision_partition(const DecisionTable& table) {
  auto rows = all_row_indices(table);
  return decision_partition(table, rows);
}

Partition decision_partition(const DecisionTable& table,
                             std::span<const std::int32_t> rows) {
  std::vector<std::int32_t> neg, pos;
  for (auto row : rows) {
    const auto d = table.decisions[static_cast<std::size_t>(row)];
    if (d < 0) {
      throw StateError("decision partition over unlabeled row " +
                       std::to_string(row));
    }
    (d == 1 ? pos : neg).push_back(row);
  }
  std::vector<std::vector<std::int32_t>> blocks;
  if (!neg.empty()) blocks.push_back(std::move(neg));
  if (!pos.empty()) blocks.push_back(std::move(pos));
  return canonicalize(std::move(blocks),
                      static_cast<std::int32_t>(table.n_rows()));
}

Regions regions(const Partition& cond, const DecisionTable& table) {
  Regions out;
  for (std::size_t b = 0; b < cond.block_count(); ++b) {
    const auto block = cond.block(b);
    bool any_pos = false, any_neg = false;
    for (auto row : block) {
      const auto d = table.decisions[static_cast<std::size_t>(row)];
      if (d < 0) {
        throw StateError("region computation over unlabeled row " +
                         std::to_string(row));
      }
      (d == 1 ? any_pos : any_neg) = true;
    }
    auto& dest = (any_pos && any_neg) ? out.boundary : out.positive;
    dest.insert(dest.end(), block.begin(), block.end());
  }
  std::sort(out.positive.begin(), out.positive.end());
  std::sort(out.boundary.begin(), out.boundary.end());
  return out;
}

}  // namespace granred
