#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "granred/table.hpp"

namespace granred {

/// Sorted set of condition-attribute indices.
using AttributeSubset = std::vector<std::int32_t>;

/// Partition of a row set into equivalence blocks. Blocks are stored
/// contiguously (rows_ sliced by offsets_) in canonical order: each block's
/// rows ascend and blocks are ordered by their smallest row. universe_size
/// records |U| of the table the partition came from, which can exceed the
/// number of rows actually covered once consistent examples are pruned.
class Partition {
 public:
  Partition(std::vector<std::int32_t> rows, std::vector<std::int32_t> offsets,
            std::int32_t universe_size);

  std::size_t block_count() const { return offsets_.size() - 1; }
  std::span<const std::int32_t> block(std::size_t i) const {
    return {rows_.data() + offsets_[i],
            static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
  }
  std::int32_t universe_size() const { return universe_size_; }
  /// Rows covered by the partition (== universe_size before any pruning).
  std::size_t covered_rows() const { return rows_.size(); }
  std::span<const std::int32_t> all_rows() const { return rows_; }

  bool operator==(const Partition& other) const = default;

 private:
  std::vector<std::int32_t> rows_;
  std::vector<std::int32_t> offsets_;
  std::int32_t universe_size_;
};

/// Groups the given rows (default: all rows) by their code tuples on attrs.
/// An empty attrs yields the single-block trivial partition of those rows.
Partition partition_by(const DecisionTable& table, const AttributeSubset& attrs);
Partition partition_by(const DecisionTable& table, const AttributeSubset& attrs,
                       std::span<const std::int32_t> rows);

/// Single block holding the given rows.
Partition partition_trivial(std::span<const std::int32_t> rows,
                            std::int32_t universe_size);

/// Splits each block of base by the codes of one extra attribute. Equals
/// partition_by on the union of the base attributes plus attr.
Partition refine(const Partition& base, const DecisionTable& table,
                 std::int32_t attr);

/// Partition of the labeled rows by decision class. Requires the rows it
/// covers to be labeled.
Partition decision_partition(const DecisionTable& table);
Partition decision_partition(const DecisionTable& table,
                             std::span<const std::int32_t> rows);

struct Regions {
  std::vector<std::int32_t> positive;  // rows in blocks contained in one class
  std::vector<std::int32_t> boundary;  // rows in blocks straddling classes
};

/// Positive/boundary regions of the decision under cond. Every covered row
/// must be labeled.
Regions regions(const Partition& cond, const DecisionTable& table);

}  // namespace granred
