#pragma once

#include <cstdint>
#include <vector>

#include "granred/partition.hpp"
#include "granred/reduction.hpp"
#include "granred/table.hpp"

namespace granred {

enum class ScoreDirection { higher_better, lower_better };

/// One score per condition attribute. Degenerate attributes carry +infinity:
/// under higher_better that marks a perfect separator, under lower_better a
/// worthless constant; select_top_k orders them accordingly.
struct AttributeScores {
  std::vector<double> values;
  ScoreDirection direction = ScoreDirection::higher_better;
};

/// Between-class over within-class scatter of each attribute's codes,
/// computed on the labeled rows only; higher separates classes better.
/// Zero between-class scatter scores 0 even when the within-class scatter
/// also vanishes. Requires labeled rows of both classes.
AttributeScores fisher_scores(const DecisionTable& table);

/// Locality preservation of each attribute over a t-nearest-neighbor graph
/// (Hamming distance over all attributes, edge if either endpoint ranks the
/// other among its t closest): sum of squared code differences across edges
/// divided by the attribute's sample variance. Lower is better; labels are
/// ignored. Requires at least t+1 rows.
AttributeScores laplacian_scores(const DecisionTable& table, int neighbors);

/// The k best attribute indices by the scores' direction, ties to the
/// lowest index, returned in ascending index order. Requires 1 <= k <= |C|.
AttributeSubset select_top_k(const AttributeScores& scores, std::size_t k);

/// reduce() on the labeled subtable only (unlabeled rows dropped, columns
/// re-encoded densely). Attribute indices refer to the original table.
ReductTrace gce_labeled_only(const DecisionTable& table,
                             const ReduceOptions& options = {});

}  // namespace granred
