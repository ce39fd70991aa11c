#pragma once

#include <cstdint>
#include <span>

#include "granred/partition.hpp"
#include "granred/table.hpp"

namespace granred {

/// Information quantities in bits (log base 2). The convention 0*log(0) = 0
/// applies throughout.
using Bits = double;

/// Shannon entropy of a partition: -sum P(X) log2 P(X) with
/// P(X) = |X| / universe_size.
Bits entropy(const Partition& p);

/// Classical conditional entropy H(D|B) = -sum_i P(X_i) sum_j
/// P(Y_j|X_i) log2 P(Y_j|X_i), with D the decision partition restricted to
/// each block.
Bits conditional_entropy(const Partition& cond, const DecisionTable& table);

/// Granularity sum of squared block probabilities: sum P(X_i)^2. Ranges over
/// (0, 1]; 1 iff the partition is the single-block one.
double granularity(const Partition& p);

/// Granulation-weighted conditional entropy
///   -sum_i P(X_i)^2 sum_j P(Y_j|X_i) log2 P(Y_j|X_i).
/// Block probabilities use the partition's universe_size denominator, so the
/// value is unchanged when decision-pure blocks are dropped from cond. Never
/// increasing as cond is refined; 0 iff every covered block is pure.
Bits granular_conditional_entropy(const Partition& cond,
                                  const DecisionTable& table);

/// Same quantity against an arbitrary per-row class map (values >= 0); used
/// where the grouping target is another attribute's codes rather than the
/// decision.
Bits granular_conditional_entropy(const Partition& cond,
                                  std::span<const std::int32_t> classes);

/// Drop in granular conditional entropy from adding attr to the subset
/// inducing cond. Non-negative up to rounding.
Bits significance(const Partition& cond, const DecisionTable& table,
                  std::int32_t attr);

/// Granular conditional entropy of attr's own codes given cond. Zero iff
/// attr is constant on every block of cond, i.e. refining cond by attr
/// changes nothing.
Bits gh_attribute_given_reduct(const Partition& cond,
                               const DecisionTable& table, std::int32_t attr);

}  // namespace granred
