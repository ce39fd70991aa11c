#pragma once

#include <cstdint>
#include <vector>

#include "granred/measures.hpp"
#include "granred/partition.hpp"
#include "granred/table.hpp"

namespace granred {

struct ReduceOptions {
  bool accelerate = true;
  bool enforce_min = false;
  /// Absolute tolerance in bits for stopping and equality tests.
  Bits tolerance = 1e-10;
};

/// One selection step of the greedy search.
struct ReductRound {
  std::int32_t attribute = -1;
  /// Entropy drop this pick achieved over the previous subset.
  Bits sig = 0.0;
  Bits gh_after = 0.0;
  /// Rows and candidates discarded right after this pick. Zero with
  /// acceleration off.
  std::int64_t pruned_examples = 0;
  std::int64_t pruned_attributes = 0;
  /// True when no candidate's drop cleared the tolerance and the pick fell
  /// back to the refinement with the most class-mixed blocks.
  bool stalled = false;
};

struct ReductTrace {
  /// The reduct, in selection order (post-minimality order preserved).
  AttributeSubset selected;
  /// Stopping target: entropy of the decision given all attributes.
  Bits gh_full = 0.0;
  std::vector<ReductRound> rounds;
  bool minimality_enforced = false;
};

/// Mutable search position: the partition covering the still-undecided rows
/// and the attributes still eligible for selection. The partition's
/// universe_size stays at the original row count so entropy values are
/// unaffected by pruning.
struct SearchState {
  Partition cond;
  AttributeSubset candidates;
};

/// Attribute minimizing the decision entropy taken alone; ties go to the
/// lowest index. Requires a fully labeled table with >= 1 attribute.
std::int32_t initial_attribute(const DecisionTable& table);

/// Drops every decision-pure block from the state's partition. Entropy
/// values over the state are unchanged: pure blocks contribute zero.
SearchState prune_consistent_examples(SearchState state,
                                      const DecisionTable& table);

/// Drops candidates whose codes are constant on every remaining block
/// (refining by them is the identity, so their future drop is zero).
SearchState prune_redundant_attributes(SearchState state,
                                       const DecisionTable& table,
                                       Bits tolerance);

/// Greedy forward selection: forced first pick by initial_attribute, then
/// repeatedly add the candidate with the largest entropy drop until the
/// decision entropy given the selection matches the all-attributes value
/// within options.tolerance. With options.accelerate, settled rows and
/// non-informative candidates are pruned after every pick; the selected
/// sequence and entropy trace are identical either way. With
/// options.enforce_min, a backward pass removes members whose absence
/// keeps the target entropy.
ReductTrace reduce(const DecisionTable& table, const ReduceOptions& options = {});

/// Backward pass over red in reverse order, dropping any attribute whose
/// removal keeps the decision entropy within tolerance of gh_target.
/// Every member of the result is necessary. Throws StateError when red
/// itself does not meet gh_target.
AttributeSubset enforce_minimality(const DecisionTable& table,
                                   const AttributeSubset& red, Bits gh_target,
                                   Bits tolerance = 1e-10);

}  // namespace granred
