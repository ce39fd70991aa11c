#include "granred/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "granred/errors.hpp"
#include "granred/parallel.hpp"

namespace granred {
namespace {

void require_fully_labeled(const DecisionTable& table) {
  if (!table.fully_labeled()) {
    throw StateError("reduction requires every row labeled");
  }
}

bool block_is_pure(std::span<const std::int32_t> block,
                   const DecisionTable& table) {
  const auto first = table.decisions[static_cast<std::size_t>(block.front())];
  for (auto row : block) {
    if (table.decisions[static_cast<std::size_t>(row)] != first) return false;
  }
  return true;
}

std::int64_t count_impure_blocks(const Partition& p,
                                 const DecisionTable& table) {
  std::int64_t n = 0;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    n += !block_is_pure(p.block(b), table);
  }
  return n;
}

AttributeSubset all_attributes(const DecisionTable& table) {
  AttributeSubset attrs(table.n_attrs());
  std::iota(attrs.begin(), attrs.end(), 0);
  return attrs;
}

}  // namespace

std::int32_t initial_attribute(const DecisionTable& table) {
  if (table.n_attrs() == 0) {
    throw StateError("no attributes to select from");
  }
  require_fully_labeled(table);
  std::vector<Bits> gh(table.n_attrs());
  parallel_for(static_cast<std::int64_t>(table.n_attrs()), [&](std::int64_t a) {
    gh[static_cast<std::size_t>(a)] = granular_conditional_entropy(
        partition_by(table, {static_cast<std::int32_t>(a)}), table);
  });
  std::size_t best = 0;
  for (std::size_t a = 1; a < gh.size(); ++a) {
    if (gh[a] < gh[best]) best = a;
  }
  return static_cast<std::int32_t>(best);
}

SearchState prune_consistent_examples(SearchState state,
                                      const DecisionTable& table) {
  std::vector<std::int32_t> rows;
  rows.reserve(state.cond.covered_rows());
  std::vector<std::int32_t> offsets = {0};
  for (std::size_t b = 0; b < state.cond.block_count(); ++b) {
    const auto block = state.cond.block(b);
    if (block_is_pure(block, table)) continue;
    rows.insert(rows.end(), block.begin(), block.end());
    offsets.push_back(static_cast<std::int32_t>(rows.size()));
  }
  state.cond =
      Partition(std::move(rows), std::move(offsets), state.cond.universe_size());
  return state;
}

SearchState prune_redundant_attributes(SearchState state,
                                       const DecisionTable& table,
                                       Bits tolerance) {
  AttributeSubset kept;
  kept.reserve(state.candidates.size());
  for (auto a : state.candidates) {
    if (gh_attribute_given_reduct(state.cond, table, a) > tolerance) {
      kept.push_back(a);
    }
  }
  state.candidates = std::move(kept);
  return state;
}

ReductTrace reduce(const DecisionTable& table, const ReduceOptions& options) {
  require_fully_labeled(table);
  if (table.n_attrs() == 0) throw StateError("no attributes to select from");
  if (!(options.tolerance >= 0.0)) {
    throw ParameterError("tolerance must be non-negative");
  }

  ReductTrace trace;
  trace.gh_full =
      granular_conditional_entropy(partition_by(table, all_attributes(table)), table);

  const Bits gh_empty =
      granular_conditional_entropy(partition_by(table, {}), table);

  const std::int32_t first = initial_attribute(table);
  SearchState state{partition_by(table, {first}), {}};
  for (std::int32_t a = 0; a < static_cast<std::int32_t>(table.n_attrs()); ++a) {
    if (a != first) state.candidates.push_back(a);
  }
  Bits gh_cur = granular_conditional_entropy(state.cond, table);
  trace.selected.push_back(first);

  auto record_round = [&](std::int32_t attribute, Bits sig, bool stalled) {
    ReductRound round;
    round.attribute = attribute;
    round.sig = sig;
    round.gh_after = gh_cur;
    round.stalled = stalled;
    if (options.accelerate) {
      const auto rows_before =
          static_cast<std::int64_t>(state.cond.covered_rows());
      state = prune_consistent_examples(std::move(state), table);
      round.pruned_examples =
          rows_before - static_cast<std::int64_t>(state.cond.covered_rows());
      const auto cands_before =
          static_cast<std::int64_t>(state.candidates.size());
      state = prune_redundant_attributes(std::move(state), table,
                                         options.tolerance);
      round.pruned_attributes =
          cands_before - static_cast<std::int64_t>(state.candidates.size());
    }
    trace.rounds.push_back(round);
  };
  record_round(first, gh_empty - gh_cur, false);

  while (std::abs(gh_cur - trace.gh_full) > options.tolerance &&
         !state.candidates.empty()) {
    const std::size_t n_cand = state.candidates.size();
    std::vector<Bits> gh_after(n_cand);
    parallel_for(static_cast<std::int64_t>(n_cand), [&](std::int64_t i) {
      const auto idx = static_cast<std::size_t>(i);
      gh_after[idx] = granular_conditional_entropy(
          refine(state.cond, table, state.candidates[idx]), table);
    });

    // Candidates ascend by index, so the first strict minimum realizes the
    // lowest-index tie-break.
    std::size_t best = 0;
    for (std::size_t i = 1; i < n_cand; ++i) {
      if (gh_after[i] < gh_after[best]) best = i;
    }
    bool stalled = false;
    if (gh_cur - gh_after[best] <= options.tolerance) {
      // No candidate clears the tolerance on its own; force progress with
      // the one leaving the most class-mixed blocks split apart.
      stalled = true;
      std::vector<std::int64_t> impure(n_cand);
      parallel_for(static_cast<std::int64_t>(n_cand), [&](std::int64_t i) {
        const auto idx = static_cast<std::size_t>(i);
        impure[idx] = count_impure_blocks(
            refine(state.cond, table, state.candidates[idx]), table);
      });
      best = 0;
      for (std::size_t i = 1; i < n_cand; ++i) {
        if (impure[i] > impure[best]) best = i;
      }
    }

    const std::int32_t chosen = state.candidates[best];
    const Bits sig = gh_cur - gh_after[best];
    state.cond = refine(state.cond, table, chosen);
    gh_cur = gh_after[best];
    state.candidates.erase(state.candidates.begin() +
                           static_cast<std::ptrdiff_t>(best));
    trace.selected.push_back(chosen);
    record_round(chosen, sig, stalled);
  }

  if (options.enforce_min) {
    trace.selected = enforce_minimality(table, trace.selected, trace.gh_full,
                                        options.tolerance);
    trace.minimality_enforced = true;
  }
  return trace;
}

AttributeSubset enforce_minimality(const DecisionTable& table,
                                   const AttributeSubset& red, Bits gh_target,
                                   Bits tolerance) {
  require_fully_labeled(table);
  const Bits gh_red =
      granular_conditional_entropy(partition_by(table, red), table);
  if (std::abs(gh_red - gh_target) > tolerance) {
    throw StateError("subset does not reach the target entropy; nothing to minimize");
  }
  AttributeSubset result = red;
  for (std::size_t i = result.size(); i-- > 0;) {
    AttributeSubset trial;
    trial.reserve(result.size() - 1);
    for (std::size_t j = 0; j < result.size(); ++j) {
      if (j != i) trial.push_back(result[j]);
    }
    const Bits gh_trial =
        granular_conditional_entropy(partition_by(table, trial), table);
    if (std::abs(gh_trial - gh_target) <= tolerance) {
      result = std::move(trial);
    }
  }
  return result;
}

}  // namespace granred
