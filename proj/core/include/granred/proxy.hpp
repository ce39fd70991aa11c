#pragma once

#include <cstdint>
#include <utility>

#include "granred/table.hpp"

namespace granred {

/// Knobs for prior-guided proxy labeling. prior_pos is the believed
/// population fraction of positive rows; in experiments it comes from
/// ground truth via prior_positive_probability, in deployment it is
/// supplied externally.
struct ProxyParams {
  double epsilon = 0.0002;
  std::int64_t delta = 500;
  double prior_pos = 0.0;
};

/// Counts over the labeled rows. gamma = n_pos / n_neg; it is +infinity
/// when n_neg = 0 and that value doubles as the degenerate flag.
struct LabeledStats {
  std::int64_t n_pos = 0;
  std::int64_t n_neg = 0;
  std::int64_t n_labeled = 0;
  double gamma = 0.0;
};

/// Outcome of one global proxy-labeling decision. The same label goes to
/// every unlabeled row: the score has no per-row inputs.
struct ProxyDecision {
  double p_init = 0.0;
  double p_prior = 0.0;
  double lambda = 0.0;  // p_init * p_prior
  ClassLabel label = ClassLabel::negative;
};

/// Throws StateError when the table has no labeled rows.
LabeledStats labeled_stats(const DecisionTable& table);

/// Imbalance factor from the labeled sample: gamma^(1 + e^(-epsilon * delta
/// * n_labeled)) while n_labeled <= delta, exactly 1 past that cutoff.
/// Requires finite gamma > 0; the degenerate cases are resolved in
/// assign_proxy_labels instead.
double p_init(const LabeledStats& stats, const ProxyParams& params);

/// Population-prior factor pushed toward 1/2 as the universe grows:
/// min(prior_pos * (1+epsilon)^n, 1/2) for prior_pos <= 1/2, mirrored as
/// 1 - min((1-prior_pos) * (1+epsilon)^n, 1/2) above it.
double p_prior(std::int64_t n_universe, const ProxyParams& params);

/// Computes one global decision score lambda = p_init * p_prior and labels
/// every unlabeled row positive iff lambda <= 0.5 (equality included).
/// Labeled rows are untouched; the returned table is fully labeled.
/// One-sided labeled sets bypass the formulas: no negatives forces lambda
/// to 1 (label negative), no positives forces it to 0 (label positive).
std::pair<DecisionTable, ProxyDecision> assign_proxy_labels(
    const DecisionTable& table, const ProxyParams& params);

}  // namespace granred
