#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "granred/proxy.hpp"
#include "granred/reduction.hpp"
#include "granred/table.hpp"

namespace granred {

/// Recipe for hiding labels from a ground-truth table: keep labels on a
/// sample of round(beta * prior_pos * alpha * |U|) positive rows and
/// round(alpha * |U|) minus that many negative rows. The studied range is
/// alpha in [0.01, 0.3] plus 1.0 (keep everything); beta in [0.5, 1.5]
/// skews the labeled set's class balance against the prior.
struct SplitSpec {
  double alpha = 0.1;
  double beta = 1.0;
  std::uint64_t seed = 0;
};

struct ExperimentSpec {
  std::string dataset;
  std::vector<double> alphas;
  std::vector<double> betas;
  int repeats = 10;
  int folds = 10;
  int knn_k = 3;
  /// Any of: gce, gce-l, fisher, laplacian, gt, raw.
  std::vector<std::string> methods;
  double epsilon = 0.0002;
  std::int64_t delta = 500;
  std::uint64_t seed = 0;
  ReduceOptions reduce_options;
};

/// One evaluated (split, method) combination.
struct ExperimentCell {
  std::string dataset;
  double alpha = 0.0;
  double beta = 0.0;
  int repeat = 0;
  std::string method;
  std::size_t reduct_size = 0;
  double accuracy = 0.0;
};

struct ExperimentReport {
  /// Ordered by (alpha, beta, repeat, method) exactly as specified,
  /// independent of scheduling.
  std::vector<ExperimentCell> cells;
  /// Informational only; report writers must not serialize it.
  double wall_seconds = 0.0;
};

/// Samples the labeled set without replacement using the seeded source and
/// unlabels every other row. alpha = 1.0 returns the table unchanged.
/// Throws SplitError naming the violated bound when a computed count is
/// infeasible (zero of either class, or more than the table holds).
DecisionTable make_split(const DecisionTable& ground_truth,
                         const SplitSpec& spec);

/// Labels query rows by majority vote among the k nearest labeled train
/// rows, with distance = number of disagreeing attributes in attrs, nearer
/// ties to the lower row index, and vote ties to the single nearest row.
std::vector<ClassLabel> knn_classify(const DecisionTable& table,
                                     const AttributeSubset& attrs,
                                     std::span<const std::int32_t> train_rows,
                                     std::span<const std::int32_t> query_rows,
                                     int k);

/// Mean accuracy over repeats x folds: each repeat shuffles the rows with a
/// seed derived from (seed, repeat), cuts them into contiguous folds with
/// sizes differing by at most one, and classifies each fold from the rest.
double cross_validate(const DecisionTable& table, const AttributeSubset& attrs,
                      int folds, int repeats, std::uint64_t seed,
                      int knn_k = 3);

/// Full protocol: for every (alpha, beta, repeat) make a split, derive each
/// method's attribute subset on that split, then score it with
/// cross_validate on the ground-truth labels. Method meanings: gce = reduct
/// after proxy labeling, gce-l = reduct from labeled rows only, fisher /
/// laplacian = top-k scored attributes with k matching the gce reduct size
/// on the same split, gt = reduct of the fully labeled table, raw = all
/// attributes. Errors carry the (alpha, beta, repeat, method) context.
ExperimentReport run_experiment(const DecisionTable& ground_truth,
                                const ExperimentSpec& spec);

}  // namespace granred
