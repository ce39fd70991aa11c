#pragma once

#include <iosfwd>
#include <string>

#include "granred/harness.hpp"

namespace granred {

/// One line per cell: dataset,alpha,beta,repeat,method,reduct_size,accuracy.
/// Accuracy carries six decimals; the output is deterministic for a given
/// report.
void write_report_csv(const ExperimentReport& report, std::ostream& out);

/// Aligned text table aggregated per (dataset, alpha, beta, method):
/// reduct-size min/max/avg over repeats plus mean accuracy.
void write_report_summary(const ExperimentReport& report, std::ostream& out);

struct ExperimentConfig {
  std::string dataset_path;
  ExperimentSpec spec;
};

/// Flat key=value format, one pair per line, '#' starts a comment. Keys:
/// dataset (path, required), alphas, betas, repeats, folds, knn_k, methods,
/// epsilon, delta, seed. List values are comma-separated. Unknown keys and
/// malformed values raise ConfigError.
ExperimentConfig parse_experiment_config(std::istream& in);

}  // namespace granred
