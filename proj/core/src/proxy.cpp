#include "granred/proxy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "granred/errors.hpp"

namespace granred {
namespace {

void check_params(const ProxyParams& params) {
  if (!(params.epsilon > 0.0)) {
    throw ParameterError("epsilon must be positive");
  }
  if (params.delta < 1) {
    throw ParameterError("delta must be at least 1");
  }
  if (!(params.prior_pos >= 0.0 && params.prior_pos <= 1.0)) {
    throw ParameterError("prior_pos must lie in [0, 1]");
  }
}

}  // namespace

LabeledStats labeled_stats(const DecisionTable& table) {
  LabeledStats s;
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    const auto d = table.decisions[r];
    if (d < 0) continue;
    ++s.n_labeled;
    (d == 1 ? s.n_pos : s.n_neg) += 1;
  }
  if (s.n_labeled == 0) {
    throw StateError("proxy labeling needs at least one labeled row");
  }
  s.gamma = s.n_neg == 0 ? std::numeric_limits<double>::infinity()
                         : static_cast<double>(s.n_pos) /
                               static_cast<double>(s.n_neg);
  return s;
}

double p_init(const LabeledStats& stats, const ProxyParams& params) {
  check_params(params);
  if (!(stats.gamma > 0.0) || std::isinf(stats.gamma)) {
    throw ParameterError("p_init requires a finite positive class ratio");
  }
  if (stats.n_labeled > params.delta) return 1.0;
  const double exponent =
      1.0 + std::exp(-params.epsilon * static_cast<double>(params.delta) *
                     static_cast<double>(stats.n_labeled));
  return std::pow(stats.gamma, exponent);
}

double p_prior(std::int64_t n_universe, const ProxyParams& params) {
  check_params(params);
  if (n_universe < 1) {
    throw ParameterError("universe size must be at least 1");
  }
  const double growth =
      std::pow(1.0 + params.epsilon, static_cast<double>(n_universe));
  if (params.prior_pos <= 0.5) {
    return std::min(params.prior_pos * growth, 0.5);
  }
  return 1.0 - std::min((1.0 - params.prior_pos) * growth, 0.5);
}

std::pair<DecisionTable, ProxyDecision> assign_proxy_labels(
    const DecisionTable& table, const ProxyParams& params) {
  check_params(params);
  const LabeledStats stats = labeled_stats(table);

  ProxyDecision decision;
  if (stats.n_neg == 0) {
    // Only positives labeled: the unlabeled mass plays the missing side.
    decision.p_init = 1.0;
    decision.p_prior = 1.0;
    decision.lambda = 1.0;
  } else if (stats.n_pos == 0) {
    decision.p_init = 0.0;
    decision.p_prior = 1.0;
    decision.lambda = 0.0;
  } else {
    decision.p_init = p_init(stats, params);
    decision.p_prior =
        p_prior(static_cast<std::int64_t>(table.n_rows()), params);
    decision.lambda = decision.p_init * decision.p_prior;
  }
  decision.label =
      decision.lambda <= 0.5 ? ClassLabel::positive : ClassLabel::negative;

  DecisionTable out = table;
  const std::int8_t fill = static_cast<std::int8_t>(decision.label);
  for (auto& d : out.decisions) {
    if (d < 0) d = fill;
  }
  return {std::move(out), decision};
}

}  // namespace granred
