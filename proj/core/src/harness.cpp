#include "granred/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "granred/baselines.hpp"
#include "granred/errors.hpp"
#include "granred/parallel.hpp"
#include "granred/rng.hpp"

namespace granred {
namespace {

constexpr int kLaplacianNeighbors = 5;

std::int64_t round_half_up(double x) {
  return static_cast<std::int64_t>(std::floor(x + 0.5));
}

std::vector<std::int32_t> rows_with_label(const DecisionTable& table,
                                          std::int8_t label) {
  std::vector<std::int32_t> rows;
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    if (table.decisions[r] == label) rows.push_back(static_cast<std::int32_t>(r));
  }
  return rows;
}

const std::set<std::string>& known_methods() {
  static const std::set<std::string> methods = {"gce",       "gce-l", "fisher",
                                                "laplacian", "gt",    "raw"};
  return methods;
}

}  // namespace

DecisionTable make_split(const DecisionTable& ground_truth,
                         const SplitSpec& spec) {
  if (!(spec.alpha > 0.0 && spec.alpha <= 1.0)) {
    throw ParameterError("label rate must lie in (0, 1]");
  }
  if (!(spec.beta > 0.0)) {
    throw ParameterError("positive ratio must be positive");
  }
  if (!ground_truth.fully_labeled()) {
    throw StateError("splitting requires ground-truth labels on every row");
  }
  if (spec.alpha == 1.0) return ground_truth;

  const auto n = static_cast<double>(ground_truth.n_rows());
  const double prior = prior_positive_probability(ground_truth);
  const std::int64_t n_labeled = round_half_up(spec.alpha * n);
  const std::int64_t n_pos = round_half_up(spec.beta * prior * spec.alpha * n);
  const std::int64_t n_neg = n_labeled - n_pos;

  const auto pos_rows = rows_with_label(ground_truth, 1);
  const auto neg_rows = rows_with_label(ground_truth, 0);
  if (n_pos < 1) {
    throw SplitError("labeled positive count " + std::to_string(n_pos) +
                     " is below 1");
  }
  if (n_neg < 1) {
    throw SplitError("labeled negative count " + std::to_string(n_neg) +
                     " is below 1");
  }
  if (n_pos > static_cast<std::int64_t>(pos_rows.size())) {
    throw SplitError("labeled positive count " + std::to_string(n_pos) +
                     " exceeds the " + std::to_string(pos_rows.size()) +
                     " positive rows available");
  }
  if (n_neg > static_cast<std::int64_t>(neg_rows.size())) {
    throw SplitError("labeled negative count " + std::to_string(n_neg) +
                     " exceeds the " + std::to_string(neg_rows.size()) +
                     " negative rows available");
  }

  std::mt19937_64 rng(spec.seed);
  const auto keep_pos = sample_without_replacement(
      std::span<const std::int32_t>(pos_rows), static_cast<std::size_t>(n_pos),
      rng);
  const auto keep_neg = sample_without_replacement(
      std::span<const std::int32_t>(neg_rows), static_cast<std::size_t>(n_neg),
      rng);

  DecisionTable split = ground_truth;
  std::vector<bool> keep(split.n_rows(), false);
  for (auto r : keep_pos) keep[static_cast<std::size_t>(r)] = true;
  for (auto r : keep_neg) keep[static_cast<std::size_t>(r)] = true;
  for (std::size_t r = 0; r < split.n_rows(); ++r) {
    if (!keep[r]) split.decisions[r] = -1;
  }
  return split;
}

std::vector<ClassLabel> knn_classify(const DecisionTable& table,
                                     const AttributeSubset& attrs,
                                     std::span<const std::int32_t> train_rows,
                                     std::span<const std::int32_t> query_rows,
                                     int k) {
  if (k < 1) throw ParameterError("neighbor count must be at least 1");
  if (attrs.empty()) throw ParameterError("classification needs at least one attribute");
  if (train_rows.empty()) throw ParameterError("empty training set");
  for (auto a : attrs) {
    if (a < 0 || static_cast<std::size_t>(a) >= table.n_attrs()) {
      throw ParameterError("attribute index " + std::to_string(a) +
                           " out of range");
    }
  }
  for (auto r : train_rows) {
    if (!table.is_labeled(static_cast<std::size_t>(r))) {
      throw StateError("unlabeled training row " + std::to_string(r));
    }
  }

  const auto vote_count =
      std::min<std::size_t>(static_cast<std::size_t>(k), train_rows.size());
  std::vector<ClassLabel> out(query_rows.size());
  parallel_for(static_cast<std::int64_t>(query_rows.size()), [&](std::int64_t q) {
    const auto query = static_cast<std::size_t>(query_rows[static_cast<std::size_t>(q)]);
    std::vector<std::pair<int, std::int32_t>> dist;
    dist.reserve(train_rows.size());
    for (auto t : train_rows) {
      int d = 0;
      for (auto a : attrs) {
        d += (table.code(query, static_cast<std::size_t>(a)) !=
              table.code(static_cast<std::size_t>(t), static_cast<std::size_t>(a)));
      }
      dist.emplace_back(d, t);
    }
    std::partial_sort(dist.begin(),
                      dist.begin() + static_cast<std::ptrdiff_t>(vote_count),
                      dist.end());
    std::size_t pos_votes = 0;
    for (std::size_t i = 0; i < vote_count; ++i) {
      pos_votes += (table.decisions[static_cast<std::size_t>(dist[i].second)] == 1);
    }
    std::int8_t label;
    if (2 * pos_votes > vote_count) {
      label = 1;
    } else if (2 * pos_votes < vote_count) {
      label = 0;
    } else {
      label = table.decisions[static_cast<std::size_t>(dist[0].second)];
    }
    out[static_cast<std::size_t>(q)] = static_cast<ClassLabel>(label);
  });
  return out;
}

double cross_validate(const DecisionTable& table, const AttributeSubset& attrs,
                      int folds, int repeats, std::uint64_t seed, int knn_k) {
  if (!table.fully_labeled()) {
    throw StateError("cross-validation requires every row labeled");
  }
  if (attrs.empty()) {
    throw ParameterError("cannot evaluate an empty attribute subset");
  }
  if (folds < 2) throw ParameterError("fold count must be at least 2");
  if (static_cast<std::size_t>(folds) > table.n_rows()) {
    throw ParameterError("fold count " + std::to_string(folds) +
                         " exceeds the " + std::to_string(table.n_rows()) +
                         " rows");
  }
  if (repeats < 1) throw ParameterError("repeat count must be at least 1");

  const std::size_t n = table.n_rows();
  double accuracy_sum = 0.0;
  for (int rep = 0; rep < repeats; ++rep) {
    std::mt19937_64 rng(
        derive_seed(seed, {static_cast<std::uint64_t>(rep)}));
    std::vector<std::int32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    shuffle_values(order, rng);

    const std::size_t base = n / static_cast<std::size_t>(folds);
    const std::size_t extra = n % static_cast<std::size_t>(folds);
    std::size_t lo = 0;
    for (int f = 0; f < folds; ++f) {
      const std::size_t size = base + (static_cast<std::size_t>(f) < extra);
      const std::size_t hi = lo + size;
      std::vector<std::int32_t> test(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                     order.begin() + static_cast<std::ptrdiff_t>(hi));
      std::vector<std::int32_t> train;
      train.reserve(n - size);
      train.insert(train.end(), order.begin(),
                   order.begin() + static_cast<std::ptrdiff_t>(lo));
      train.insert(train.end(), order.begin() + static_cast<std::ptrdiff_t>(hi),
                   order.end());
      const auto predicted = knn_classify(table, attrs, train, test, knn_k);
      std::size_t correct = 0;
      for (std::size_t i = 0; i < test.size(); ++i) {
        correct += (static_cast<std::int8_t>(predicted[i]) ==
                    table.decisions[static_cast<std::size_t>(test[i])]);
      }
      accuracy_sum +=
          static_cast<double>(correct) / static_cast<double>(test.size());
      lo = hi;
    }
  }
  return accuracy_sum / (static_cast<double>(folds) * repeats);
}

ExperimentReport run_experiment(const DecisionTable& ground_truth,
                                const ExperimentSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  if (!ground_truth.fully_labeled()) {
    throw StateError("experiments need a fully labeled ground-truth table");
  }
  if (spec.alphas.empty() || spec.betas.empty()) {
    throw ParameterError("experiment needs at least one alpha and one beta");
  }
  if (spec.methods.empty()) {
    throw ParameterError("experiment needs at least one method");
  }
  for (const auto& m : spec.methods) {
    if (!known_methods().count(m)) {
      throw ParameterError("unknown method '" + m + "'");
    }
  }
  if (spec.repeats < 1) throw ParameterError("repeat count must be at least 1");

  const double prior = prior_positive_probability(ground_truth);
  const ProxyParams proxy{spec.epsilon, spec.delta, prior};

  bool wants_gce_sized = false;
  for (const auto& m : spec.methods) {
    wants_gce_sized |= (m == "gce" || m == "fisher" || m == "laplacian");
  }

  AttributeSubset gt_attrs;
  if (std::find(spec.methods.begin(), spec.methods.end(), "gt") !=
      spec.methods.end()) {
    gt_attrs = reduce(ground_truth, spec.reduce_options).selected;
  }
  AttributeSubset raw_attrs(ground_truth.n_attrs());
  std::iota(raw_attrs.begin(), raw_attrs.end(), 0);

  struct Job {
    std::size_t alpha_idx, beta_idx;
    int repeat;
  };
  std::vector<Job> jobs;
  for (std::size_t a = 0; a < spec.alphas.size(); ++a) {
    for (std::size_t b = 0; b < spec.betas.size(); ++b) {
      for (int r = 0; r < spec.repeats; ++r) jobs.push_back({a, b, r});
    }
  }

  ExperimentReport report;
  report.cells.resize(jobs.size() * spec.methods.size());

  parallel_for(static_cast<std::int64_t>(jobs.size()), [&](std::int64_t j) {
    const Job& job = jobs[static_cast<std::size_t>(j)];
    const double alpha = spec.alphas[job.alpha_idx];
    const double beta = spec.betas[job.beta_idx];
    const auto context = [&](const std::string& method) {
      std::ostringstream os;
      os << spec.dataset << " alpha=" << alpha << " beta=" << beta
         << " repeat=" << job.repeat;
      if (!method.empty()) os << " method=" << method;
      return os.str();
    };
    try {
      const std::uint64_t split_seed = derive_seed(
          spec.seed, {1, job.alpha_idx, job.beta_idx,
                      static_cast<std::uint64_t>(job.repeat)});
      const std::uint64_t eval_seed = derive_seed(
          spec.seed, {2, job.alpha_idx, job.beta_idx,
                      static_cast<std::uint64_t>(job.repeat)});
      const DecisionTable split =
          make_split(ground_truth, {alpha, beta, split_seed});

      AttributeSubset gce_attrs;
      if (wants_gce_sized) {
        const auto [proxied, decision] = assign_proxy_labels(split, proxy);
        gce_attrs = reduce(proxied, spec.reduce_options).selected;
      }

      for (std::size_t m = 0; m < spec.methods.size(); ++m) {
        const std::string& method = spec.methods[m];
        try {
          AttributeSubset attrs;
          if (method == "gce") {
            attrs = gce_attrs;
          } else if (method == "gce-l") {
            attrs = gce_labeled_only(split, spec.reduce_options).selected;
          } else if (method == "fisher") {
            attrs = select_top_k(fisher_scores(split), gce_attrs.size());
          } else if (method == "laplacian") {
            attrs = select_top_k(laplacian_scores(split, kLaplacianNeighbors),
                                 gce_attrs.size());
          } else if (method == "gt") {
            attrs = gt_attrs;
          } else {
            attrs = raw_attrs;
          }

          ExperimentCell cell;
          cell.dataset = spec.dataset;
          cell.alpha = alpha;
          cell.beta = beta;
          cell.repeat = job.repeat;
          cell.method = method;
          cell.reduct_size = attrs.size();
          cell.accuracy = cross_validate(ground_truth, attrs, spec.folds,
                                         spec.repeats, eval_seed, spec.knn_k);
          report.cells[static_cast<std::size_t>(j) * spec.methods.size() + m] =
              std::move(cell);
        } catch (const Error& e) {
          throw Error(context(method) + ": " + e.what());
        }
      }
    } catch (const Error& e) {
      // Split-stage failures carry no method; cell-stage ones already do.
      const std::string what = e.what();
      if (what.rfind(spec.dataset + " alpha=", 0) == 0) throw;
      throw Error(context("") + ": " + what);
    }
  });

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace granred
