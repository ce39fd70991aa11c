#include "granred/baselines.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "granred/errors.hpp"
#include "granred/parallel.hpp"

namespace granred {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::int32_t> labeled_rows(const DecisionTable& table) {
  std::vector<std::int32_t> rows;
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    if (table.is_labeled(r)) rows.push_back(static_cast<std::int32_t>(r));
  }
  return rows;
}

int hamming(const DecisionTable& table, std::size_t i, std::size_t j) {
  int d = 0;
  for (std::size_t c = 0; c < table.n_attrs(); ++c) {
    d += (table.code(i, c) != table.code(j, c));
  }
  return d;
}

}  // namespace

AttributeScores fisher_scores(const DecisionTable& table) {
  const auto rows = labeled_rows(table);
  if (rows.size() < 2) {
    throw StateError("separation scores need at least two labeled rows");
  }
  std::size_t n_pos = 0;
  for (auto r : rows) n_pos += (table.decisions[static_cast<std::size_t>(r)] == 1);
  const std::size_t n_neg = rows.size() - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    throw StateError("separation scores need labeled rows of both classes");
  }

  AttributeScores out;
  out.direction = ScoreDirection::higher_better;
  out.values.assign(table.n_attrs(), 0.0);
  for (std::size_t c = 0; c < table.n_attrs(); ++c) {
    double sum = 0.0, sum_pos = 0.0, sum_neg = 0.0;
    for (auto r : rows) {
      const double v = table.code(static_cast<std::size_t>(r), c);
      sum += v;
      (table.decisions[static_cast<std::size_t>(r)] == 1 ? sum_pos : sum_neg) += v;
    }
    const double mean = sum / static_cast<double>(rows.size());
    const double mean_pos = sum_pos / static_cast<double>(n_pos);
    const double mean_neg = sum_neg / static_cast<double>(n_neg);
    const double between =
        static_cast<double>(n_pos) * (mean_pos - mean) * (mean_pos - mean) +
        static_cast<double>(n_neg) * (mean_neg - mean) * (mean_neg - mean);
    double within = 0.0;
    for (auto r : rows) {
      const double v = table.code(static_cast<std::size_t>(r), c);
      const double mu =
          table.decisions[static_cast<std::size_t>(r)] == 1 ? mean_pos : mean_neg;
      within += (v - mu) * (v - mu);
    }
    if (between == 0.0) {
      out.values[c] = 0.0;
    } else if (within == 0.0) {
      out.values[c] = kInf;  // classes fully separated along this attribute
    } else {
      out.values[c] = between / within;
    }
  }
  return out;
}

AttributeScores laplacian_scores(const DecisionTable& table, int neighbors) {
  const std::size_t n = table.n_rows();
  if (neighbors < 1) throw ParameterError("neighbor count must be at least 1");
  if (n < static_cast<std::size_t>(neighbors) + 1) {
    throw ParameterError("need at least " + std::to_string(neighbors + 1) +
                         " rows for " + std::to_string(neighbors) +
                         " neighbors");
  }

  // Directed t-nearest lists under Hamming distance, ties to the lower row
  // index; an undirected edge exists if either endpoint lists the other.
  std::vector<std::vector<std::int32_t>> nearest(n);
  parallel_for(static_cast<std::int64_t>(n), [&](std::int64_t i) {
    const auto row = static_cast<std::size_t>(i);
    std::vector<std::pair<int, std::int32_t>> dist;
    dist.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == row) continue;
      dist.emplace_back(hamming(table, row, j), static_cast<std::int32_t>(j));
    }
    std::partial_sort(dist.begin(), dist.begin() + neighbors, dist.end());
    auto& list = nearest[row];
    list.reserve(static_cast<std::size_t>(neighbors));
    for (int k = 0; k < neighbors; ++k) list.push_back(dist[static_cast<std::size_t>(k)].second);
  });

  std::vector<std::vector<std::int32_t>> edges(n);  // j > i only
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : nearest[i]) {
      const auto lo = std::min(i, static_cast<std::size_t>(j));
      const auto hi = std::max(i, static_cast<std::size_t>(j));
      edges[lo].push_back(static_cast<std::int32_t>(hi));
    }
  }
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }

  AttributeScores out;
  out.direction = ScoreDirection::lower_better;
  out.values.assign(table.n_attrs(), 0.0);
  for (std::size_t c = 0; c < table.n_attrs(); ++c) {
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double v = table.code(r, c);
      sum += v;
      sum_sq += v * v;
    }
    const double var =
        (sum_sq - sum * sum / static_cast<double>(n)) / static_cast<double>(n - 1);
    if (var <= 0.0) {
      out.values[c] = kInf;  // constant attribute: no locality signal
      continue;
    }
    double graph_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (auto j : edges[i]) {
        const double d =
            table.code(i, c) - table.code(static_cast<std::size_t>(j), c);
        graph_sum += 2.0 * d * d;  // both directions of each edge
      }
    }
    out.values[c] = graph_sum / var;
  }
  return out;
}

AttributeSubset select_top_k(const AttributeScores& scores, std::size_t k) {
  const std::size_t n = scores.values.size();
  if (k < 1 || k > n) {
    throw ParameterError("selection size " + std::to_string(k) +
                         " outside 1.." + std::to_string(n));
  }
  std::vector<std::int32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  const bool higher = scores.direction == ScoreDirection::higher_better;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::int32_t a, std::int32_t b) {
                     const double va = scores.values[static_cast<std::size_t>(a)];
                     const double vb = scores.values[static_cast<std::size_t>(b)];
                     return higher ? va > vb : va < vb;
                   });
  AttributeSubset chosen(order.begin(),
                         order.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

ReductTrace gce_labeled_only(const DecisionTable& table,
                             const ReduceOptions& options) {
  const auto rows = labeled_rows(table);
  if (rows.empty()) {
    throw StateError("no labeled rows to reduce on");
  }
  return reduce(table.restrict_rows(rows), options);
}

}  // namespace granred
