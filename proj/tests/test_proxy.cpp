#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "granred/errors.hpp"
#include "granred/proxy.hpp"
#include "tables.hpp"

using namespace granred;
using granred::testing::make_table;

namespace {

struct GridRow {
  double gamma;
  std::int64_t n_labeled;
  double prior_pos;
  std::int64_t n_universe;
  double p_init;
  double p_prior;
  double lambda;
};

// High-precision reference values, frozen before the implementation was
// written. epsilon = 0.0002, delta = 500 throughout.
const GridRow kGrid[] = {
#include "proxy_expected.inc"
};

LabeledStats stats_for(double gamma, std::int64_t n_labeled) {
  LabeledStats s;
  s.gamma = gamma;
  s.n_labeled = n_labeled;
  // counts consistent with gamma; the formulas only read gamma and n_labeled
  s.n_neg = static_cast<std::int64_t>(
      std::llround(static_cast<double>(n_labeled) / (1.0 + gamma)));
  s.n_pos = n_labeled - s.n_neg;
  return s;
}

}  // namespace

TEST_CASE("labeled_stats counts classes and flags one-sided data") {
  SUBCASE("mixed labels") {
    auto s = labeled_stats(make_table({{0}, {1}, {2}, {0}, {1}}, "ppn??"));
    CHECK(s.n_pos == 2);
    CHECK(s.n_neg == 1);
    CHECK(s.n_labeled == 3);
    CHECK(s.gamma == doctest::Approx(2.0));
  }
  SUBCASE("no negatives flags gamma infinite") {
    auto s = labeled_stats(make_table({{0}, {1}}, "pp"));
    CHECK(std::isinf(s.gamma));
  }
  SUBCASE("balanced") {
    CHECK(labeled_stats(make_table({{0}, {1}}, "pn")).gamma == 1.0);
  }
  SUBCASE("no labeled rows") {
    CHECK_THROWS_AS(labeled_stats(make_table({{0}, {1}}, "??")), StateError);
  }
}

TEST_CASE("p_init branches") {
  ProxyParams params;
  SUBCASE("past the cutoff the factor is exactly 1") {
    CHECK(p_init(stats_for(0.25, 501), params) == 1.0);
    CHECK(p_init(stats_for(4.0, 600), params) == 1.0);
  }
  SUBCASE("at the cutoff the formula still applies") {
    CHECK(p_init(stats_for(0.25, 500), params) != 1.0);
  }
  SUBCASE("balanced ratio is neutral at any size") {
    CHECK(p_init(stats_for(1.0, 10), params) == 1.0);
    CHECK(p_init(stats_for(1.0, 500), params) == 1.0);
  }
  SUBCASE("degenerate ratios are rejected") {
    CHECK_THROWS_AS(p_init(stats_for(0.0, 10), params), ParameterError);
    LabeledStats inf_stats;
    inf_stats.gamma = std::numeric_limits<double>::infinity();
    inf_stats.n_labeled = 10;
    CHECK_THROWS_AS(p_init(inf_stats, params), ParameterError);
  }
}

TEST_CASE("p_prior branches") {
  ProxyParams params;
  SUBCASE("balanced prior clamps to one half") {
    params.prior_pos = 0.5;
    CHECK(p_prior(1, params) == 0.5);
    CHECK(p_prior(100000, params) == 0.5);
  }
  SUBCASE("high prior mirrors through the clamp") {
    params.prior_pos = 0.7;
    CHECK(p_prior(100000, params) == doctest::Approx(0.5));
    CHECK(p_prior(100, params) > 0.5);
  }
  SUBCASE("non-decreasing in the universe size until the clamp") {
    params.prior_pos = 0.3;
    double prev = 0.0;
    for (std::int64_t n : {1, 10, 100, 1000, 2000, 5000, 10000, 100000}) {
      double v = p_prior(n, params);
      CHECK(v >= prev);
      CHECK(v <= 0.5);
      prev = v;
    }
    CHECK(prev == 0.5);
  }
  SUBCASE("invalid inputs") {
    CHECK_THROWS_AS(p_prior(0, params), ParameterError);
    params.prior_pos = 1.5;
    CHECK_THROWS_AS(p_prior(10, params), ParameterError);
  }
}

TEST_CASE("formula values match the frozen high-precision grid") {
  for (const auto& row : kGrid) {
    ProxyParams params;
    params.prior_pos = row.prior_pos;
    CAPTURE(row.gamma);
    CAPTURE(row.n_labeled);
    CAPTURE(row.prior_pos);
    CAPTURE(row.n_universe);
    const double pi = p_init(stats_for(row.gamma, row.n_labeled), params);
    const double pp = p_prior(row.n_universe, params);
    CHECK(pi == doctest::Approx(row.p_init).epsilon(1e-9));
    CHECK(pp == doctest::Approx(row.p_prior).epsilon(1e-9));
    CHECK(pi * pp == doctest::Approx(row.lambda).epsilon(1e-9));
  }
}

TEST_CASE("assign_proxy_labels") {
  SUBCASE("score at the threshold labels positive") {
    // gamma = 1 and a balanced prior pin lambda to exactly 0.5
    auto table = make_table({{0}, {1}, {0}, {1}, {0}, {1}}, "pn????");
    ProxyParams params;
    params.prior_pos = 0.5;
    auto [out, decision] = assign_proxy_labels(table, params);
    CHECK(decision.lambda == 0.5);
    CHECK(decision.label == ClassLabel::positive);
    for (std::size_t r = 2; r < out.n_rows(); ++r) {
      CHECK(out.label(r) == ClassLabel::positive);
    }
  }
  SUBCASE("labeled rows keep their labels") {
    auto table = make_table({{0}, {1}, {0}, {1}}, "pn??");
    ProxyParams params;
    params.prior_pos = 0.2;
    auto [out, decision] = assign_proxy_labels(table, params);
    CHECK(out.label(0) == ClassLabel::positive);
    CHECK(out.label(1) == ClassLabel::negative);
    CHECK(out.fully_labeled());
  }
  SUBCASE("no labeled negatives forces the negative proxy") {
    auto table = make_table({{0}, {1}, {2}}, "p??");
    ProxyParams params;
    params.prior_pos = 0.5;
    auto [out, decision] = assign_proxy_labels(table, params);
    CHECK(decision.lambda == 1.0);
    CHECK(decision.label == ClassLabel::negative);
    CHECK(out.label(1) == ClassLabel::negative);
    CHECK(out.label(2) == ClassLabel::negative);
  }
  SUBCASE("no labeled positives forces the positive proxy") {
    auto table = make_table({{0}, {1}, {2}}, "n??");
    ProxyParams params;
    params.prior_pos = 0.5;
    auto [out, decision] = assign_proxy_labels(table, params);
    CHECK(decision.lambda == 0.0);
    CHECK(decision.label == ClassLabel::positive);
    CHECK(out.label(1) == ClassLabel::positive);
  }
  SUBCASE("identical inputs give identical decisions") {
    auto table = make_table({{0}, {1}, {0}, {1}, {0}}, "ppn??");
    ProxyParams params;
    params.prior_pos = 0.35;
    auto [out_a, dec_a] = assign_proxy_labels(table, params);
    auto [out_b, dec_b] = assign_proxy_labels(table, params);
    CHECK(dec_a.p_init == dec_b.p_init);
    CHECK(dec_a.p_prior == dec_b.p_prior);
    CHECK(dec_a.lambda == dec_b.lambda);
    CHECK(dec_a.label == dec_b.label);
    CHECK(out_a.decisions == out_b.decisions);
  }
  SUBCASE("lambda is the literal product of the two factors") {
    auto table = make_table({{0}, {1}, {0}, {1}, {0}}, "pnn??");
    ProxyParams params;
    params.prior_pos = 0.3;
    auto [out, decision] = assign_proxy_labels(table, params);
    CHECK(decision.lambda == decision.p_init * decision.p_prior);
  }
}
