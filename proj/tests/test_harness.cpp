#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "granred/errors.hpp"
#include "granred/harness.hpp"
#include "granred/report.hpp"
#include "tables.hpp"

using namespace granred;
using granred::testing::make_table;

namespace {

/// n_pos positive rows followed by n_neg negative rows, one attribute that
/// equals the class.
DecisionTable block_table(int n_pos, int n_neg) {
  std::vector<std::vector<std::int32_t>> rows;
  std::string labels;
  for (int i = 0; i < n_pos; ++i) {
    rows.push_back({0});
    labels += 'p';
  }
  for (int i = 0; i < n_neg; ++i) {
    rows.push_back({1});
    labels += 'n';
  }
  return make_table(rows, labels);
}

int count_labeled(const DecisionTable& t, ClassLabel label) {
  int n = 0;
  for (std::size_t r = 0; r < t.n_rows(); ++r) {
    n += (t.label(r) == label);
  }
  return n;
}

}  // namespace

TEST_CASE("make_split draws the documented counts") {
  SUBCASE("balanced thousand-row table") {
    auto t = block_table(500, 500);
    auto split = make_split(t, {0.1, 0.5, 7});
    CHECK(count_labeled(split, ClassLabel::positive) == 25);
    CHECK(count_labeled(split, ClassLabel::negative) == 75);
    CHECK(split.n_rows() - split.labeled_count() == 900);
  }
  SUBCASE("labels kept by the split match the ground truth") {
    auto t = block_table(30, 70);
    auto split = make_split(t, {0.2, 1.0, 3});
    for (std::size_t r = 0; r < split.n_rows(); ++r) {
      if (split.is_labeled(r)) CHECK(split.decisions[r] == t.decisions[r]);
    }
  }
  SUBCASE("full label rate returns the table unchanged") {
    auto t = block_table(5, 5);
    auto split = make_split(t, {1.0, 1.0, 9});
    CHECK(split.decisions == t.decisions);
  }
  SUBCASE("same seed, same split") {
    auto t = block_table(40, 60);
    auto a = make_split(t, {0.1, 1.0, 123});
    auto b = make_split(t, {0.1, 1.0, 123});
    CHECK(a.decisions == b.decisions);
    auto c = make_split(t, {0.1, 1.0, 124});
    CHECK(a.decisions != c.decisions);
  }
  SUBCASE("infeasible counts name the violated bound") {
    auto t = block_table(50, 50);
    CHECK_THROWS_WITH_AS(make_split(t, {0.04, 0.2, 1}),
                         doctest::Contains("positive count"), SplitError);
    CHECK_THROWS_WITH_AS(make_split(t, {0.04, 2.0, 1}),
                         doctest::Contains("negative count"), SplitError);
    CHECK_THROWS_WITH_AS(make_split(t, {0.9, 1.5, 1}),
                         doctest::Contains("exceeds"), SplitError);
  }
  SUBCASE("parameter validation") {
    auto t = block_table(5, 5);
    CHECK_THROWS_AS(make_split(t, {0.0, 1.0, 1}), ParameterError);
    CHECK_THROWS_AS(make_split(t, {1.2, 1.0, 1}), ParameterError);
    CHECK_THROWS_AS(make_split(t, {0.5, -1.0, 1}), ParameterError);
    auto partial = make_table({{0}, {1}}, "p?");
    CHECK_THROWS_AS(make_split(partial, {0.5, 1.0, 1}), StateError);
  }
}

TEST_CASE("knn_classify") {
  SUBCASE("unanimous neighborhood") {
    auto t = make_table({{0, 0}, {0, 0}, {0, 0}, {0, 0}}, "ppp?");
    std::vector<std::int32_t> train{0, 1, 2}, query{3};
    auto out = knn_classify(t, {0, 1}, train, query, 3);
    CHECK(out == std::vector<ClassLabel>{ClassLabel::positive});
  }
  SUBCASE("k of one takes the nearest row") {
    auto t = make_table({{0, 0}, {1, 1}, {0, 1}}, "pn?");
    std::vector<std::int32_t> train{0, 1}, query{2};
    CHECK(knn_classify(t, {0, 1}, train, query, 1).front() ==
          ClassLabel::positive);  // ties in distance go to the lower index
  }
  SUBCASE("majority among three mixed neighbors") {
    // query row 4 sits at distances 0,1,1,2 from the training rows
    auto t = make_table({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 0}}, "pnnp?");
    std::vector<std::int32_t> train{0, 1, 2, 3}, query{4};
    CHECK(knn_classify(t, {0, 1}, train, query, 3).front() ==
          ClassLabel::negative);
  }
  SUBCASE("vote tie falls back to the single nearest") {
    auto t = make_table({{0, 0}, {0, 1}, {1, 1}, {0, 0}}, "pnn?");
    std::vector<std::int32_t> train{0, 1}, query{3};
    CHECK(knn_classify(t, {0, 1}, train, query, 2).front() ==
          ClassLabel::positive);
  }
  SUBCASE("k larger than the training set clamps") {
    auto t = make_table({{0}, {0}, {1}}, "pp?");
    std::vector<std::int32_t> train{0, 1}, query{2};
    CHECK(knn_classify(t, {0}, train, query, 9).front() ==
          ClassLabel::positive);
  }
  SUBCASE("preconditions") {
    auto t = make_table({{0}, {1}}, "p?");
    std::vector<std::int32_t> train{0}, query{1}, none;
    CHECK_THROWS_AS(knn_classify(t, {}, train, query, 1), ParameterError);
    CHECK_THROWS_AS(knn_classify(t, {0}, none, query, 1), ParameterError);
    CHECK_THROWS_AS(knn_classify(t, {0}, train, query, 0), ParameterError);
    CHECK_THROWS_AS(knn_classify(t, {7}, train, query, 1), ParameterError);
    std::vector<std::int32_t> unlabeled_train{1};
    CHECK_THROWS_AS(knn_classify(t, {0}, unlabeled_train, query, 1), StateError);
  }
}

TEST_CASE("cross_validate") {
  SUBCASE("separable data scores perfectly") {
    auto t = block_table(10, 10);
    CHECK(cross_validate(t, {0}, 10, 3, 99, 1) == 1.0);
  }
  SUBCASE("deterministic for a fixed seed") {
    auto t = make_table(
        {{0, 1}, {1, 0}, {0, 0}, {1, 1}, {0, 1}, {1, 0}, {1, 1}, {0, 0}},
        "ppnnpnpn");
    auto a = cross_validate(t, {0, 1}, 4, 5, 2024, 3);
    CHECK(a == cross_validate(t, {0, 1}, 4, 5, 2024, 3));
    CHECK(a >= 0.0);
    CHECK(a <= 1.0);
  }
  SUBCASE("preconditions") {
    auto t = block_table(3, 3);
    CHECK_THROWS_AS(cross_validate(t, {}, 2, 1, 0), ParameterError);
    CHECK_THROWS_AS(cross_validate(t, {0}, 1, 1, 0), ParameterError);
    CHECK_THROWS_AS(cross_validate(t, {0}, 7, 1, 0), ParameterError);
    CHECK_THROWS_AS(cross_validate(t, {0}, 2, 0, 0), ParameterError);
    auto partial = make_table({{0}, {1}}, "p?");
    CHECK_THROWS_AS(cross_validate(partial, {0}, 2, 1, 0), StateError);
  }
}

TEST_CASE("run_experiment") {
  // 40 rows, the first attribute mirrors the class, the second is noise
  std::vector<std::vector<std::int32_t>> rows;
  std::string labels;
  for (int i = 0; i < 40; ++i) {
    const bool pos = i < 16;
    rows.push_back({pos ? 0 : 1, i % 3});
    labels += pos ? 'p' : 'n';
  }
  auto table = make_table(rows, labels);

  ExperimentSpec spec;
  spec.dataset = "toy";
  spec.alphas = {0.3};
  spec.betas = {1.0};
  spec.repeats = 2;
  spec.folds = 4;
  spec.knn_k = 3;

  SUBCASE("raw method always reports the full attribute set") {
    spec.methods = {"raw"};
    auto report = run_experiment(table, spec);
    REQUIRE(report.cells.size() == 2);
    for (const auto& cell : report.cells) {
      CHECK(cell.reduct_size == table.n_attrs());
      CHECK(cell.method == "raw");
    }
  }
  SUBCASE("cells arrive in grid order regardless of scheduling") {
    spec.alphas = {0.3, 0.5};
    spec.methods = {"gce", "raw"};
    auto report = run_experiment(table, spec);
    REQUIRE(report.cells.size() == 8);
    std::size_t i = 0;
    for (double alpha : spec.alphas) {
      for (int rep = 0; rep < spec.repeats; ++rep) {
        for (const auto& method : spec.methods) {
          CHECK(report.cells[i].alpha == alpha);
          CHECK(report.cells[i].repeat == rep);
          CHECK(report.cells[i].method == method);
          ++i;
        }
      }
    }
  }
  SUBCASE("all methods produce sane cells") {
    spec.methods = {"gce", "gce-l", "fisher", "laplacian", "gt", "raw"};
    auto report = run_experiment(table, spec);
    REQUIRE(report.cells.size() == 12);
    std::size_t gce_size = 0;
    for (const auto& cell : report.cells) {
      CHECK(cell.accuracy >= 0.0);
      CHECK(cell.accuracy <= 1.0);
      CHECK(cell.reduct_size >= 1);
      CHECK(cell.reduct_size <= table.n_attrs());
      if (cell.method == "gce") gce_size = cell.reduct_size;
      // size-matched comparisons ride on the proxy reduct's size
      if (cell.method == "fisher" || cell.method == "laplacian") {
        CHECK(cell.reduct_size == gce_size);
      }
    }
  }
  SUBCASE("identical specs give identical reports") {
    spec.methods = {"gce", "gce-l"};
    auto a = run_experiment(table, spec);
    auto b = run_experiment(table, spec);
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
      CHECK(a.cells[i].accuracy == b.cells[i].accuracy);
      CHECK(a.cells[i].reduct_size == b.cells[i].reduct_size);
    }
  }
  SUBCASE("failures carry the grid position") {
    spec.betas = {40.0};  // demands more labeled positives than exist
    spec.methods = {"raw"};
    CHECK_THROWS_WITH_AS(run_experiment(table, spec),
                         doctest::Contains("toy alpha=0.3 beta=40"), Error);
  }
  SUBCASE("unknown methods are rejected up front") {
    spec.methods = {"svm"};
    CHECK_THROWS_AS(run_experiment(table, spec), ParameterError);
  }
}

TEST_CASE("report writers") {
  ExperimentReport report;
  report.cells.push_back({"toy", 0.1, 0.5, 0, "gce", 3, 0.875});
  report.cells.push_back({"toy", 0.1, 0.5, 1, "gce", 5, 0.75});
  report.cells.push_back({"toy", 0.1, 0.5, 0, "raw", 13, 0.5});
  report.wall_seconds = 123.0;

  SUBCASE("csv layout") {
    std::ostringstream out;
    write_report_csv(report, out);
    CHECK(out.str() ==
          "dataset,alpha,beta,repeat,method,reduct_size,accuracy\n"
          "toy,0.1,0.5,0,gce,3,0.875000\n"
          "toy,0.1,0.5,1,gce,5,0.750000\n"
          "toy,0.1,0.5,0,raw,13,0.500000\n");
  }
  SUBCASE("summary aggregates per method in first-appearance order") {
    std::ostringstream out;
    write_report_summary(report, out);
    const auto text = out.str();
    CHECK(text.find("min") != std::string::npos);
    CHECK(text.find("gce") != std::string::npos);
    CHECK(text.find("4.00") != std::string::npos);    // avg of 3 and 5
    CHECK(text.find("0.8125") != std::string::npos);  // mean accuracy
    CHECK(text.find("gce") < text.find("raw"));
    // wall time stays off the reports
    CHECK(text.find("123") == std::string::npos);
  }
  SUBCASE("writers are deterministic") {
    std::ostringstream a, b;
    write_report_csv(report, a);
    write_report_csv(report, b);
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("experiment config parsing") {
  SUBCASE("full config") {
    std::istringstream in(
        "# comment line\n"
        "dataset = data/wine.csv\n"
        "alphas = 0.05, 0.1\n"
        "betas = 0.5,1.0,1.5\n"
        "repeats = 3\n"
        "folds = 5\n"
        "knn_k = 7\n"
        "methods = gce, gt\n"
        "epsilon = 0.001\n"
        "delta = 100\n"
        "seed = 99  # trailing comment\n");
    auto config = parse_experiment_config(in);
    CHECK(config.dataset_path == "data/wine.csv");
    CHECK(config.spec.dataset == "wine");
    CHECK(config.spec.alphas == std::vector<double>{0.05, 0.1});
    CHECK(config.spec.betas == std::vector<double>{0.5, 1.0, 1.5});
    CHECK(config.spec.repeats == 3);
    CHECK(config.spec.folds == 5);
    CHECK(config.spec.knn_k == 7);
    CHECK(config.spec.methods == std::vector<std::string>{"gce", "gt"});
    CHECK(config.spec.epsilon == 0.001);
    CHECK(config.spec.delta == 100);
    CHECK(config.spec.seed == 99);
  }
  SUBCASE("defaults fill the gaps") {
    std::istringstream in("dataset = d.csv\n");
    auto config = parse_experiment_config(in);
    CHECK(config.spec.alphas == std::vector<double>{0.1});
    CHECK(config.spec.betas == std::vector<double>{1.0});
    CHECK(config.spec.repeats == 10);
    CHECK(config.spec.folds == 10);
    CHECK(config.spec.knn_k == 3);
    CHECK(config.spec.methods == std::vector<std::string>{"gce", "gce-l"});
    CHECK(config.spec.epsilon == 0.0002);
    CHECK(config.spec.delta == 500);
  }
  SUBCASE("rejects unknown keys, bad values and a missing dataset") {
    std::istringstream unknown("dataset=d.csv\ncolor = red\n");
    CHECK_THROWS_WITH_AS(parse_experiment_config(unknown),
                         doctest::Contains("color"), ConfigError);
    std::istringstream bad("dataset=d.csv\nrepeats = many\n");
    CHECK_THROWS_AS(parse_experiment_config(bad), ConfigError);
    std::istringstream missing("repeats = 3\n");
    CHECK_THROWS_AS(parse_experiment_config(missing), ConfigError);
    std::istringstream noeq("dataset=d.csv\njust words\n");
    CHECK_THROWS_AS(parse_experiment_config(noeq), ConfigError);
  }
}
