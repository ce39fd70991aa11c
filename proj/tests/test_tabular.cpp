#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "granred/errors.hpp"
#include "granred/table.hpp"
#include "tables.hpp"

using namespace granred;
using granred::testing::make_table;
using granred::testing::raw_from_csv;

TEST_CASE("load_csv parses header, cells and missing decisions") {
  auto raw = raw_from_csv("a,b,class\n1,x,pos\n2,y,?\n3,z,neg\n");
  CHECK(raw.n_rows() == 3);
  CHECK(raw.n_attrs() == 2);
  CHECK(raw.attribute_names == std::vector<std::string>{"a", "b"});
  CHECK(raw.decision_name == "class");
  CHECK(raw.cell(1, 1) == "y");
  CHECK(raw.decisions[0].value() == "pos");
  CHECK_FALSE(raw.decisions[1].has_value());
  CHECK(raw.decisions[2].value() == "neg");
}

TEST_CASE("load_csv respects a custom missing token") {
  auto raw = raw_from_csv("a,class\n1,NA\n2,pos\n", "NA");
  CHECK_FALSE(raw.decisions[0].has_value());
  CHECK(raw.decisions[1].has_value());
}

TEST_CASE("load_csv rejects ragged rows naming the line") {
  std::istringstream in("a,b,c,d,class\n1,2,3,pos\n");
  CHECK_THROWS_WITH_AS(load_csv(in), doctest::Contains("line 2"), FormatError);
}

TEST_CASE("load_csv rejects empty cells and empty input") {
  std::istringstream blank("");
  CHECK_THROWS_AS(load_csv(blank), FormatError);
  std::istringstream cell("a,class\n,pos\n");
  CHECK_THROWS_AS(load_csv(cell), FormatError);
}

TEST_CASE("load_csv accepts a header-only file") {
  auto raw = raw_from_csv("a,b,class\n");
  CHECK(raw.n_rows() == 0);
  CHECK(raw.n_attrs() == 2);
}

TEST_CASE("equal-frequency discretization") {
  SUBCASE("exact tertiles") {
    auto raw = raw_from_csv("a,class\n1,pos\n2,pos\n3,pos\n4,neg\n5,neg\n6,neg\n");
    auto out = discretize_equal_frequency(raw, 3);
    std::vector<std::string> col;
    for (std::size_t r = 0; r < out.n_rows(); ++r) col.push_back(out.cell(r, 0));
    CHECK(col == std::vector<std::string>{"0", "0", "1", "1", "2", "2"});
  }
  SUBCASE("constant column collapses to one bin") {
    auto raw = raw_from_csv("a,class\n7,pos\n7,pos\n7,neg\n7,neg\n");
    auto out = discretize_equal_frequency(raw, 3);
    for (std::size_t r = 0; r < out.n_rows(); ++r) CHECK(out.cell(r, 0) == "0");
  }
  SUBCASE("ties resolve to the lower bin") {
    auto raw = raw_from_csv("a,class\n1,pos\n1,pos\n1,neg\n2,neg\n");
    auto out = discretize_equal_frequency(raw, 2);
    std::vector<std::string> col;
    for (std::size_t r = 0; r < out.n_rows(); ++r) col.push_back(out.cell(r, 0));
    CHECK(col == std::vector<std::string>{"0", "0", "0", "1"});
  }
  SUBCASE("categorical columns pass through untouched") {
    auto raw = raw_from_csv("a,b,class\nred,1,pos\nblue,2,neg\n");
    auto out = discretize_equal_frequency(raw, 2);
    CHECK(out.cell(0, 0) == "red");
    CHECK(out.cell(1, 0) == "blue");
    CHECK(out.cell(0, 1) == "0");
    CHECK(out.cell(1, 1) == "1");
  }
  SUBCASE("bins below 2 are rejected") {
    auto raw = raw_from_csv("a,class\n1,pos\n2,neg\n");
    CHECK_THROWS_AS(discretize_equal_frequency(raw, 1), ParameterError);
  }
  SUBCASE("distinct values spread evenly across bins") {
    std::string text = "a,class\n";
    for (int i = 0; i < 11; ++i)
      text += std::to_string(i * 3 + 1) + (i % 2 ? ",pos\n" : ",neg\n");
    for (int bins = 2; bins <= 5; ++bins) {
      auto out = discretize_equal_frequency(raw_from_csv(text), bins);
      std::vector<int> counts(bins, 0);
      for (std::size_t r = 0; r < out.n_rows(); ++r)
        counts[std::stoi(out.cell(r, 0))] += 1;
      auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
      CHECK(*hi - *lo <= 1);
    }
  }
}

TEST_CASE("one-vs-all binarization") {
  SUBCASE("majority class becomes positive") {
    auto raw = raw_from_csv("x,class\n1,a\n2,a\n3,a\n4,b\n5,b\n6,c\n");
    auto out = binarize_one_vs_all(raw);
    std::vector<std::string> want{"pos", "pos", "pos", "neg", "neg", "neg"};
    for (std::size_t r = 0; r < out.n_rows(); ++r)
      CHECK(out.decisions[r].value() == want[r]);
  }
  SUBCASE("frequency ties go to the lexicographically smaller name") {
    auto raw = raw_from_csv("x,class\n1,b\n2,b\n3,a\n4,a\n");
    auto out = binarize_one_vs_all(raw);
    CHECK(out.decisions[2].value() == "pos");
    CHECK(out.decisions[0].value() == "neg");
  }
  SUBCASE("already binary labels keep their row split") {
    auto raw = raw_from_csv("x,class\n1,pos\n2,pos\n3,neg\n");
    auto out = binarize_one_vs_all(raw);
    CHECK(out.decisions[0].value() == "pos");
    CHECK(out.decisions[2].value() == "neg");
  }
  SUBCASE("unlabeled rows stay unlabeled and counts ignore them") {
    auto raw = raw_from_csv("x,class\n1,a\n2,?\n3,b\n4,b\n");
    auto out = binarize_one_vs_all(raw);
    CHECK_FALSE(out.decisions[1].has_value());
    CHECK(out.decisions[3].value() == "pos");
  }
  SUBCASE("all rows unlabeled is an error") {
    auto raw = raw_from_csv("x,class\n1,?\n2,?\n");
    CHECK_THROWS_AS(binarize_one_vs_all(raw), StateError);
  }
}

TEST_CASE("encode assigns dense codes by first appearance") {
  auto raw = raw_from_csv("a,b,class\nx,0,pos\ny,2,neg\nx,0,?\n");
  auto table = encode(raw);
  CHECK(table.code(0, 0) == 0);
  CHECK(table.code(1, 0) == 1);
  CHECK(table.code(2, 0) == 0);
  CHECK(table.code(0, 1) == 0);
  CHECK(table.code(1, 1) == 1);
  CHECK(table.cardinalities == std::vector<std::int32_t>{2, 2});
  CHECK(table.label(0) == ClassLabel::positive);
  CHECK(table.label(1) == ClassLabel::negative);
  CHECK_FALSE(table.label(2).has_value());
  CHECK(table.labeled_count() == 2);
  CHECK_FALSE(table.fully_labeled());
}

TEST_CASE("encode rejects a table without rows") {
  CHECK_THROWS_AS(encode(raw_from_csv("a,class\n")), StateError);
}

TEST_CASE("encode rejects decision tokens other than pos/neg") {
  auto raw = raw_from_csv("a,class\n1,maybe\n");
  CHECK_THROWS_AS(encode(raw), FormatError);
}

TEST_CASE("prior positive probability") {
  CHECK(prior_positive_probability(make_table({{0}, {1}}, "pp")) == 1.0);
  CHECK(prior_positive_probability(make_table({{0}, {1}, {0}, {1}}, "ppnn")) == 0.5);
  CHECK_THROWS_AS(prior_positive_probability(make_table({{0}, {1}}, "p?")),
                  StateError);
}

TEST_CASE("from_parts validates shape and code density") {
  CHECK_THROWS_AS(DecisionTable::from_parts({"a1"}, {0, 1, 2}, {1, 0}),
                  ParameterError);
  // column skips code 1
  CHECK_THROWS_AS(DecisionTable::from_parts({"a1"}, {0, 2}, {1, 0}),
                  ParameterError);
}

TEST_CASE("restrict_rows keeps order and re-encodes densely") {
  auto table = make_table({{0, 0}, {1, 1}, {2, 0}, {1, 2}}, "ppnn");
  std::vector<std::int32_t> keep{1, 3};
  auto sub = table.restrict_rows(keep);
  CHECK(sub.n_rows() == 2);
  CHECK(sub.code(0, 0) == 0);  // code 1 re-encoded to 0
  CHECK(sub.code(1, 0) == 0);
  CHECK(sub.code(0, 1) == 0);
  CHECK(sub.code(1, 1) == 1);
  CHECK(sub.cardinalities == std::vector<std::int32_t>{1, 2});
  CHECK(sub.label(0) == ClassLabel::positive);
  CHECK(sub.label(1) == ClassLabel::negative);
}

TEST_CASE("ingestion pipeline is deterministic") {
  const std::string text =
      "a,b,class\n1.5,x,red\n2.5,y,blue\n0.5,x,red\n3.5,z,?\n2.0,y,blue\n";
  auto run = [&] {
    auto table = encode(binarize_one_vs_all(
        discretize_equal_frequency(raw_from_csv(text), 2)));
    std::ostringstream out;
    write_csv(table, out);
    return out.str();
  };
  auto first = run();
  CHECK(first == run());
  CHECK(first.find('?') != std::string::npos);
}

TEST_CASE("csv writers round-trip a raw table") {
  auto raw = raw_from_csv("a,b,class\n1,x,pos\n2,y,?\n");
  std::ostringstream out;
  write_csv(raw, out);
  auto again = raw_from_csv(out.str());
  CHECK(again.cells == raw.cells);
  CHECK(again.decisions == raw.decisions);
  CHECK(again.attribute_names == raw.attribute_names);
}
