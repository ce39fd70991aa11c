#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace granred {

/// Binary decision class. Multi-class data must pass through
/// binarize_one_vs_all before it can carry ClassLabel values.
enum class ClassLabel : std::int8_t { negative = 0, positive = 1 };

constexpr const char* kPositiveToken = "pos";
constexpr const char* kNegativeToken = "neg";

/// Pre-discretization staging table: string cells (numeric or categorical)
/// plus a decision column in which rows may be unlabeled.
struct RawTable {
  std::vector<std::string> attribute_names;
  std::string decision_name;
  std::vector<std::string> cells;  // row-major, n_rows() * n_attrs()
  std::vector<std::optional<std::string>> decisions;

  std::size_t n_attrs() const { return attribute_names.size(); }
  std::size_t n_rows() const { return decisions.size(); }
  const std::string& cell(std::size_t row, std::size_t col) const {
    return cells[row * n_attrs() + col];
  }
  std::string& cell(std::size_t row, std::size_t col) {
    return cells[row * n_attrs() + col];
  }
};

/// Fully encoded categorical decision table: dense integer codes per
/// condition attribute and an optional binary label per row. Immutable in
/// practice; all operations return new tables.
struct DecisionTable {
  std::vector<std::string> attribute_names;
  std::string decision_name = "class";
  std::vector<std::int32_t> codes;  // row-major, n_rows * n_attrs
  /// -1 = unlabeled, otherwise the ClassLabel value.
  std::vector<std::int8_t> decisions;
  /// Per-column code count; column c holds codes 0..cardinalities[c]-1.
  std::vector<std::int32_t> cardinalities;

  /// Validates the row/column shape and that every column's codes cover a
  /// contiguous range 0..v, then fills in cardinalities.
  static DecisionTable from_parts(std::vector<std::string> attribute_names,
                                  std::vector<std::int32_t> codes,
                                  std::vector<std::int8_t> decisions,
                                  std::string decision_name = "class");

  std::size_t n_attrs() const { return attribute_names.size(); }
  std::size_t n_rows() const { return decisions.size(); }
  std::int32_t code(std::size_t row, std::size_t col) const {
    return codes[row * n_attrs() + col];
  }
  std::optional<ClassLabel> label(std::size_t row) const {
    if (decisions[row] < 0) return std::nullopt;
    return static_cast<ClassLabel>(decisions[row]);
  }
  bool is_labeled(std::size_t row) const { return decisions[row] >= 0; }
  std::size_t labeled_count() const;
  bool fully_labeled() const;

  /// New table containing only the given rows (order preserved), with every
  /// column re-encoded to dense codes. Attribute identities are unchanged.
  DecisionTable restrict_rows(std::span<const std::int32_t> rows) const;
};

/// Parses CSV text: first record is the header, last column is the decision,
/// decision cells equal to missing_token become unlabeled. Throws
/// FormatError for ragged rows (naming the line), empty cells, or an empty
/// stream.
RawTable load_csv(std::istream& in, const std::string& missing_token = "?");

/// Replaces every all-numeric column by equal-frequency bin codes
/// 0..bins-1. Bin boundaries are the (k/bins)-quantiles of the column's
/// sorted values; a value goes to the lowest bin whose boundary it does not
/// exceed, so ties resolve downward. Categorical columns pass through.
RawTable discretize_equal_frequency(const RawTable& raw, int bins);

/// One-vs-all binarization: the most frequent class among labeled rows maps
/// to "pos", every other class to "neg" (ties broken by the
/// lexicographically smaller class name). Unlabeled rows stay unlabeled.
RawTable binarize_one_vs_all(const RawTable& raw);

/// Densely re-encodes a fully categorical, binarized RawTable: per column,
/// codes are assigned 0..v in order of first appearance. Decision cells must
/// be "pos"/"neg" or unlabeled.
DecisionTable encode(const RawTable& raw);

/// Fraction of positive rows |U_pos|/|U|; requires every row labeled
/// (ground-truth mode). In deployment the value is supplied externally.
double prior_positive_probability(const DecisionTable& table);

void write_csv(const RawTable& raw, std::ostream& out,
               const std::string& missing_token = "?");
void write_csv(const DecisionTable& table, std::ostream& out,
               const std::string& missing_token = "?");

}  // namespace granred
