#include "granred/table.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "granred/errors.hpp"

namespace granred {
namespace {

std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

bool parse_number(const std::string& s, double& out) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

bool column_is_numeric(const RawTable& raw, std::size_t col) {
  if (raw.n_rows() == 0) return false;
  double v;
  for (std::size_t r = 0; r < raw.n_rows(); ++r) {
    if (!parse_number(raw.cell(r, col), v)) return false;
  }
  return true;
}

}  // namespace

DecisionTable DecisionTable::from_parts(
    std::vector<std::string> attribute_names, std::vector<std::int32_t> codes,
    std::vector<std::int8_t> decisions, std::string decision_name) {
  const std::size_t n_attrs = attribute_names.size();
  const std::size_t n_rows = decisions.size();
  if (n_attrs == 0) throw ParameterError("decision table needs at least one attribute");
  if (codes.size() != n_rows * n_attrs) {
    throw ParameterError("code matrix shape does not match " +
                         std::to_string(n_rows) + " rows x " +
                         std::to_string(n_attrs) + " attributes");
  }
  DecisionTable t;
  t.attribute_names = std::move(attribute_names);
  t.decision_name = std::move(decision_name);
  t.codes = std::move(codes);
  t.decisions = std::move(decisions);
  t.cardinalities.assign(n_attrs, 0);
  for (std::size_t c = 0; c < n_attrs; ++c) {
    std::int32_t max_code = -1;
    for (std::size_t r = 0; r < n_rows; ++r) {
      const std::int32_t v = t.code(r, c);
      if (v < 0) {
        throw ParameterError("negative code in column " + t.attribute_names[c]);
      }
      max_code = std::max(max_code, v);
    }
    std::vector<bool> seen(static_cast<std::size_t>(max_code + 1), false);
    for (std::size_t r = 0; r < n_rows; ++r) seen[static_cast<std::size_t>(t.code(r, c))] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw ParameterError("codes in column " + t.attribute_names[c] +
                           " are not contiguous from 0");
    }
    t.cardinalities[c] = max_code + 1;
  }
  for (std::size_t r = 0; r < n_rows; ++r) {
    if (t.decisions[r] > 1) {
      throw ParameterError("decision value out of range at row " + std::to_string(r));
    }
  }
  return t;
}

std::size_t DecisionTable::labeled_count() const {
  std::size_t n = 0;
  for (std::int8_t d : decisions) n += (d >= 0);
  return n;
}

bool DecisionTable::fully_labeled() const {
  return labeled_count() == n_rows();
}

DecisionTable DecisionTable::restrict_rows(
    std::span<const std::int32_t> rows) const {
  const std::size_t n_attrs_ = n_attrs();
  std::vector<std::int32_t> sub_codes(rows.size() * n_attrs_);
  std::vector<std::int8_t> sub_decisions(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto r = static_cast<std::size_t>(rows[i]);
    if (rows[i] < 0 || r >= n_rows()) {
      throw ParameterError("row index " + std::to_string(rows[i]) +
                           " out of range");
    }
    std::copy_n(codes.begin() + static_cast<std::ptrdiff_t>(r * n_attrs_),
                n_attrs_,
                sub_codes.begin() + static_cast<std::ptrdiff_t>(i * n_attrs_));
    sub_decisions[i] = decisions[r];
  }
  // Re-encode each column densely so cardinalities reflect the subtable.
  for (std::size_t c = 0; c < n_attrs_; ++c) {
    std::unordered_map<std::int32_t, std::int32_t> remap;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto& cell = sub_codes[i * n_attrs_ + c];
      auto [it, inserted] =
          remap.try_emplace(cell, static_cast<std::int32_t>(remap.size()));
      cell = it->second;
    }
  }
  return from_parts(attribute_names, std::move(sub_codes),
                    std::move(sub_decisions), decision_name);
}

RawTable load_csv(std::istream& in, const std::string& missing_token) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty input");
  auto header = split_record(line);
  if (header.size() < 2) {
    throw FormatError("header needs at least one attribute and a decision column");
  }
  RawTable raw;
  raw.decision_name = header.back();
  header.pop_back();
  raw.attribute_names = std::move(header);
  const std::size_t n_fields = raw.n_attrs() + 1;

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_record(line);
    if (fields.size() != n_fields) {
      throw FormatError("line " + std::to_string(line_no) + " has " +
                        std::to_string(fields.size()) + " fields, expected " +
                        std::to_string(n_fields));
    }
    for (std::size_t c = 0; c + 1 < n_fields; ++c) {
      if (fields[c].empty()) {
        throw FormatError("line " + std::to_string(line_no) +
                          " has an empty cell in column " +
                          raw.attribute_names[c]);
      }
      raw.cells.push_back(std::move(fields[c]));
    }
    if (fields.back().empty()) {
      throw FormatError("line " + std::to_string(line_no) +
                        " has an empty decision cell");
    }
    if (fields.back() == missing_token) {
      raw.decisions.emplace_back(std::nullopt);
    } else {
      raw.decisions.emplace_back(std::move(fields.back()));
    }
  }
  return raw;
}

RawTable discretize_equal_frequency(const RawTable& raw, int bins) {
  if (bins < 2) throw ParameterError("bin count must be at least 2");
  RawTable out = raw;
  const std::size_t n = raw.n_rows();
  if (n == 0) return out;

  std::vector<double> values(n);
  std::vector<double> sorted(n);
  for (std::size_t col = 0; col < raw.n_attrs(); ++col) {
    if (!column_is_numeric(raw, col)) continue;
    for (std::size_t r = 0; r < n; ++r) parse_number(raw.cell(r, col), values[r]);
    sorted = values;
    std::sort(sorted.begin(), sorted.end());
    // boundary[k] = smallest value v such that at least (k+1)/bins of the
    // column is <= v; the last boundary is the maximum.
    std::vector<double> boundaries(static_cast<std::size_t>(bins));
    for (int k = 0; k < bins; ++k) {
      const std::size_t rank =
          (static_cast<std::size_t>(k + 1) * n + static_cast<std::size_t>(bins) - 1) /
              static_cast<std::size_t>(bins) -
          1;
      boundaries[static_cast<std::size_t>(k)] = sorted[rank];
    }
    for (std::size_t r = 0; r < n; ++r) {
      int bin = bins - 1;
      for (int k = 0; k < bins; ++k) {
        if (values[r] <= boundaries[static_cast<std::size_t>(k)]) {
          bin = k;
          break;
        }
      }
      out.cell(r, col) = std::to_string(bin);
    }
  }
  return out;
}

RawTable binarize_one_vs_all(const RawTable& raw) {
  std::map<std::string, std::size_t> counts;
  for (const auto& d : raw.decisions) {
    if (d) ++counts[*d];
  }
  if (counts.empty()) {
    throw StateError("cannot binarize: no labeled rows");
  }
  // Majority class over labeled rows; ties go to the smaller name, which
  // std::map's ordering already guarantees on first-seen maxima.
  std::string target = counts.begin()->first;
  std::size_t best = counts.begin()->second;
  for (const auto& [name, cnt] : counts) {
    if (cnt > best) {
      target = name;
      best = cnt;
    }
  }
  RawTable out = raw;
  for (auto& d : out.decisions) {
    if (d) d = (*d == target) ? kPositiveToken : kNegativeToken;
  }
  return out;
}

DecisionTable encode(const RawTable& raw) {
  if (raw.n_rows() == 0) throw StateError("cannot encode an empty table");
  const std::size_t n_attrs = raw.n_attrs();
  std::vector<std::int32_t> codes(raw.n_rows() * n_attrs);
  for (std::size_t c = 0; c < n_attrs; ++c) {
    std::unordered_map<std::string, std::int32_t> lookup;
    for (std::size_t r = 0; r < raw.n_rows(); ++r) {
      auto [it, inserted] = lookup.try_emplace(
          raw.cell(r, c), static_cast<std::int32_t>(lookup.size()));
      codes[r * n_attrs + c] = it->second;
    }
  }
  std::vector<std::int8_t> decisions(raw.n_rows());
  for (std::size_t r = 0; r < raw.n_rows(); ++r) {
    const auto& d = raw.decisions[r];
    if (!d) {
      decisions[r] = -1;
    } else if (*d == kPositiveToken) {
      decisions[r] = 1;
    } else if (*d == kNegativeToken) {
      decisions[r] = 0;
    } else {
      throw FormatError("decision value '" + *d +
                        "' is not binarized; expected pos/neg");
    }
  }
  auto table = DecisionTable::from_parts(raw.attribute_names, std::move(codes),
                                         std::move(decisions), raw.decision_name);
  return table;
}

double prior_positive_probability(const DecisionTable& table) {
  if (table.n_rows() == 0) throw StateError("empty table has no class prior");
  std::size_t pos = 0;
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    if (!table.is_labeled(r)) {
      throw StateError("class prior from data requires every row labeled");
    }
    pos += (table.decisions[r] == 1);
  }
  return static_cast<double>(pos) / static_cast<double>(table.n_rows());
}

void write_csv(const RawTable& raw, std::ostream& out,
               const std::string& missing_token) {
  for (const auto& name : raw.attribute_names) out << name << ',';
  out << raw.decision_name << '\n';
  for (std::size_t r = 0; r < raw.n_rows(); ++r) {
    for (std::size_t c = 0; c < raw.n_attrs(); ++c) out << raw.cell(r, c) << ',';
    out << (raw.decisions[r] ? *raw.decisions[r] : missing_token) << '\n';
  }
}

void write_csv(const DecisionTable& table, std::ostream& out,
               const std::string& missing_token) {
  for (const auto& name : table.attribute_names) out << name << ',';
  out << table.decision_name << '\n';
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    for (std::size_t c = 0; c < table.n_attrs(); ++c) out << table.code(r, c) << ',';
    if (table.decisions[r] < 0) {
      out << missing_token;
    } else {
      out << (table.decisions[r] == 1 ? kPositiveToken : kNegativeToken);
    }
    out << '\n';
  }
}

}  // namespace granred
