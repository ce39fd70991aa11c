#include "granred/report.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "granred/errors.hpp"

namespace granred {
namespace {

std::string format_rate(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

double parse_double(const std::string& key, const std::string& value) {
  double out;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("value '" + value + "' for " + key + " is not a number");
  }
  return out;
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  std::int64_t out;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("value '" + value + "' for " + key +
                      " is not an integer");
  }
  return out;
}

}  // namespace

void write_report_csv(const ExperimentReport& report, std::ostream& out) {
  out << "dataset,alpha,beta,repeat,method,reduct_size,accuracy\n";
  for (const auto& cell : report.cells) {
    out << cell.dataset << ',' << format_rate(cell.alpha) << ','
        << format_rate(cell.beta) << ',' << cell.repeat << ',' << cell.method
        << ',' << cell.reduct_size << ',' << std::fixed << std::setprecision(6)
        << cell.accuracy << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

void write_report_summary(const ExperimentReport& report, std::ostream& out) {
  struct Aggregate {
    std::size_t size_min = 0, size_max = 0;
    double size_sum = 0.0, accuracy_sum = 0.0;
    std::size_t count = 0;
  };
  // Key preserves first-appearance order of (alpha, beta, method) groups.
  std::vector<std::string> order;
  std::map<std::string, Aggregate> groups;
  for (const auto& cell : report.cells) {
    std::ostringstream key;
    key << cell.dataset << '\t' << format_rate(cell.alpha) << '\t'
        << format_rate(cell.beta) << '\t' << cell.method;
    auto [it, inserted] = groups.try_emplace(key.str());
    if (inserted) order.push_back(key.str());
    auto& agg = it->second;
    if (agg.count == 0) {
      agg.size_min = agg.size_max = cell.reduct_size;
    } else {
      agg.size_min = std::min(agg.size_min, cell.reduct_size);
      agg.size_max = std::max(agg.size_max, cell.reduct_size);
    }
    agg.size_sum += static_cast<double>(cell.reduct_size);
    agg.accuracy_sum += cell.accuracy;
    agg.count += 1;
  }

  out << std::left << std::setw(12) << "dataset" << std::setw(8) << "alpha"
      << std::setw(8) << "beta" << std::setw(11) << "method" << std::setw(6)
      << "min" << std::setw(6) << "max" << std::setw(8) << "avg"
      << "accuracy" << '\n';
  for (const auto& key : order) {
    const auto& agg = groups.at(key);
    std::istringstream fields(key);
    std::string dataset, alpha, beta, method;
    std::getline(fields, dataset, '\t');
    std::getline(fields, alpha, '\t');
    std::getline(fields, beta, '\t');
    std::getline(fields, method, '\t');
    out << std::left << std::setw(12) << dataset << std::setw(8) << alpha
        << std::setw(8) << beta << std::setw(11) << method << std::setw(6)
        << agg.size_min << std::setw(6) << agg.size_max << std::setw(8)
        << std::fixed << std::setprecision(2)
        << agg.size_sum / static_cast<double>(agg.count)
        << std::setprecision(4)
        << agg.accuracy_sum / static_cast<double>(agg.count) << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

ExperimentConfig parse_experiment_config(std::istream& in) {
  ExperimentConfig config;
  config.spec.alphas = {0.1};
  config.spec.betas = {1.0};
  config.spec.methods = {"gce", "gce-l"};

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        " is not a key=value pair");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) {
      throw ConfigError("key '" + key + "' has an empty value");
    }

    if (key == "dataset") {
      config.dataset_path = value;
    } else if (key == "alphas") {
      config.spec.alphas.clear();
      for (const auto& item : split_list(value)) {
        config.spec.alphas.push_back(parse_double(key, item));
      }
    } else if (key == "betas") {
      config.spec.betas.clear();
      for (const auto& item : split_list(value)) {
        config.spec.betas.push_back(parse_double(key, item));
      }
    } else if (key == "repeats") {
      config.spec.repeats = static_cast<int>(parse_int(key, value));
    } else if (key == "folds") {
      config.spec.folds = static_cast<int>(parse_int(key, value));
    } else if (key == "knn_k") {
      config.spec.knn_k = static_cast<int>(parse_int(key, value));
    } else if (key == "methods") {
      config.spec.methods = split_list(value);
    } else if (key == "epsilon") {
      config.spec.epsilon = parse_double(key, value);
    } else if (key == "delta") {
      config.spec.delta = parse_int(key, value);
    } else if (key == "seed") {
      config.spec.seed = static_cast<std::uint64_t>(parse_int(key, value));
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  if (config.dataset_path.empty()) {
    throw ConfigError("config must set dataset=<path>");
  }

  // Report label: file stem of the dataset path.
  std::string name = config.dataset_path;
  if (const auto slash = name.find_last_of("/\\"); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  if (const auto dot = name.find_last_of('.'); dot != std::string::npos && dot > 0) {
    name = name.substr(0, dot);
  }
  config.spec.dataset = name;
  return config;
}

}  // namespace granred
