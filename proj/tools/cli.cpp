#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "granred/baselines.hpp"
#include "granred/errors.hpp"
#include "granred/harness.hpp"
#include "granred/proxy.hpp"
#include "granred/report.hpp"
#include "granred/table.hpp"

namespace granred::cli {
namespace {

RawTable load_raw(const std::string& path, const std::string& missing) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open input file '" + path + "'");
  return load_csv(in, missing);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write output file '" + path + "'");
  return out;
}

/// Standard preparation pipeline: equal-frequency binning of numeric
/// columns (skipped when bins = 0), one-vs-all binarization of the
/// decision, dense code assignment.
DecisionTable prepare(const RawTable& raw, int bins) {
  const RawTable staged = bins >= 2 ? discretize_equal_frequency(raw, bins) : raw;
  return encode(binarize_one_vs_all(staged));
}

std::string file_stem(const std::string& path) {
  std::string name = path;
  if (const auto slash = name.find_last_of("/\\"); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  if (const auto dot = name.find_last_of('.'); dot != std::string::npos && dot > 0) {
    name = name.substr(0, dot);
  }
  return name;
}

std::vector<std::string> split_csv_list(const std::string& s) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

struct Options {
  std::string input, output, config, missing = "?";
  int bins = 3;
  double epsilon = 0.0002;
  std::int64_t delta = 500;
  double prior_pos = -1.0;  // negative = not given
  double alpha = 1.0;
  double beta = 1.0;
  std::uint64_t seed = 0;
  int folds = 10;
  int repeats = 10;
  int knn_k = 3;
  std::string methods = "gce,gce-l,fisher,laplacian,gt,raw";
  double tolerance = 1e-10;
  bool no_accelerate = false;
  bool enforce_min = false;

  ReduceOptions reduce_options() const {
    return {!no_accelerate, enforce_min, tolerance};
  }
};

int do_discretize(const Options& opt) {
  if (opt.bins < 2) throw ConfigError("--bins must be at least 2 here");
  const RawTable raw = load_raw(opt.input, opt.missing);
  auto out = open_output(opt.output);
  write_csv(discretize_equal_frequency(raw, opt.bins), out, opt.missing);
  return 0;
}

int do_label(const Options& opt) {
  if (opt.prior_pos < 0.0) {
    throw ConfigError("--prior-pos is required for labeling");
  }
  const RawTable raw = binarize_one_vs_all(load_raw(opt.input, opt.missing));
  const DecisionTable table = encode(raw);
  const auto stats = labeled_stats(table);
  const auto [labeled, decision] =
      assign_proxy_labels(table, {opt.epsilon, opt.delta, opt.prior_pos});

  RawTable out_raw = raw;
  for (std::size_t r = 0; r < out_raw.n_rows(); ++r) {
    if (!out_raw.decisions[r]) {
      out_raw.decisions[r] =
          labeled.decisions[r] == 1 ? kPositiveToken : kNegativeToken;
    }
  }
  auto out = open_output(opt.output);
  write_csv(out_raw, out, opt.missing);

  std::cout << "gamma=" << stats.gamma << " p_init=" << decision.p_init
            << " p_prior=" << decision.p_prior << " lambda=" << decision.lambda
            << " label="
            << (decision.label == ClassLabel::positive ? kPositiveToken
                                                       : kNegativeToken)
            << '\n';
  return 0;
}

int do_reduce(const Options& opt) {
  const RawTable raw = load_raw(opt.input, opt.missing);
  DecisionTable table = prepare(raw, opt.bins);

  double prior = opt.prior_pos;
  if (prior < 0.0) {
    if (!table.fully_labeled()) {
      throw ConfigError(
          "--prior-pos is required when the input has unlabeled rows");
    }
    prior = prior_positive_probability(table);
  }
  if (opt.alpha != 1.0) {
    if (!table.fully_labeled()) {
      throw ConfigError("--alpha needs a fully labeled input to split");
    }
    table = make_split(table, {opt.alpha, opt.beta, opt.seed});
  }
  const auto [labeled, decision] =
      assign_proxy_labels(table, {opt.epsilon, opt.delta, prior});
  const ReductTrace trace = reduce(labeled, opt.reduce_options());

  nlohmann::ordered_json params;
  params["input"] = opt.input;
  params["bins"] = opt.bins;
  params["missing_label"] = opt.missing;
  params["epsilon"] = opt.epsilon;
  params["delta"] = opt.delta;
  params["prior_pos"] = prior;
  params["alpha"] = opt.alpha;
  params["beta"] = opt.beta;
  params["seed"] = opt.seed;
  params["accelerate"] = !opt.no_accelerate;
  params["enforce_min"] = opt.enforce_min;
  params["tolerance"] = opt.tolerance;

  auto out = open_output(opt.output);
  out << reduct_report_json(trace, labeled.attribute_names, params).dump(2)
      << '\n';
  return 0;
}

int do_evaluate(const Options& opt) {
  std::ifstream cfg(opt.config);
  if (!cfg) throw ConfigError("cannot open config file '" + opt.config + "'");
  ExperimentConfig config = parse_experiment_config(cfg);
  config.spec.reduce_options = opt.reduce_options();

  const RawTable raw = load_raw(config.dataset_path, opt.missing);
  const DecisionTable table = prepare(raw, opt.bins);
  const ExperimentReport report = run_experiment(table, config.spec);

  auto csv = open_output(opt.output + ".csv");
  write_report_csv(report, csv);
  auto txt = open_output(opt.output + ".txt");
  write_report_summary(report, txt);
  std::cerr << "wall_seconds=" << report.wall_seconds << '\n';
  return 0;
}

int do_compare(const Options& opt) {
  const RawTable raw = load_raw(opt.input, opt.missing);
  const DecisionTable table = prepare(raw, opt.bins);

  ExperimentSpec spec;
  spec.dataset = file_stem(opt.input);
  spec.alphas = {opt.alpha};
  spec.betas = {opt.beta};
  spec.repeats = opt.repeats;
  spec.folds = opt.folds;
  spec.knn_k = opt.knn_k;
  spec.methods = split_csv_list(opt.methods);
  spec.epsilon = opt.epsilon;
  spec.delta = opt.delta;
  spec.seed = opt.seed;
  spec.reduce_options = opt.reduce_options();

  const ExperimentReport report = run_experiment(table, spec);
  write_report_summary(report, std::cout);
  if (!opt.output.empty()) {
    auto csv = open_output(opt.output);
    write_report_csv(report, csv);
  }
  std::cerr << "wall_seconds=" << report.wall_seconds << '\n';
  return 0;
}

}  // namespace

nlohmann::ordered_json reduct_report_json(
    const ReductTrace& trace, const std::vector<std::string>& attribute_names,
    const nlohmann::ordered_json& params) {
  nlohmann::ordered_json doc;
  auto& reduct = doc["reduct"] = nlohmann::ordered_json::array();
  for (auto a : trace.selected) {
    reduct.push_back(attribute_names.at(static_cast<std::size_t>(a)));
  }
  doc["gh_full"] = trace.gh_full;
  auto& rounds = doc["rounds"] = nlohmann::ordered_json::array();
  for (const auto& round : trace.rounds) {
    nlohmann::ordered_json r;
    r["attribute"] =
        attribute_names.at(static_cast<std::size_t>(round.attribute));
    r["sig"] = round.sig;
    r["gh_after"] = round.gh_after;
    r["pruned_examples"] = round.pruned_examples;
    r["pruned_attributes"] = round.pruned_attributes;
    r["stalled"] = round.stalled;
    rounds.push_back(std::move(r));
  }
  doc["minimality_enforced"] = trace.minimality_enforced;
  doc["params"] = params;
  return doc;
}

int run(int argc, const char* const* argv) {
  Options opt;
  CLI::App app{
      "Semi-supervised attribute reduction of categorical decision tables"};
  app.require_subcommand(1);

  const auto add_io = [&](CLI::App* cmd, bool need_output) {
    cmd->add_option("--input", opt.input, "Input CSV path")->required();
    auto* output = cmd->add_option("--output", opt.output, "Output path");
    if (need_output) output->required();
    cmd->add_option("--missing-label", opt.missing,
                    "Decision token marking unlabeled rows")
        ->capture_default_str();
  };
  const auto add_bins = [&](CLI::App* cmd) {
    cmd->add_option("--bins", opt.bins,
                    "Equal-frequency bins for numeric columns (0 = keep as is)")
        ->capture_default_str();
  };
  const auto add_proxy = [&](CLI::App* cmd) {
    cmd->add_option("--epsilon", opt.epsilon, "Proxy boosting factor")
        ->capture_default_str();
    cmd->add_option("--delta", opt.delta, "Proxy truncation threshold")
        ->capture_default_str();
  };
  const auto add_reduce_knobs = [&](CLI::App* cmd) {
    cmd->add_flag("--no-accelerate", opt.no_accelerate,
                  "Disable example and attribute pruning");
    cmd->add_flag("--enforce-min", opt.enforce_min,
                  "Backward pass removing unnecessary reduct members");
    cmd->add_option("--tolerance", opt.tolerance,
                    "Absolute entropy tolerance in bits")
        ->capture_default_str();
  };

  auto* discretize = app.add_subcommand(
      "discretize", "Bin numeric columns into equal-frequency codes");
  add_io(discretize, true);
  add_bins(discretize);

  auto* label = app.add_subcommand(
      "label", "Assign proxy labels to unlabeled rows from the class prior");
  add_io(label, true);
  add_proxy(label);
  label->add_option("--prior-pos", opt.prior_pos,
                    "Believed fraction of positive rows")
      ->required();

  auto* reduce = app.add_subcommand(
      "reduce", "Compute an attribute reduct of a decision table");
  add_io(reduce, true);
  add_bins(reduce);
  add_proxy(reduce);
  add_reduce_knobs(reduce);
  reduce->add_option("--prior-pos", opt.prior_pos,
                     "Believed fraction of positive rows (default: computed "
                     "from a fully labeled input)");
  reduce->add_option("--alpha", opt.alpha,
                     "Label rate; below 1.0 hides labels before reducing")
      ->capture_default_str();
  reduce->add_option("--beta", opt.beta, "Positive ratio of the labeled split")
      ->capture_default_str();
  reduce->add_option("--seed", opt.seed, "Random seed for the split")
      ->capture_default_str();

  auto* evaluate = app.add_subcommand(
      "evaluate", "Run the experiment protocol from a config file");
  evaluate->add_option("--config", opt.config, "Experiment config path")
      ->required();
  evaluate
      ->add_option("--output", opt.output,
                   "Report path prefix (writes <prefix>.csv and <prefix>.txt)")
      ->required();
  evaluate
      ->add_option("--missing-label", opt.missing,
                   "Decision token marking unlabeled rows")
      ->capture_default_str();
  add_bins(evaluate);
  add_reduce_knobs(evaluate);

  auto* compare = app.add_subcommand(
      "compare", "Evaluate attribute selection methods on one dataset");
  add_io(compare, false);
  add_bins(compare);
  add_proxy(compare);
  add_reduce_knobs(compare);
  compare->add_option("--methods", opt.methods, "Comma-separated method list")
      ->capture_default_str();
  compare->add_option("--alpha", opt.alpha, "Label rate of the splits")
      ->capture_default_str();
  compare->add_option("--beta", opt.beta, "Positive ratio of the splits")
      ->capture_default_str();
  compare->add_option("--seed", opt.seed, "Master random seed")
      ->capture_default_str();
  compare->add_option("--folds", opt.folds, "Cross-validation folds")
      ->capture_default_str();
  compare
      ->add_option("--repeats", opt.repeats,
                   "Split repetitions and shuffle repeats")
      ->capture_default_str();
  compare->add_option("--knn-k", opt.knn_k, "Neighbors for classification")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(discretize)) return do_discretize(opt);
    if (app.got_subcommand(label)) return do_label(opt);
    if (app.got_subcommand(reduce)) return do_reduce(opt);
    if (app.got_subcommand(evaluate)) return do_evaluate(opt);
    return do_compare(opt);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace granred::cli
