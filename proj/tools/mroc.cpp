// mroc: multiclass ROC evaluation with Gini-weighted aggregation.
//
//   mroc evaluate  --input scores.csv [--plots] [--bootstrap] ...
//   mroc compare   --input a.csv --input b.csv [--names a,b] ...
//   mroc bootstrap --input scores.csv --replicates 1000 --seed 42 ...
//   mroc version
//
// Exit status: 0 success, 1 runtime or numerical failure, 2 input or
// configuration error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "mroc/mroc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitInput = 2;

struct CliOptions {
  mroc::RunConfig cfg;
  std::string delimiter = "comma";
  std::vector<std::string> names;
};

void add_common_flags(CLI::App* cmd, CliOptions& o, bool multiple_inputs) {
  auto* input = cmd->add_option("--input", o.cfg.inputs, multiple_inputs ? "Score files (repeat per model)" : "Score file")
                    ->required();
  if (!multiple_inputs) input->expected(1);
  cmd->add_option("--labels", o.cfg.labels, "Separate file holding the label column");
  cmd->add_option("--label-col", o.cfg.label_col, "Name of the label column")->capture_default_str();
  cmd->add_option("--score-cols", o.cfg.score_cols, "Score columns in class order (default: every score_<class>)")
      ->delimiter(',');
  cmd->add_option("--delimiter", o.delimiter, "Field delimiter")
      ->check(CLI::IsMember({"comma", "tab"}))
      ->capture_default_str();
  cmd->add_option("--grid-size", o.cfg.grid_size, "Threshold grid size for the aggregated curve")
      ->capture_default_str();
  cmd->add_option("--ridge", o.cfg.ridge, "Ridge added to the correlation matrix")->capture_default_str();
  cmd->add_flag("--bootstrap", o.cfg.bootstrap, "Compute bootstrap confidence bands");
  cmd->add_option("--replicates", o.cfg.replicates, "Bootstrap replicates (>= 10)")->capture_default_str();
  cmd->add_option("--level", o.cfg.level, "Confidence level of the band")->capture_default_str();
  cmd->add_option("--seed", o.cfg.seed, "Seed for every random draw")->capture_default_str();
  cmd->add_option("--band-points", o.cfg.band_points, "FPR grid points of the band")->capture_default_str();
  cmd->add_option("--threads", o.cfg.threads, "Bootstrap worker threads (0: all cores)");
  cmd->add_option("--out-dir", o.cfg.out_dir, "Output directory")->capture_default_str();
  cmd->add_flag("--plots", o.cfg.plots, "Write SVG figures");
}

void finalize(CliOptions& o) { o.cfg.delimiter = o.delimiter == "tab" ? '\t' : ','; }

std::string fixed(double v, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void print_auc_table(const mroc::EvaluationReport& r) {
  const auto& t = r.auc_table;
  std::printf("%-22s %s\n", "metric", "value");
  std::printf("%-22s %s\n", "Gini AUC", fixed(t.gini_auc).c_str());
  std::printf("%-22s %s\n", "Macro AUC", fixed(t.macro_auc).c_str());
  std::printf("%-22s %s\n", "Micro AUC", fixed(t.micro_auc).c_str());
  std::printf("%-22s %s\n", "M-measure", fixed(t.m_measure).c_str());
  std::printf("\n%-22s %-8s %s\n", "class", "weight", "AUC");
  for (std::size_t i = 0; i < r.dataset.classes.size(); ++i) {
    const auto& a = t.per_class_auc[i];
    std::printf("%-22s %-8s %s\n", r.dataset.classes[i].c_str(), fixed(r.gini.weights[i]).c_str(),
                a ? fixed(*a).c_str() : "empty");
  }
  std::printf("\nG1 = %s, (G1+1)/2 = %s\n", fixed(r.gini.aggregate, 6).c_str(),
              t.gini_auc_from_g1 ? fixed(*t.gini_auc_from_g1, 6).c_str() : "n/a (G1 outside [-1,1])");
  if (!r.aggregation.dropped.empty())
    std::printf("dropped from aggregation: %zu class(es) without positives or negatives\n",
                r.aggregation.dropped.size());
  if (r.bootstrap)
    std::printf("bootstrap: %zu replicates, AUC standard error %s, %.0f%% band\n", r.bootstrap->band.replicates,
                fixed(r.bootstrap->auc_std_error, 6).c_str(), r.bootstrap->band.level * 100.0);
}

int cmd_evaluate(CliOptions& o) {
  finalize(o);
  o.cfg.validate();
  const auto data = mroc::load_input(o.cfg);
  const auto report = mroc::evaluate_dataset(data, o.cfg);
  mroc::write_outputs(report, o.cfg.out_dir, o.cfg.plots);
  print_auc_table(report);
  std::printf("\nreport: %s\n", (std::filesystem::path(o.cfg.out_dir) / "report.json").string().c_str());
  return kExitOk;
}

int cmd_compare(CliOptions& o) {
  finalize(o);
  o.cfg.validate();
  const auto& inputs = o.cfg.inputs;
  if (inputs.size() < 2) throw mroc::ConfigError("cli", "compare needs at least two score files");
  if (!o.names.empty() && o.names.size() != inputs.size())
    throw mroc::ConfigError("cli", "--names must list one name per input");

  std::vector<std::string> names;
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::string base = o.names.empty() ? std::filesystem::path(inputs[i]).stem().string() : o.names[i];
    const int count = ++seen[base];
    names.push_back(count == 1 ? base : base + "_" + std::to_string(count));
  }

  std::vector<mroc::EvaluationDataset> datasets;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    datasets.push_back(mroc::load_input(o.cfg, i));
    if (i > 0) mroc::require_comparable(datasets[0], datasets[i], inputs[0], inputs[i]);
  }

  std::vector<mroc::ComparisonRow> rows;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    auto cfg = o.cfg;
    cfg.inputs = {inputs[i]};
    cfg.out_dir = (std::filesystem::path(o.cfg.out_dir) / mroc::safe_name(names[i])).string();
    const auto report = mroc::evaluate_dataset(datasets[i], cfg);
    mroc::write_outputs(report, cfg.out_dir, cfg.plots);
    rows.push_back({names[i], report.auc_table.gini_auc, report.auc_table.macro_auc, report.auc_table.micro_auc,
                    report.auc_table.m_measure});
  }
  const auto csv = (std::filesystem::path(o.cfg.out_dir) / "comparison.csv").string();
  mroc::write_text_file(csv, mroc::format_comparison_csv(rows), "cli");

  std::size_t width = 10;
  for (const auto& n : names) width = std::max(width, n.size() + 2);
  std::printf("%-*s %-10s %-10s %-10s %-10s\n", static_cast<int>(width), "model", "Gini AUC", "Macro AUC",
              "Micro AUC", "M-measure");
  for (const auto& r : rows)
    std::printf("%-*s %-10s %-10s %-10s %-10s\n", static_cast<int>(width), r.model.c_str(), fixed(r.gini_auc).c_str(),
                fixed(r.macro_auc).c_str(), fixed(r.micro_auc).c_str(), fixed(r.m_measure).c_str());
  std::printf("\ncomparison: %s\n", csv.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiclass ROC curves and AUCs with Gini-weighted aggregation"};
  app.require_subcommand(1);

  CliOptions evaluate_opts, compare_opts, bootstrap_opts;
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate one model's score file");
  add_common_flags(evaluate, evaluate_opts, false);
  auto* compare = app.add_subcommand("compare", "Compare several models scored on the same samples");
  add_common_flags(compare, compare_opts, true);
  compare->add_option("--names", compare_opts.names, "Model names, one per input")->delimiter(',');
  auto* bootstrap = app.add_subcommand("bootstrap", "Evaluate with bootstrap confidence bands");
  add_common_flags(bootstrap, bootstrap_opts, false);
  auto* version = app.add_subcommand("version", "Print the tool version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*version) {
      std::printf("mroc %s (report schema %s)\n", mroc::kToolVersion, mroc::kSchemaVersion);
      return kExitOk;
    }
    if (*evaluate) return cmd_evaluate(evaluate_opts);
    if (*compare) return cmd_compare(compare_opts);
    if (*bootstrap) {
      bootstrap_opts.cfg.bootstrap = true;
      return cmd_evaluate(bootstrap_opts);
    }
  } catch (const mroc::Error& e) {
    std::fprintf(stderr, "mroc: error in %s: %s\n", e.module().c_str(), e.what());
    return e.kind() == mroc::ErrorKind::input ? kExitInput : kExitRuntime;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "mroc: error: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitRuntime;
}
