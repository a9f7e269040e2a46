#pragma once

// Run configuration and the end-to-end evaluation the CLI drives:
// load -> moments -> whitening -> Gini weights -> curves -> AUCs -> bootstrap.

#include <nlohmann/json.hpp>

#include <cctype>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <string>
#include <vector>

#include "mroc/dataset.hpp"
#include "mroc/errors.hpp"
#include "mroc/gini.hpp"
#include "mroc/report.hpp"
#include "mroc/roc.hpp"
#include "mroc/whitening.hpp"

namespace mroc {

struct RunConfig {
  std::vector<std::string> inputs;
  std::string labels;  // optional separate label file
  std::string label_col = "label";
  std::vector<std::string> score_cols;
  char delimiter = ',';
  std::size_t grid_size = kDefaultGridSize;
  double ridge = kDefaultRidge;
  bool bootstrap = false;
  std::size_t replicates = 1000;
  double level = 0.95;
  std::uint64_t seed = 42;
  std::size_t band_points = 101;
  std::string out_dir = "mroc_out";
  bool plots = false;
  unsigned threads = 0;  // execution detail, not part of the echo

  void validate() const {
    if (inputs.empty()) throw ConfigError("cli", "no input file given");
    if (delimiter != ',' && delimiter != '\t') throw ConfigError("cli", "delimiter must be comma or tab");
    if (grid_size < 2) throw ConfigError("cli", "grid size must be at least 2");
    if (!(ridge >= 0.0) || !std::isfinite(ridge)) throw ConfigError("cli", "ridge must be finite and nonnegative");
    bootstrap_config().validate();
  }

  BootstrapConfig bootstrap_config() const {
    BootstrapConfig b;
    b.replicates = replicates;
    b.level = level;
    b.seed = seed;
    b.grid_size = grid_size;
    b.ridge = ridge;
    b.band_points = band_points;
    b.threads = threads;
    return b;
  }

  CsvOptions csv_options() const {
    CsvOptions o;
    o.label_column = label_col;
    o.score_columns = score_cols;
    o.delimiter = delimiter;
    return o;
  }
};

inline nlohmann::json config_to_json(const RunConfig& c) {
  return {{"inputs", c.inputs},
          {"labels", c.labels},
          {"label_col", c.label_col},
          {"score_cols", c.score_cols},
          {"delimiter", c.delimiter == '\t' ? "tab" : "comma"},
          {"grid_size", c.grid_size},
          {"ridge", c.ridge},
          {"bootstrap", c.bootstrap},
          {"replicates", c.replicates},
          {"level", c.level},
          {"seed", c.seed},
          {"band_points", c.band_points},
          {"out_dir", c.out_dir},
          {"plots", c.plots}};
}

inline RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  c.inputs = j.at("inputs").get<std::vector<std::string>>();
  c.labels = j.at("labels").get<std::string>();
  c.label_col = j.at("label_col").get<std::string>();
  c.score_cols = j.at("score_cols").get<std::vector<std::string>>();
  c.delimiter = j.at("delimiter").get<std::string>() == "tab" ? '\t' : ',';
  c.grid_size = j.at("grid_size").get<std::size_t>();
  c.ridge = j.at("ridge").get<double>();
  c.bootstrap = j.at("bootstrap").get<bool>();
  c.replicates = j.at("replicates").get<std::size_t>();
  c.level = j.at("level").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.band_points = j.at("band_points").get<std::size_t>();
  c.out_dir = j.at("out_dir").get<std::string>();
  c.plots = j.at("plots").get<bool>();
  return c;
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Loads input `index` of the config, taking labels from the shared label
/// file when one is set.
inline EvaluationDataset load_input(const RunConfig& cfg, std::size_t index = 0) {
  auto opts = cfg.csv_options();
  if (!cfg.labels.empty())
    opts.external_labels = parse_column(read_file(cfg.labels), cfg.label_col, cfg.delimiter);
  return load_dataset(cfg.inputs.at(index), opts);
}

/// Everything except the timestamp is a pure function of (data, cfg).
inline EvaluationReport evaluate_dataset(const EvaluationDataset& data, const RunConfig& cfg) {
  EvaluationReport r;
  const auto names = data.class_names();

  r.dataset.n = data.num_samples();
  r.dataset.k = data.num_classes();
  r.dataset.classes = names;
  r.dataset.frequencies = detail::to_std(class_frequencies(data));
  r.dataset.empty_classes = data.empty_classes();

  const auto model = fit_zca_cor(estimate_moments(data.scores()), cfg.ridge);
  auto& w = r.whitening;
  w.method = model.method;
  w.ridge = model.ridge;
  w.eigen_floor = model.eigen_floor;
  w.floored_eigenvalues = model.floored_eigenvalues;
  w.variance_floor = model.variance_floor;
  w.whitening_residual = model.whitening_residual();
  w.inverse_residual = model.inverse_residual();
  w.degenerate_columns = model.moments.degenerate_columns;
  w.mean = detail::to_std(model.moments.mean);
  w.variances = detail::to_std(model.moments.variances);
  w.correlation = detail::to_rows(model.moments.correlation);
  w.matrix = detail::to_rows(model.matrix);

  const auto decomposition = multidimensional_gini(model, data.scores(), names);
  r.gini = {detail::to_std(decomposition.per_class_gini), detail::to_std(decomposition.whitened_means),
            detail::to_std(decomposition.weights), decomposition.aggregate};

  r.per_class_curves = roc_per_class(data);
  const auto g = gini_auc(data, decomposition, cfg.grid_size);
  r.aggregated_curve = g.aggregated.curve;
  r.aggregation = {detail::to_std(g.aggregated.weights_used), g.aggregated.dropped};
  r.micro_curve = micro_auc(data);

  const auto macro = macro_auc(r.per_class_curves);
  const auto m = m_measure(data);
  r.auc_table.gini_auc = g.trapezoid;
  r.auc_table.gini_auc_from_g1 = g.from_gini;
  r.auc_table.macro_auc = macro.value;
  r.auc_table.micro_auc = r.micro_curve.auc;
  r.auc_table.m_measure = m.value;
  for (const auto& c : r.per_class_curves)
    r.auc_table.per_class_auc.push_back(c.empty ? std::nullopt : std::optional<double>(c.auc));
  r.baselines = {macro.used, macro.excluded, m.pairs_used, m.skipped};

  if (cfg.bootstrap) {
    const auto b = bootstrap_band(data, cfg.bootstrap_config());
    r.bootstrap = BootstrapRecord{b.band, b.replicate_aucs, b.auc_std_error, b.discarded, b.class_drop_counts};
  }

  r.provenance.seed = cfg.seed;
  r.provenance.timestamp = utc_timestamp();
  r.provenance.config = config_to_json(cfg);
  return r;
}

/// File-system safe form of a model or class name.
inline std::string safe_name(const std::string& s) {
  std::string out;
  for (unsigned char ch : s) out.push_back(std::isalnum(ch) || ch == '-' || ch == '_' || ch == '.' ? static_cast<char>(ch) : '_');
  return out.empty() ? "_" : out;
}

/// Writes report.json, the curve CSVs and (optionally) the SVG figures into
/// `dir`.
inline void write_outputs(const EvaluationReport& r, const std::string& dir, bool plots) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(fs::path(dir) / "curves", ec);
  if (ec) throw IoError("cli", "cannot create output directory '" + dir + "': " + ec.message());

  write_report(r, (fs::path(dir) / "report.json").string());
  for (std::size_t i = 0; i < r.per_class_curves.size(); ++i) {
    const auto& c = r.per_class_curves[i];
    if (c.empty) continue;
    write_text_file((fs::path(dir) / "curves" / ("class_" + std::to_string(i) + "_" + safe_name(c.label) + ".csv")).string(),
                    format_curve_csv(c), "cli");
  }
  write_text_file((fs::path(dir) / "curves" / "aggregated.csv").string(), format_curve_csv(r.aggregated_curve), "cli");
  write_text_file((fs::path(dir) / "curves" / "micro.csv").string(), format_curve_csv(r.micro_curve), "cli");

  if (!plots) return;
  std::optional<ConfidenceBand> band;
  if (r.bootstrap) band = r.bootstrap->band;
  render_curve_plot({r.aggregated_curve}, band, (fs::path(dir) / "roc_aggregated.svg").string(),
                    "Multiclass ROC curve");
  auto overlay = r.per_class_curves;
  overlay.push_back(r.aggregated_curve);
  render_curve_plot(overlay, std::nullopt, (fs::path(dir) / "roc_per_class.svg").string(),
                    "Per-class and multiclass ROC curves");
  render_bar_chart(r.dataset.classes, r.gini.weights, (fs::path(dir) / "weights.svg").string(), "Gini weights");
  render_bar_chart(r.dataset.classes, r.dataset.frequencies, (fs::path(dir) / "frequencies.svg").string(),
                   "Class frequencies");
}

struct ComparisonRow {
  std::string model;
  double gini_auc = 0.0;
  double macro_auc = 0.0;
  double micro_auc = 0.0;
  double m_measure = 0.0;
};

inline std::string format_comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::string out = "model,gini_auc,macro_auc,micro_auc,m_measure\n";
  for (const auto& r : rows) {
    std::string name = r.model;
    if (name.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (char ch : name) {
        if (ch == '"') q.push_back('"');
        q.push_back(ch);
      }
      name = q + "\"";
    }
    out += name + "," + format_double(r.gini_auc) + "," + format_double(r.macro_auc) + "," +
           format_double(r.micro_auc) + "," + format_double(r.m_measure) + "\n";
  }
  return out;
}

/// Throws ComparabilityError unless both datasets cover the same samples and
/// classes.
inline void require_comparable(const EvaluationDataset& a, const EvaluationDataset& b,
                               const std::string& name_a, const std::string& name_b) {
  if (a.num_samples() != b.num_samples())
    throw ComparabilityError("cli", name_a + " has " + std::to_string(a.num_samples()) + " samples, " + name_b +
                                        " has " + std::to_string(b.num_samples()));
  if (a.class_names() != b.class_names())
    throw ComparabilityError("cli", name_a + " and " + name_b + " have different class sets");
  if (a.labels() != b.labels())
    throw ComparabilityError("cli", name_a + " and " + name_b + " disagree on the true labels");
}

}  // namespace mroc
