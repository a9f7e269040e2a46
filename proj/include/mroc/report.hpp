#pragma once

// Evaluation report: JSON (de)serialization in a canonical byte-stable form,
// plus the SVG figures (ROC overlays with bands, bar charts).

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "mroc/dataset.hpp"
#include "mroc/errors.hpp"
#include "mroc/gini.hpp"
#include "mroc/roc.hpp"
#include "mroc/whitening.hpp"

namespace mroc {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kToolVersion = "1.0.0";

struct DatasetSummary {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::string> classes;
  std::vector<double> frequencies;
  std::vector<int> empty_classes;
};

struct WhiteningRecord {
  std::string method = "zca-cor";
  double ridge = 0.0;
  double eigen_floor = 0.0;
  int floored_eigenvalues = 0;
  double variance_floor = 0.0;
  double whitening_residual = 0.0;
  double inverse_residual = 0.0;
  std::vector<int> degenerate_columns;
  std::vector<double> mean;
  std::vector<double> variances;
  std::vector<std::vector<double>> correlation;
  std::vector<std::vector<double>> matrix;
};

struct GiniRecord {
  std::vector<double> per_class_gini;
  std::vector<double> whitened_means;
  std::vector<double> weights;
  double aggregate = 0.0;
};

struct AggregationRecord {
  std::vector<double> weights_used;
  std::vector<int> dropped;
};

struct BaselineRecord {
  std::size_t macro_used = 0;
  std::size_t macro_excluded = 0;
  std::size_t m_pairs_used = 0;
  std::vector<std::pair<int, int>> m_pairs_skipped;
};

struct BootstrapRecord {
  ConfidenceBand band;
  std::vector<double> replicate_aucs;
  double auc_std_error = 0.0;
  std::size_t discarded = 0;
  std::vector<std::size_t> class_drop_counts;
};

struct Provenance {
  std::string tool_version = kToolVersion;
  std::uint64_t seed = 0;
  std::string timestamp;
  json config = json::object();
};

struct EvaluationReport {
  DatasetSummary dataset;
  WhiteningRecord whitening;
  GiniRecord gini;
  std::vector<RocCurve> per_class_curves;
  RocCurve aggregated_curve;
  RocCurve micro_curve;
  AggregationRecord aggregation;
  AucTable auc_table;
  BaselineRecord baselines;
  std::optional<BootstrapRecord> bootstrap;
  Provenance provenance;
};

namespace detail {

inline std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

inline std::vector<std::vector<double>> to_rows(const Matrix& m) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) rows[static_cast<std::size_t>(r)].push_back(m(r, c));
  return rows;
}

inline json threshold_to_json(double t) {
  if (std::isinf(t)) return t > 0 ? "inf" : "-inf";
  return t;
}

inline double threshold_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw ValidationError("report", "bad threshold string '" + s + "'");
  }
  return j.get<double>();
}

inline std::optional<double> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

inline CurveKind curve_kind_from_string(const std::string& s) {
  if (s == "per_class") return CurveKind::per_class;
  if (s == "aggregated") return CurveKind::aggregated;
  if (s == "micro") return CurveKind::micro;
  throw ValidationError("report", "unknown curve kind '" + s + "'");
}

}  // namespace detail

inline json curve_to_json(const RocCurve& c) {
  json pts = json::array();
  for (const auto& p : c.points) pts.push_back({p.fpr, p.tpr, detail::threshold_to_json(p.threshold)});
  return {{"kind", to_string(c.kind)},
          {"label", c.label},
          {"empty", c.empty},
          {"auc", c.empty ? json(nullptr) : json(c.auc)},
          {"positives", c.positives},
          {"negatives", c.negatives},
          {"points", pts}};
}

inline RocCurve curve_from_json(const json& j) {
  RocCurve c;
  c.kind = detail::curve_kind_from_string(j.at("kind").get<std::string>());
  c.label = j.at("label").get<std::string>();
  c.empty = j.at("empty").get<bool>();
  c.auc = j.at("auc").is_null() ? 0.0 : j.at("auc").get<double>();
  c.positives = j.at("positives").get<std::size_t>();
  c.negatives = j.at("negatives").get<std::size_t>();
  for (const auto& p : j.at("points"))
    c.points.push_back({p.at(0).get<double>(), p.at(1).get<double>(), detail::threshold_from_json(p.at(2))});
  return c;
}

inline json band_to_json(const ConfidenceBand& b) {
  return {{"fpr_grid", b.fpr_grid}, {"lower", b.lower}, {"upper", b.upper},
          {"level", b.level}, {"replicates", b.replicates}};
}

inline ConfidenceBand band_from_json(const json& j) {
  ConfidenceBand b;
  b.fpr_grid = j.at("fpr_grid").get<std::vector<double>>();
  b.lower = j.at("lower").get<std::vector<double>>();
  b.upper = j.at("upper").get<std::vector<double>>();
  b.level = j.at("level").get<double>();
  b.replicates = j.at("replicates").get<std::size_t>();
  return b;
}

inline json to_json(const EvaluationReport& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["dataset_summary"] = {{"n", r.dataset.n},
                          {"k", r.dataset.k},
                          {"classes", r.dataset.classes},
                          {"frequencies", r.dataset.frequencies},
                          {"empty_classes", r.dataset.empty_classes}};
  const auto& w = r.whitening;
  j["whitening"] = {{"method", w.method},
                    {"ridge", w.ridge},
                    {"eigen_floor", w.eigen_floor},
                    {"floored_eigenvalues", w.floored_eigenvalues},
                    {"variance_floor", w.variance_floor},
                    {"whitening_residual", w.whitening_residual},
                    {"inverse_residual", w.inverse_residual},
                    {"degenerate_columns", w.degenerate_columns},
                    {"mean", w.mean},
                    {"variances", w.variances},
                    {"correlation", w.correlation},
                    {"matrix", w.matrix}};
  j["gini"] = {{"per_class_gini", r.gini.per_class_gini},
               {"whitened_means", r.gini.whitened_means},
               {"weights", r.gini.weights},
               {"aggregate", r.gini.aggregate}};
  json per_class = json::array();
  for (const auto& c : r.per_class_curves) per_class.push_back(curve_to_json(c));
  j["curves"] = {{"per_class", per_class},
                 {"aggregated", curve_to_json(r.aggregated_curve)},
                 {"micro", curve_to_json(r.micro_curve)}};
  j["aggregation"] = {{"weights_used", r.aggregation.weights_used},
                      {"dropped_classes", r.aggregation.dropped}};
  json per_class_auc = json::array();
  for (const auto& a : r.auc_table.per_class_auc) per_class_auc.push_back(a ? json(*a) : json(nullptr));
  json skipped = json::array();
  for (const auto& [a, b] : r.baselines.m_pairs_skipped) skipped.push_back({a, b});
  j["auc_table"] = {{"gini_auc", r.auc_table.gini_auc},
                    {"gini_auc_from_g1", r.auc_table.gini_auc_from_g1 ? json(*r.auc_table.gini_auc_from_g1)
                                                                      : json(nullptr)},
                    {"macro_auc", r.auc_table.macro_auc},
                    {"micro_auc", r.auc_table.micro_auc},
                    {"m_measure", r.auc_table.m_measure},
                    {"per_class_auc", per_class_auc},
                    {"macro_used", r.baselines.macro_used},
                    {"macro_excluded", r.baselines.macro_excluded},
                    {"m_pairs_used", r.baselines.m_pairs_used},
                    {"m_pairs_skipped", skipped}};
  if (r.bootstrap) {
    const auto& b = *r.bootstrap;
    j["bootstrap"] = {{"band", band_to_json(b.band)},
                      {"replicate_aucs", b.replicate_aucs},
                      {"auc_std_error", b.auc_std_error},
                      {"discarded", b.discarded},
                      {"class_drop_counts", b.class_drop_counts}};
  } else {
    j["bootstrap"] = nullptr;
  }
  j["provenance"] = {{"tool_version", r.provenance.tool_version},
                     {"seed", r.provenance.seed},
                     {"timestamp", r.provenance.timestamp},
                     {"config", r.provenance.config}};
  return j;
}

inline EvaluationReport report_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<std::string>() != kSchemaVersion)
      throw ValidationError("report", "unsupported schema_version");
    EvaluationReport r;
    const auto& d = j.at("dataset_summary");
    r.dataset = {d.at("n").get<std::size_t>(), d.at("k").get<std::size_t>(),
                 d.at("classes").get<std::vector<std::string>>(),
                 d.at("frequencies").get<std::vector<double>>(),
                 d.at("empty_classes").get<std::vector<int>>()};
    const auto& w = j.at("whitening");
    r.whitening.method = w.at("method").get<std::string>();
    r.whitening.ridge = w.at("ridge").get<double>();
    r.whitening.eigen_floor = w.at("eigen_floor").get<double>();
    r.whitening.floored_eigenvalues = w.at("floored_eigenvalues").get<int>();
    r.whitening.variance_floor = w.at("variance_floor").get<double>();
    r.whitening.whitening_residual = w.at("whitening_residual").get<double>();
    r.whitening.inverse_residual = w.at("inverse_residual").get<double>();
    r.whitening.degenerate_columns = w.at("degenerate_columns").get<std::vector<int>>();
    r.whitening.mean = w.at("mean").get<std::vector<double>>();
    r.whitening.variances = w.at("variances").get<std::vector<double>>();
    r.whitening.correlation = w.at("correlation").get<std::vector<std::vector<double>>>();
    r.whitening.matrix = w.at("matrix").get<std::vector<std::vector<double>>>();
    const auto& g = j.at("gini");
    r.gini = {g.at("per_class_gini").get<std::vector<double>>(),
              g.at("whitened_means").get<std::vector<double>>(),
              g.at("weights").get<std::vector<double>>(), g.at("aggregate").get<double>()};
    const auto& c = j.at("curves");
    for (const auto& pc : c.at("per_class")) r.per_class_curves.push_back(curve_from_json(pc));
    r.aggregated_curve = curve_from_json(c.at("aggregated"));
    r.micro_curve = curve_from_json(c.at("micro"));
    const auto& a = j.at("aggregation");
    r.aggregation = {a.at("weights_used").get<std::vector<double>>(),
                     a.at("dropped_classes").get<std::vector<int>>()};
    const auto& t = j.at("auc_table");
    r.auc_table.gini_auc = t.at("gini_auc").get<double>();
    r.auc_table.gini_auc_from_g1 = detail::optional_from_json(t.at("gini_auc_from_g1"));
    r.auc_table.macro_auc = t.at("macro_auc").get<double>();
    r.auc_table.micro_auc = t.at("micro_auc").get<double>();
    r.auc_table.m_measure = t.at("m_measure").get<double>();
    for (const auto& v : t.at("per_class_auc")) r.auc_table.per_class_auc.push_back(detail::optional_from_json(v));
    r.baselines.macro_used = t.at("macro_used").get<std::size_t>();
    r.baselines.macro_excluded = t.at("macro_excluded").get<std::size_t>();
    r.baselines.m_pairs_used = t.at("m_pairs_used").get<std::size_t>();
    for (const auto& p : t.at("m_pairs_skipped"))
      r.baselines.m_pairs_skipped.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    const auto& b = j.at("bootstrap");
    if (!b.is_null()) {
      BootstrapRecord rec;
      rec.band = band_from_json(b.at("band"));
      rec.replicate_aucs = b.at("replicate_aucs").get<std::vector<double>>();
      rec.auc_std_error = b.at("auc_std_error").get<double>();
      rec.discarded = b.at("discarded").get<std::size_t>();
      rec.class_drop_counts = b.at("class_drop_counts").get<std::vector<std::size_t>>();
      r.bootstrap = std::move(rec);
    }
    const auto& p = j.at("provenance");
    r.provenance.tool_version = p.at("tool_version").get<std::string>();
    r.provenance.seed = p.at("seed").get<std::uint64_t>();
    r.provenance.timestamp = p.at("timestamp").get<std::string>();
    r.provenance.config = p.at("config");
    return r;
  } catch (const json::exception& e) {
    throw ValidationError("report", std::string("malformed report: ") + e.what());
  }
}

/// Throws ValidationError naming the JSON path of the first non-finite number.
inline void require_finite(const json& j, const std::string& path = "$") {
  if (j.is_number_float()) {
    if (!std::isfinite(j.get<double>())) throw ValidationError("report", "non-finite number at " + path);
  } else if (j.is_object()) {
    for (const auto& [key, value] : j.items()) require_finite(value, path + "." + key);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) require_finite(j[i], path + "[" + std::to_string(i) + "]");
  }
}

namespace detail {

inline bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

inline void dump_canonical(const json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map: keys already sorted
        if (!first) out += ",\n";
        first = false;
        out += inner + json(key).dump() + ": ";
        dump_canonical(value, out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return is_scalar(e); });
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += flat ? ", " : ",";
        if (!flat) out += "\n" + inner;
        dump_canonical(j[i], out, indent + 1);
      }
      if (!flat) out += "\n" + pad;
      out += "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) throw ValidationError("report", "non-finite number");
      out += format_double(v);
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace detail

/// Sorted keys, 17-significant-digit floats, two-space indentation, trailing
/// newline. Identical input gives identical bytes.
inline std::string canonical_json(const json& j) {
  require_finite(j);
  std::string out;
  detail::dump_canonical(j, out, 0);
  out += "\n";
  return out;
}

inline std::string format_report(const EvaluationReport& report) {
  return canonical_json(to_json(report));
}

inline void write_text_file(const std::string& path, const std::string& text, const char* module) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(module, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError(module, "write failed for '" + path + "'");
}

inline void write_report(const EvaluationReport& report, const std::string& path) {
  write_text_file(path, format_report(report), "report");
}

inline EvaluationReport read_report(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("report", "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError("report", std::string("report is not valid JSON: ") + e.what());
  }
  return report_from_json(j);
}

// ---------------------------------------------------------------------------
// SVG output

namespace svg {

inline std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(ch);
    }
  }
  return out;
}

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline const char* palette(std::size_t i) {
  static constexpr const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return colors[i % 10];
}

// Plot frame for the unit-square ROC axes.
struct Frame {
  double left = 70.0;
  double top = 30.0;
  double size = 440.0;
  double x(double fpr) const { return left + fpr * size; }
  double y(double tpr) const { return top + (1.0 - tpr) * size; }
};

}  // namespace svg

/// Self-contained SVG: unit-square axes, chance diagonal, one polyline per
/// non-empty curve, optional band polygon, legend with AUCs.
inline std::string svg_curve_plot(const std::vector<RocCurve>& curves,
                                  const std::optional<ConfidenceBand>& band,
                                  const std::string& title = "ROC") {
  if (curves.empty()) throw DomainError("report", "curve plot needs at least one curve");
  const svg::Frame f;
  const double legend_x = f.left + f.size + 30.0;
  const double width = legend_x + 230.0;
  const double height = std::max(f.top + f.size + 60.0, 40.0 + 18.0 * static_cast<double>(curves.size() + 2));

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + svg::num(width) +
       "\" height=\"" + svg::num(height) + "\" viewBox=\"0 0 " + svg::num(width) + " " + svg::num(height) + "\">\n";
  s += "<title>" + svg::escape(title) + "</title>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + svg::num(width) + "\" height=\"" + svg::num(height) + "\" fill=\"white\"/>\n";

  if (band) {
    if (band->fpr_grid.size() != band->lower.size() || band->fpr_grid.size() != band->upper.size())
      throw ShapeError("report", "band grids differ in length");
    std::string pts;
    for (std::size_t i = 0; i < band->fpr_grid.size(); ++i)
      pts += svg::num(f.x(band->fpr_grid[i])) + "," + svg::num(f.y(band->upper[i])) + " ";
    for (std::size_t i = band->fpr_grid.size(); i-- > 0;)
      pts += svg::num(f.x(band->fpr_grid[i])) + "," + svg::num(f.y(band->lower[i])) + " ";
    pts.pop_back();
    s += "<polygon class=\"band\" points=\"" + pts + "\" fill=\"#1f77b4\" fill-opacity=\"0.2\" stroke=\"none\"/>\n";
  }

  s += "<rect class=\"axes\" x=\"" + svg::num(f.left) + "\" y=\"" + svg::num(f.top) + "\" width=\"" +
       svg::num(f.size) + "\" height=\"" + svg::num(f.size) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = i / 5.0;
    s += "<text x=\"" + svg::num(f.x(v)) + "\" y=\"" + svg::num(f.top + f.size + 16.0) +
         "\" font-size=\"11\" text-anchor=\"middle\">" + svg::num(v).substr(0, 3) + "</text>\n";
    s += "<text x=\"" + svg::num(f.left - 6.0) + "\" y=\"" + svg::num(f.y(v) + 4.0) +
         "\" font-size=\"11\" text-anchor=\"end\">" + svg::num(v).substr(0, 3) + "</text>\n";
  }
  s += "<text x=\"" + svg::num(f.x(0.5)) + "\" y=\"" + svg::num(f.top + f.size + 36.0) +
       "\" font-size=\"13\" text-anchor=\"middle\">False Positive Rate</text>\n";
  s += "<text x=\"18\" y=\"" + svg::num(f.y(0.5)) + "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
       svg::num(f.y(0.5)) + ")\">True Positive Rate</text>\n";
  s += "<text x=\"" + svg::num(f.x(0.5)) + "\" y=\"20\" font-size=\"14\" text-anchor=\"middle\">" +
       svg::escape(title) + "</text>\n";
  s += "<line class=\"diagonal\" x1=\"" + svg::num(f.x(0)) + "\" y1=\"" + svg::num(f.y(0)) + "\" x2=\"" +
       svg::num(f.x(1)) + "\" y2=\"" + svg::num(f.y(1)) + "\" stroke=\"#999999\" stroke-dasharray=\"4 4\"/>\n";

  double ly = f.top + 10.0;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    const bool bold = c.kind == CurveKind::aggregated;
    const char* color = bold ? "#000000" : svg::palette(i);
    std::string legend = c.label;
    if (c.empty) {
      legend += " (empty)";
    } else {
      std::string pts;
      for (const auto& p : c.points) pts += svg::num(f.x(p.fpr)) + "," + svg::num(f.y(p.tpr)) + " ";
      pts.pop_back();
      s += "<polyline class=\"curve\" data-label=\"" + svg::escape(c.label) + "\" points=\"" + pts +
           "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + (bold ? "2.5" : "1.2") + "\"/>\n";
      char auc[32];
      std::snprintf(auc, sizeof auc, " (AUC %.3f)", c.auc);
      legend += auc;
    }
    s += "<line x1=\"" + svg::num(legend_x) + "\" y1=\"" + svg::num(ly) + "\" x2=\"" + svg::num(legend_x + 20) +
         "\" y2=\"" + svg::num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    s += "<text class=\"legend\" x=\"" + svg::num(legend_x + 26) + "\" y=\"" + svg::num(ly + 4) +
         "\" font-size=\"11\">" + svg::escape(legend) + "</text>\n";
    ly += 18.0;
  }
  if (band) {
    char lvl[64];
    std::snprintf(lvl, sizeof lvl, "%.0f%% band (%zu replicates)", band->level * 100.0, band->replicates);
    s += "<text class=\"legend\" x=\"" + svg::num(legend_x + 26) + "\" y=\"" + svg::num(ly + 4) +
         "\" font-size=\"11\">" + lvl + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

inline void render_curve_plot(const std::vector<RocCurve>& curves, const std::optional<ConfidenceBand>& band,
                              const std::string& path, const std::string& title = "ROC") {
  write_text_file(path, svg_curve_plot(curves, band, title), "report");
}

/// Bars scaled so the largest value fills the plot height.
inline std::string svg_bar_chart(const std::vector<std::string>& labels, const std::vector<double>& values,
                                 const std::string& title = "") {
  if (labels.size() != values.size()) throw ShapeError("report", "bar chart labels and values differ in length");
  if (values.empty()) throw DomainError("report", "bar chart needs at least one bar");
  double vmax = 0.0;
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("report", "bar values must be finite and nonnegative");
    vmax = std::max(vmax, v);
  }
  if (vmax == 0.0) vmax = 1.0;

  const double left = 60.0, top = 40.0, plot_h = 300.0;
  const double slot = 56.0, bar_w = 40.0;
  const double width = left + slot * static_cast<double>(values.size()) + 20.0;
  const double height = top + plot_h + 70.0;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + svg::num(width) +
       "\" height=\"" + svg::num(height) + "\" viewBox=\"0 0 " + svg::num(width) + " " + svg::num(height) + "\">\n";
  s += "<title>" + svg::escape(title) + "</title>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + svg::num(width) + "\" height=\"" + svg::num(height) + "\" fill=\"white\"/>\n";
  s += "<text x=\"" + svg::num(width / 2) + "\" y=\"22\" font-size=\"14\" text-anchor=\"middle\">" +
       svg::escape(title) + "</text>\n";
  s += "<line x1=\"" + svg::num(left) + "\" y1=\"" + svg::num(top + plot_h) + "\" x2=\"" + svg::num(width - 10) +
       "\" y2=\"" + svg::num(top + plot_h) + "\" stroke=\"black\"/>\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double h = values[i] / vmax * plot_h;
    const double x = left + slot * static_cast<double>(i) + (slot - bar_w) / 2;
    s += "<rect class=\"bar\" x=\"" + svg::num(x) + "\" y=\"" + svg::num(top + plot_h - h) + "\" width=\"" +
         svg::num(bar_w) + "\" height=\"" + svg::num(h) + "\" fill=\"" + svg::palette(0) + "\"/>\n";
    char val[32];
    std::snprintf(val, sizeof val, "%.3g", values[i]);
    s += "<text class=\"value\" x=\"" + svg::num(x + bar_w / 2) + "\" y=\"" + svg::num(top + plot_h - h - 4) +
         "\" font-size=\"10\" text-anchor=\"middle\">" + val + "</text>\n";
    s += "<text class=\"label\" x=\"" + svg::num(x + bar_w / 2) + "\" y=\"" + svg::num(top + plot_h + 16) +
         "\" font-size=\"11\" text-anchor=\"middle\">" + svg::escape(labels[i]) + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

inline void render_bar_chart(const std::vector<std::string>& labels, const std::vector<double>& values,
                             const std::string& path, const std::string& title = "") {
  write_text_file(path, svg_bar_chart(labels, values, title), "report");
}

}  // namespace mroc
