#include "mroc/report.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "mroc/pipeline.hpp"
#include "mroc/schema.hpp"
#include "test_support.hpp"

namespace mroc {
namespace {

namespace fs = std::filesystem;

EvaluationReport sample_report(bool with_bootstrap) {
  RunConfig cfg;
  cfg.inputs = {"in.csv"};
  cfg.bootstrap = with_bootstrap;
  cfg.replicates = 20;
  cfg.threads = 2;
  return evaluate_dataset(testing::softmax_dataset(4, 200, 3), cfg);
}

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / ("mroc_report_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

// Element nesting balances and every attribute value is quoted.
bool well_formed(const std::string& xml) {
  std::vector<std::string> stack;
  const std::regex tag(R"(<(/?)([A-Za-z][\w:-]*)((?:\s+[\w:-]+="[^"<]*")*)\s*(/?)>)");
  for (auto it = std::sregex_iterator(xml.begin(), xml.end(), tag);
       it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[1] == "/") {
      if (stack.empty() || stack.back() != m[2]) return false;
      stack.pop_back();
    } else if (m[4] != "/") {
      stack.push_back(m[2]);
    }
  }
  // No stray markup: every '<' after the prolog starts a recognized tag.
  const auto tags = std::distance(std::sregex_iterator(xml.begin(), xml.end(), tag), std::sregex_iterator());
  return stack.empty() && static_cast<std::size_t>(tags) + 1 == count(xml, "<");
}

TEST(Report, WriteReadRoundTrip) {
  for (bool boot : {false, true}) {
    const auto r = sample_report(boot);
    const auto path = temp_path(boot ? "boot.json" : "plain.json");
    write_report(r, path);
    const auto back = read_report(path);
    EXPECT_EQ(back.auc_table, r.auc_table);
    EXPECT_EQ(back.per_class_curves, r.per_class_curves);
    EXPECT_EQ(back.aggregated_curve, r.aggregated_curve);
    EXPECT_EQ(back.micro_curve, r.micro_curve);
    EXPECT_EQ(back.gini.weights, r.gini.weights);
    EXPECT_EQ(back.whitening.matrix, r.whitening.matrix);
    EXPECT_EQ(back.bootstrap.has_value(), boot);
    if (boot) {
      EXPECT_EQ(back.bootstrap->band, r.bootstrap->band);
    }
    EXPECT_EQ(back.provenance.config, r.provenance.config);
    // write . read . write is a fixed point
    EXPECT_EQ(format_report(back), slurp(path));
  }
}

TEST(Report, CanonicalBytes) {
  const auto r = sample_report(false);
  const auto a = temp_path("a.json"), b = temp_path("b.json");
  write_report(r, a);
  write_report(r, b);
  EXPECT_EQ(slurp(a), slurp(b));
  const auto text = slurp(a);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_LT(text.find("\"aggregation\""), text.find("\"auc_table\""));
  EXPECT_NE(text.find(", \"inf\"]"), std::string::npos);
}

TEST(Report, RefusesNonFinite) {
  auto r = sample_report(false);
  r.gini.weights[1] = std::nan("");
  EXPECT_THROW(format_report(r), ValidationError);
  EXPECT_THROW(write_report(r, temp_path("nan.json")), ValidationError);
  EXPECT_THROW(canonical_json(nlohmann::json{{"x", std::numeric_limits<double>::infinity()}}), ValidationError);
}

TEST(Report, WriteFailureNamesPath) {
  try {
    write_report(sample_report(false), "/nonexistent-dir/report.json");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/report.json"), std::string::npos);
  }
}

TEST(Report, MalformedInputRejected) {
  const auto path = temp_path("bad.json");
  std::ofstream(path) << "{\"schema_version\": \"1.0\"}";
  EXPECT_THROW(read_report(path), ValidationError);
  std::ofstream(path) << "not json";
  EXPECT_THROW(read_report(path), ValidationError);
}

TEST(Report, EmptyCurveSerializesNullAuc) {
  RocCurve c = empty_curve("x", 0, 4);
  const auto j = curve_to_json(c);
  EXPECT_TRUE(j.at("auc").is_null());
  EXPECT_EQ(curve_from_json(j), c);
}

TEST(Report, ValidatesAgainstSchema) {
  const auto schema = nlohmann::json::parse(slurp(MROC_SCHEMA_PATH));
  const SchemaValidator v(schema);
  for (bool boot : {false, true}) {
    const auto doc = nlohmann::json::parse(format_report(sample_report(boot)));
    const auto errors = v.validate(doc);
    EXPECT_TRUE(errors.empty()) << (errors.empty() ? "" : errors.front());
  }
  auto doc = nlohmann::json::parse(format_report(sample_report(false)));
  doc.erase("gini");
  doc["extra"] = 1;
  EXPECT_GE(v.validate(doc).size(), 2u);
}

TEST(Svg, PerfectCurvePolyline) {
  RocCurve c;
  c.label = "perfect";
  c.points = {{0, 0, kInf}, {0, 1, 0.5}, {1, 1, -kInf}};
  c.auc = 1.0;
  const auto s = svg_curve_plot({c}, std::nullopt);
  const svg::Frame f;
  const std::string expected = svg::num(f.x(0)) + "," + svg::num(f.y(0)) + " " + svg::num(f.x(0)) + "," +
                               svg::num(f.y(1)) + " " + svg::num(f.x(1)) + "," + svg::num(f.y(1));
  EXPECT_NE(s.find("points=\"" + expected + "\""), std::string::npos) << s;
  EXPECT_EQ(count(s, "<polyline"), 1u);
  EXPECT_EQ(count(s, "<polygon"), 0u);
  EXPECT_TRUE(well_formed(s));
  EXPECT_EQ(s.find("href"), std::string::npos);
}

TEST(Svg, BandIsOnePolygon) {
  const auto r = sample_report(true);
  const auto s = svg_curve_plot({r.aggregated_curve}, r.bootstrap->band);
  EXPECT_EQ(count(s, "<polygon"), 1u);
  EXPECT_TRUE(well_formed(s));
  EXPECT_THROW(svg_curve_plot({}, std::nullopt), DomainError);
}

TEST(Svg, OverlayOfAllCurvesIsWellFormed) {
  const auto r = sample_report(false);
  auto curves = r.per_class_curves;
  curves.push_back(empty_curve("gone <&>", 0, 3));
  curves.push_back(r.aggregated_curve);
  const auto s = svg_curve_plot(curves, std::nullopt, "a & b");
  EXPECT_TRUE(well_formed(s));
  EXPECT_EQ(count(s, "<polyline"), 4u);
  EXPECT_NE(s.find("gone &lt;&amp;&gt;"), std::string::npos);
}

double bar_height(const std::string& s, std::size_t index) {
  const std::regex bar(R"re(<rect class="bar"[^>]* height="([0-9.]+)")re");
  auto it = std::sregex_iterator(s.begin(), s.end(), bar);
  std::advance(it, static_cast<long>(index));
  return std::stod((*it)[1]);
}

TEST(Svg, BarHeights) {
  const auto eq = svg_bar_chart({"a", "b"}, {0.5, 0.5});
  EXPECT_EQ(bar_height(eq, 0), bar_height(eq, 1));
  EXPECT_TRUE(well_formed(eq));

  const auto one = svg_bar_chart({"only"}, {1.0});
  EXPECT_DOUBLE_EQ(bar_height(one, 0), 300.0);

  const auto fig = svg_bar_chart({"AAA", "BBB", "C&D"}, {0.1, 0.21, 0.013});
  EXPECT_GT(bar_height(fig, 1), bar_height(fig, 2));
  EXPECT_NE(fig.find("C&amp;D"), std::string::npos);
  EXPECT_TRUE(well_formed(fig));

  EXPECT_THROW(svg_bar_chart({"a"}, {0.5, 0.5}), ShapeError);
  EXPECT_THROW(svg_bar_chart({"a"}, {-0.5}), DomainError);
}

TEST(Pipeline, ConfigEchoReproducesReport) {
  const auto r = sample_report(true);
  auto cfg = config_from_json(r.provenance.config);
  cfg.threads = 3;
  auto again = evaluate_dataset(testing::softmax_dataset(4, 200, 3), cfg);
  again.provenance.timestamp = r.provenance.timestamp;
  EXPECT_EQ(format_report(again), format_report(r));
}

TEST(Pipeline, ComparisonCsvQuotesNames) {
  const std::vector<ComparisonRow> rows{{"plain", 0.5, 0.5, 0.5, 0.5}, {"a,b", 1, 1, 1, 1}};
  EXPECT_EQ(format_comparison_csv(rows),
            "model,gini_auc,macro_auc,micro_auc,m_measure\nplain,0.5,0.5,0.5,0.5\n\"a,b\",1,1,1,1\n");
}

TEST(Pipeline, RequireComparable) {
  const auto a = testing::random_dataset(1, 50, 3);
  EXPECT_NO_THROW(require_comparable(a, a, "a", "b"));
  EXPECT_THROW(require_comparable(a, testing::random_dataset(1, 51, 3), "a", "b"), ComparabilityError);
  EXPECT_THROW(require_comparable(a, testing::random_dataset(1, 50, 4), "a", "b"), ComparabilityError);
  EXPECT_THROW(require_comparable(a, testing::random_dataset(2, 50, 3), "a", "b"), ComparabilityError);
}

}  // namespace
}  // namespace mroc
