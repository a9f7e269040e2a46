#pragma once

// Input data model: class vocabulary, true labels and the n x k score matrix,
// plus delimited-text ingestion.

#include <Eigen/Dense>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mroc/errors.hpp"

namespace mroc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct ClassLabel {
  std::string name;
  int index = 0;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// True labels plus one score column per class. Immutable once built; every
/// constructor path goes through the same validation.
class EvaluationDataset {
 public:
  EvaluationDataset(std::vector<std::string> class_names, std::vector<int> labels,
                    Matrix scores)
      : labels_(std::move(labels)), scores_(std::move(scores)) {
    if (class_names.size() < 2)
      throw SchemaError("dataset", "at least two classes are required, got " +
                                       std::to_string(class_names.size()));
    for (std::size_t i = 0; i < class_names.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (class_names[j] == class_names[i])
          throw SchemaError("dataset", "duplicate class name '" + class_names[i] + "'");
      classes_.push_back({class_names[i], static_cast<int>(i)});
    }
    const auto k = static_cast<Eigen::Index>(classes_.size());
    if (scores_.cols() != k)
      throw ShapeError("dataset", "score matrix has " + std::to_string(scores_.cols()) +
                                      " columns for " + std::to_string(k) + " classes");
    if (scores_.rows() != static_cast<Eigen::Index>(labels_.size()))
      throw ShapeError("dataset", "score matrix rows do not match label count");
    if (labels_.size() < 2)
      throw ValidationError("dataset", "at least two samples are required");
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] < 0 || labels_[i] >= k)
        throw VocabularyError("dataset", "label index out of range at sample " +
                                             std::to_string(i));
    for (Eigen::Index r = 0; r < scores_.rows(); ++r)
      for (Eigen::Index c = 0; c < k; ++c)
        if (!std::isfinite(scores_(r, c)))
          throw ValidationError("dataset", "non-finite score at sample " + std::to_string(r) +
                                               ", class '" + classes_[c].name + "'");
    counts_.assign(classes_.size(), 0);
    for (int y : labels_) ++counts_[static_cast<std::size_t>(y)];
  }

  std::size_t num_samples() const noexcept { return labels_.size(); }
  std::size_t num_classes() const noexcept { return classes_.size(); }
  const std::vector<ClassLabel>& classes() const noexcept { return classes_; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  const Matrix& scores() const noexcept { return scores_; }
  const std::vector<std::size_t>& class_counts() const noexcept { return counts_; }

  std::vector<std::string> class_names() const {
    std::vector<std::string> out;
    for (const auto& c : classes_) out.push_back(c.name);
    return out;
  }

  /// Classes that no sample belongs to. Accepted at load time; ROC consumers
  /// report them as empty instead of failing.
  std::vector<int> empty_classes() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < counts_.size(); ++i)
      if (counts_[i] == 0) out.push_back(static_cast<int>(i));
    return out;
  }
  bool has_empty_classes() const { return !empty_classes().empty(); }

  /// Row subset in the given order; indices may repeat (bootstrap).
  EvaluationDataset resample(const std::vector<std::size_t>& rows) const {
    Matrix s(static_cast<Eigen::Index>(rows.size()), scores_.cols());
    std::vector<int> y(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      s.row(static_cast<Eigen::Index>(i)) = scores_.row(static_cast<Eigen::Index>(rows[i]));
      y[i] = labels_[rows[i]];
    }
    return EvaluationDataset(class_names(), std::move(y), std::move(s));
  }

  friend bool operator==(const EvaluationDataset& a, const EvaluationDataset& b) {
    return a.classes_ == b.classes_ && a.labels_ == b.labels_ &&
           a.scores_.rows() == b.scores_.rows() && a.scores_.cols() == b.scores_.cols() &&
           a.scores_ == b.scores_;
  }

 private:
  std::vector<ClassLabel> classes_;
  std::vector<int> labels_;
  Matrix scores_;
  std::vector<std::size_t> counts_;
};

struct IndicatorMatrix {
  Matrix values;  // n x k, one-hot rows
};

inline IndicatorMatrix to_indicator(const EvaluationDataset& data) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(data.num_samples()),
                          static_cast<Eigen::Index>(data.num_classes()));
  const auto& y = data.labels();
  for (std::size_t i = 0; i < y.size(); ++i) m(static_cast<Eigen::Index>(i), y[i]) = 1.0;
  return {std::move(m)};
}

inline Vector class_frequencies(const EvaluationDataset& data) {
  Vector f(static_cast<Eigen::Index>(data.num_classes()));
  const double n = static_cast<double>(data.num_samples());
  for (std::size_t c = 0; c < data.num_classes(); ++c)
    f(static_cast<Eigen::Index>(c)) = static_cast<double>(data.class_counts()[c]) / n;
  return f;
}

struct CsvOptions {
  std::string label_column = "label";
  // Empty means: every column named score_<class>.
  std::vector<std::string> score_columns;
  char delimiter = ',';
  // Labels supplied from a separate file; the score file then needs no label
  // column.
  std::optional<std::vector<std::string>> external_labels;
};

inline constexpr std::string_view kScorePrefix = "score_";

namespace detail {

inline std::vector<std::string> split_record(std::string_view line, char delim,
                                             std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(ch);
      }
    } else if (ch == '"' && cur.empty() && !was_quoted) {
      quoted = was_quoted = true;
    } else if (ch == delim) {
      fields.push_back(std::move(cur));
      cur.clear();
      was_quoted = false;
    } else {
      cur.push_back(ch);
    }
  }
  if (quoted) throw ParseError("dataset", "unterminated quote on line " + std::to_string(line_no));
  fields.push_back(std::move(cur));
  return fields;
}

inline std::string class_name_for_column(const std::string& column) {
  if (column.size() > kScorePrefix.size() && column.starts_with(kScorePrefix))
    return column.substr(kScorePrefix.size());
  return column;
}

}  // namespace detail

/// Parses delimited text with one header row. Line numbers in messages are
/// 1-based and count the header.
inline EvaluationDataset parse_dataset(std::string_view text, const CsvOptions& opts = {}) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw SchemaError("dataset", "input has no header row");

  const auto header = detail::split_record(lines[0], opts.delimiter, 1);
  std::unordered_map<std::string, std::size_t> column_of;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i].empty()) throw SchemaError("dataset", "empty column name in header");
    if (!column_of.emplace(header[i], i).second)
      throw SchemaError("dataset", "duplicate column '" + header[i] + "'");
  }

  constexpr std::size_t kNoColumn = static_cast<std::size_t>(-1);
  std::size_t label_col = kNoColumn;
  if (!opts.external_labels) {
    auto label_it = column_of.find(opts.label_column);
    if (label_it == column_of.end())
      throw SchemaError("dataset", "missing label column '" + opts.label_column + "'");
    label_col = label_it->second;
  } else if (opts.external_labels->size() != lines.size() - 1) {
    throw SchemaError("dataset", "label file has " + std::to_string(opts.external_labels->size()) +
                                     " rows, score file has " + std::to_string(lines.size() - 1));
  }

  std::vector<std::size_t> score_cols;
  std::vector<std::string> class_names;
  if (opts.score_columns.empty()) {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (i != label_col && header[i].size() > kScorePrefix.size() &&
          header[i].starts_with(kScorePrefix)) {
        score_cols.push_back(i);
        class_names.push_back(detail::class_name_for_column(header[i]));
      }
  } else {
    for (const auto& name : opts.score_columns) {
      auto it = column_of.find(name);
      if (it == column_of.end()) throw SchemaError("dataset", "missing score column '" + name + "'");
      if (it->second == label_col)
        throw SchemaError("dataset", "label column cannot also be a score column");
      score_cols.push_back(it->second);
      class_names.push_back(detail::class_name_for_column(name));
    }
  }
  if (score_cols.size() < 2)
    throw SchemaError("dataset", "need at least two score columns, found " +
                                     std::to_string(score_cols.size()));

  std::unordered_map<std::string, int> class_index;
  for (std::size_t i = 0; i < class_names.size(); ++i)
    if (!class_index.emplace(class_names[i], static_cast<int>(i)).second)
      throw SchemaError("dataset", "duplicate class name '" + class_names[i] + "'");

  const std::size_t n = lines.size() - 1;
  Matrix scores(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(score_cols.size()));
  std::vector<int> labels(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t line_no = r + 2;
    const auto fields = detail::split_record(lines[r + 1], opts.delimiter, line_no);
    if (fields.size() != header.size())
      throw ParseError("dataset", "line " + std::to_string(line_no) + " has " +
                                      std::to_string(fields.size()) + " fields, header has " +
                                      std::to_string(header.size()));
    for (std::size_t c = 0; c < fields.size(); ++c)
      if (fields[c].empty())
        throw ParseError("dataset", "empty field at line " + std::to_string(line_no) +
                                        ", column '" + header[c] + "'");

    const std::string& label =
        label_col == kNoColumn ? (*opts.external_labels)[r] : fields[label_col];
    auto lab = class_index.find(label);
    if (lab == class_index.end())
      throw VocabularyError("dataset", "label '" + label + "' at line " +
                                           std::to_string(line_no) +
                                           " has no matching score column");
    labels[r] = lab->second;

    for (std::size_t j = 0; j < score_cols.size(); ++j) {
      const std::string& cell = fields[score_cols[j]];
      double v = 0.0;
      const char* first = cell.data();
      const char* last = first + cell.size();
      if (*first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last)
        throw ParseError("dataset", "non-numeric value '" + cell + "' at line " +
                                        std::to_string(line_no) + ", column '" +
                                        header[score_cols[j]] + "'");
      if (!std::isfinite(v))
        throw ValidationError("dataset", "non-finite value '" + cell + "' at line " +
                                             std::to_string(line_no) + ", column '" +
                                             header[score_cols[j]] + "'");
      scores(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = v;
    }
  }
  return EvaluationDataset(std::move(class_names), std::move(labels), std::move(scores));
}

/// Values of one named column, in row order.
inline std::vector<std::string> parse_column(std::string_view text, const std::string& name,
                                             char delimiter = ',') {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<std::string> out;
  std::size_t col = 0;
  std::size_t line_no = 0;
  for (std::size_t pos = 0; pos < text.size();) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (line.empty() && pos >= text.size()) break;
    auto fields = detail::split_record(line, delimiter, line_no);
    if (line_no == 1) {
      auto it = std::find(fields.begin(), fields.end(), name);
      if (it == fields.end()) throw SchemaError("dataset", "missing label column '" + name + "'");
      col = static_cast<std::size_t>(it - fields.begin());
      continue;
    }
    if (col >= fields.size() || fields[col].empty())
      throw ParseError("dataset", "missing value for '" + name + "' at line " + std::to_string(line_no));
    out.push_back(std::move(fields[col]));
  }
  if (line_no == 0) throw SchemaError("dataset", "input has no header row");
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("dataset", "cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline EvaluationDataset load_dataset(const std::string& path, const CsvOptions& opts = {}) {
  return parse_dataset(read_file(path), opts);
}

/// 17 significant digits, enough for any double to parse back bit-exact.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Writes the dataset in the same schema load_dataset reads, so a reload
/// reproduces it exactly.
inline std::string format_dataset(const EvaluationDataset& data, const CsvOptions& opts = {}) {
  auto quote = [&](const std::string& s) {
    if (s.find_first_of(std::string{opts.delimiter, '"', '\n', '\r'}) == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q.push_back('"');
      q.push_back(ch);
    }
    return q + "\"";
  };
  std::string out = quote(opts.label_column);
  for (const auto& c : data.classes()) {
    out.push_back(opts.delimiter);
    out += quote(std::string(kScorePrefix) + c.name);
  }
  out.push_back('\n');
  const auto& s = data.scores();
  for (std::size_t r = 0; r < data.num_samples(); ++r) {
    out += quote(data.classes()[static_cast<std::size_t>(data.labels()[r])].name);
    for (Eigen::Index c = 0; c < s.cols(); ++c) {
      out.push_back(opts.delimiter);
      out += format_double(s(static_cast<Eigen::Index>(r), c));
    }
    out.push_back('\n');
  }
  return out;
}

inline void write_dataset(const EvaluationDataset& data, const std::string& path,
                          const CsvOptions& opts = {}) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("dataset", "cannot write '" + path + "'");
  out << format_dataset(data, opts);
  if (!out) throw IoError("dataset", "write failed for '" + path + "'");
}

}  // namespace mroc
