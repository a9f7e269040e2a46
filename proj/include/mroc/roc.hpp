#pragma once

// One-vs-rest ROC curves, the weighted aggregated multiclass curve, the AUC
// baselines (macro, micro, Hand & Till M) and bootstrap confidence bands.

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "mroc/dataset.hpp"
#include "mroc/errors.hpp"
#include "mroc/gini.hpp"
#include "mroc/whitening.hpp"

namespace mroc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr std::size_t kDefaultGridSize = 512;

enum class CurveKind { per_class, aggregated, micro };

inline const char* to_string(CurveKind k) {
  switch (k) {
    case CurveKind::per_class: return "per_class";
    case CurveKind::aggregated: return "aggregated";
    case CurveKind::micro: return "micro";
  }
  return "per_class";
}

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
  double threshold = 0.0;  // +inf / -inf for the padding endpoints

  friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

/// Points run from threshold +inf at (0,0) down to (1,1). An empty curve
/// stands for a class with no positives or no negatives and has no points.
struct RocCurve {
  CurveKind kind = CurveKind::per_class;
  std::string label;
  std::vector<RocPoint> points;
  double auc = 0.0;
  bool empty = false;
  std::size_t positives = 0;
  std::size_t negatives = 0;

  friend bool operator==(const RocCurve&, const RocCurve&) = default;
};

inline double trapezoid_auc(std::span<const RocPoint> points) {
  double area = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i)
    area += (points[i].fpr - points[i - 1].fpr) * (points[i].tpr + points[i - 1].tpr) * 0.5;
  return area;
}

/// Threshold sweep over the distinct scores, predicting positive when
/// score >= threshold. `class_index` only tags the empty-class error.
inline RocCurve roc_binary(std::span<const double> scores, std::span<const int> positives,
                           int class_index = -1) {
  if (scores.size() != positives.size())
    throw ShapeError("roc", "scores and positives differ in length");
  std::size_t pos = 0;
  for (int p : positives) pos += p != 0;
  const std::size_t neg = scores.size() - pos;
  if (pos == 0 || neg == 0)
    throw EmptyClassError(class_index, std::string("class ") + std::to_string(class_index) +
                                           (pos == 0 ? " has no positive samples"
                                                     : " has no negative samples"));

  std::vector<std::size_t> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  RocCurve curve;
  curve.positives = pos;
  curve.negatives = neg;
  curve.points.push_back({0.0, 0.0, kInf});
  std::size_t tp = 0, fp = 0;
  for (std::size_t i = 0; i < order.size();) {
    const double t = scores[order[i]];
    for (; i < order.size() && scores[order[i]] == t; ++i) {
      if (positives[order[i]] != 0) ++tp; else ++fp;
    }
    curve.points.push_back({static_cast<double>(fp) / static_cast<double>(neg),
                            static_cast<double>(tp) / static_cast<double>(pos), t});
  }
  curve.auc = trapezoid_auc(curve.points);
  return curve;
}

/// Mann-Whitney estimate of P(score_pos > score_neg) + P(tie)/2 from midranks.
inline double mann_whitney_auc(std::span<const double> scores, std::span<const int> positives) {
  if (scores.size() != positives.size())
    throw ShapeError("roc", "scores and positives differ in length");
  std::vector<std::size_t> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double rank_sum = 0.0;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    const double mid = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t m = i; m < j; ++m)
      if (positives[order[m]] != 0) {
        rank_sum += mid;
        ++pos;
      }
    i = j;
  }
  const std::size_t neg = scores.size() - pos;
  if (pos == 0 || neg == 0) throw EmptyClassError(-1, "Mann-Whitney AUC needs both classes");
  const double p = static_cast<double>(pos);
  return (rank_sum - p * (p + 1.0) / 2.0) / (p * static_cast<double>(neg));
}

namespace detail {

inline std::vector<double> column(const Matrix& m, Eigen::Index c) {
  std::vector<double> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) out[static_cast<std::size_t>(r)] = m(r, c);
  return out;
}

inline std::vector<int> indicator_column(const std::vector<int>& labels, int c) {
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out[i] = labels[i] == c ? 1 : 0;
  return out;
}

}  // namespace detail

inline RocCurve empty_curve(std::string label, std::size_t positives, std::size_t negatives) {
  RocCurve c;
  c.label = std::move(label);
  c.empty = true;
  c.positives = positives;
  c.negatives = negatives;
  return c;
}

inline std::vector<RocCurve> roc_per_class(const EvaluationDataset& data) {
  std::vector<RocCurve> curves;
  const auto& names = data.classes();
  for (std::size_t c = 0; c < data.num_classes(); ++c) {
    const int ci = static_cast<int>(c);
    const auto scores = detail::column(data.scores(), ci);
    const auto positives = detail::indicator_column(data.labels(), ci);
    try {
      auto curve = roc_binary(scores, positives, ci);
      curve.label = names[c].name;
      curves.push_back(std::move(curve));
    } catch (const EmptyClassError&) {
      const std::size_t pos = data.class_counts()[c];
      curves.push_back(empty_curve(names[c].name, pos, data.num_samples() - pos));
    }
  }
  return curves;
}

/// Thresholds for the aggregated curve in decreasing order, framed by +inf
/// and -inf. With at most `grid_size` distinct pooled scores every distinct
/// score is used; otherwise the order statistics at ranks
/// floor(j (N-1) / (grid_size-1)), j = 0..grid_size-1, plus each class's
/// lowest positive score when `labels` is given, deduplicated. The anchors
/// keep the (0, 1) corner of a classifier separable by one threshold.
inline std::vector<double> threshold_grid(const Matrix& scores, std::size_t grid_size,
                                          const std::vector<int>& labels = {}) {
  if (grid_size < 2) throw DomainError("roc", "grid size must be at least 2");
  std::vector<double> pooled(scores.data(), scores.data() + scores.size());
  std::sort(pooled.begin(), pooled.end());
  std::vector<double> unique = pooled;
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  std::vector<double> grid;
  if (unique.size() <= grid_size) {
    grid = std::move(unique);
  } else {
    const std::uint64_t last = pooled.size() - 1;
    const std::uint64_t steps = grid_size - 1;
    for (std::uint64_t j = 0; j < grid_size; ++j) {
      const double v = pooled[static_cast<std::size_t>(j * last / steps)];
      if (grid.empty() || grid.back() != v) grid.push_back(v);
    }
    std::vector<double> lowest(static_cast<std::size_t>(scores.cols()), kInf);
    for (std::size_t r = 0; r < labels.size(); ++r) {
      auto& m = lowest[static_cast<std::size_t>(labels[r])];
      m = std::min(m, scores(static_cast<Eigen::Index>(r), labels[r]));
    }
    for (double v : lowest)
      if (v != kInf) grid.push_back(v);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  }
  std::reverse(grid.begin(), grid.end());
  grid.insert(grid.begin(), kInf);
  grid.push_back(-kInf);
  return grid;
}

/// Sorted positive and negative scores of one class, for O(log n) rate lookups.
struct ClassRates {
  std::vector<double> positive_scores;
  std::vector<double> negative_scores;

  ClassRates(const Matrix& scores, const std::vector<int>& labels, int c) {
    for (std::size_t r = 0; r < labels.size(); ++r)
      (labels[r] == c ? positive_scores : negative_scores)
          .push_back(scores(static_cast<Eigen::Index>(r), c));
    std::sort(positive_scores.begin(), positive_scores.end());
    std::sort(negative_scores.begin(), negative_scores.end());
  }

  bool empty() const { return positive_scores.empty() || negative_scores.empty(); }

  static double share_at_or_above(const std::vector<double>& sorted, double t) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), t);
    return static_cast<double>(sorted.end() - it) / static_cast<double>(sorted.size());
  }
  double tpr(double t) const { return share_at_or_above(positive_scores, t); }
  double fpr(double t) const { return share_at_or_above(negative_scores, t); }
};

struct AggregatedRoc {
  RocCurve curve;
  Vector weights_used;       // after dropping empty classes, sums to 1
  std::vector<int> dropped;  // classes without positives or negatives
};

/// Pointwise TPR_agg(t) = sum_i w_i TPR_i(t), FPR_agg(t) = sum_i w_i FPR_i(t)
/// over the shared threshold grid.
inline AggregatedRoc roc_aggregated(const EvaluationDataset& data, const Vector& weights,
                                    std::size_t grid_size = kDefaultGridSize) {
  const auto k = static_cast<Eigen::Index>(data.num_classes());
  if (weights.size() != k) throw ShapeError("roc", "weight vector length differs from class count");
  double total = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!(weights(i) >= 0.0) || !std::isfinite(weights(i)))
      throw DomainError("roc", "weights must be finite and nonnegative");
    total += weights(i);
  }
  if (std::abs(total - 1.0) > 1e-9) throw DomainError("roc", "weights must sum to 1");
  if (grid_size < 2) throw DomainError("roc", "grid size must be at least 2");

  std::vector<ClassRates> rates;
  AggregatedRoc out;
  out.weights_used = Vector::Zero(k);
  double kept = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    rates.emplace_back(data.scores(), data.labels(), static_cast<int>(i));
    if (rates.back().empty()) {
      out.dropped.push_back(static_cast<int>(i));
    } else {
      out.weights_used(i) = weights(i);
      kept += weights(i);
    }
  }
  if (out.dropped.size() == static_cast<std::size_t>(k))
    throw NoSignalError("roc", "every class lacks positives or negatives");
  if (!(kept > 0.0))
    throw NoSignalError("roc", "all weight sits on classes without positives or negatives");
  if (!out.dropped.empty()) out.weights_used /= kept;

  const auto grid = threshold_grid(data.scores(), grid_size, data.labels());
  RocCurve& curve = out.curve;
  curve.kind = CurveKind::aggregated;
  curve.label = "aggregated";
  curve.points.reserve(grid.size());
  for (double t : grid) {
    RocPoint p{0.0, 0.0, t};
    if (t == -kInf) {
      p.fpr = p.tpr = 1.0;
    } else if (t != kInf) {
      // Dividing by the weight sum accumulated in the same order makes
      // rates that are 1 for every class exactly 1.
      double norm = 0.0;
      for (Eigen::Index i = 0; i < k; ++i) {
        const double w = out.weights_used(i);
        if (w == 0.0) continue;
        p.fpr += w * rates[static_cast<std::size_t>(i)].fpr(t);
        p.tpr += w * rates[static_cast<std::size_t>(i)].tpr(t);
        norm += w;
      }
      p.fpr = std::min(p.fpr / norm, 1.0);
      p.tpr = std::min(p.tpr / norm, 1.0);
    }
    curve.points.push_back(p);
  }
  curve.auc = trapezoid_auc(curve.points);
  return out;
}

struct GiniAuc {
  double trapezoid = 0.0;           // area under the aggregated curve
  std::optional<double> from_gini;  // (G1 + 1) / 2 when G1 lies in [-1, 1]
  AggregatedRoc aggregated;
};

inline GiniAuc gini_auc(const EvaluationDataset& data, const GiniDecomposition& decomposition,
                        std::size_t grid_size = kDefaultGridSize) {
  GiniAuc out;
  out.aggregated = roc_aggregated(data, decomposition.weights, grid_size);
  out.trapezoid = out.aggregated.curve.auc;
  if (decomposition.aggregate >= -1.0 && decomposition.aggregate <= 1.0)
    out.from_gini = auc_from_gini(decomposition.aggregate);
  return out;
}

struct AveragedAuc {
  double value = 0.0;
  std::size_t used = 0;
  std::size_t excluded = 0;
};

inline AveragedAuc macro_auc(std::span<const RocCurve> per_class) {
  AveragedAuc out;
  double sum = 0.0;
  for (const auto& c : per_class) {
    if (c.empty) {
      ++out.excluded;
      continue;
    }
    sum += c.auc;
    ++out.used;
  }
  if (out.used == 0) throw NoSignalError("roc", "macro AUC: every per-class curve is empty");
  out.value = sum / static_cast<double>(out.used);
  return out;
}

/// Pools all n*k (score, indicator) cells into one binary problem.
inline RocCurve micro_auc(const EvaluationDataset& data) {
  const auto& s = data.scores();
  const auto& y = data.labels();
  std::vector<double> pooled;
  std::vector<int> positives;
  pooled.reserve(static_cast<std::size_t>(s.size()));
  positives.reserve(static_cast<std::size_t>(s.size()));
  for (std::size_t r = 0; r < y.size(); ++r)
    for (Eigen::Index c = 0; c < s.cols(); ++c) {
      pooled.push_back(s(static_cast<Eigen::Index>(r), c));
      positives.push_back(y[r] == c ? 1 : 0);
    }
  auto curve = roc_binary(pooled, positives);
  curve.kind = CurveKind::micro;
  curve.label = "micro";
  return curve;
}

struct MMeasure {
  double value = 0.0;
  std::size_t pairs_used = 0;
  std::vector<std::pair<int, int>> skipped;
};

/// Hand & Till M: mean over class pairs of [A(i|j) + A(j|i)] / 2, where
/// A(i|j) ranks the samples of classes i and j by the score column of i.
inline MMeasure m_measure(const EvaluationDataset& data) {
  const auto k = static_cast<int>(data.num_classes());
  const auto& s = data.scores();
  const auto& y = data.labels();
  MMeasure out;
  double sum = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (data.class_counts()[static_cast<std::size_t>(i)] == 0 ||
          data.class_counts()[static_cast<std::size_t>(j)] == 0) {
        out.skipped.emplace_back(i, j);
        continue;
      }
      std::vector<double> si, sj;
      std::vector<int> pos;
      for (std::size_t r = 0; r < y.size(); ++r) {
        if (y[r] != i && y[r] != j) continue;
        si.push_back(s(static_cast<Eigen::Index>(r), i));
        sj.push_back(s(static_cast<Eigen::Index>(r), j));
        pos.push_back(y[r] == i ? 1 : 0);
      }
      const double a_ij = mann_whitney_auc(si, pos);
      for (int& p : pos) p = 1 - p;
      const double a_ji = mann_whitney_auc(sj, pos);
      sum += 0.5 * (a_ij + a_ji);
      ++out.pairs_used;
    }
  if (out.pairs_used == 0) throw NoSignalError("roc", "M-measure: no class pair has samples on both sides");
  out.value = sum / static_cast<double>(out.pairs_used);
  return out;
}

struct AucTable {
  double gini_auc = 0.0;
  std::optional<double> gini_auc_from_g1;
  double macro_auc = 0.0;
  double micro_auc = 0.0;
  double m_measure = 0.0;
  std::vector<std::optional<double>> per_class_auc;

  friend bool operator==(const AucTable&, const AucTable&) = default;
};

/// Moments, ZCA-cor whitening, Gini weights and the aggregated curve for one
/// dataset; the unit the bootstrap repeats.
struct AggregationPipeline {
  WhiteningModel whitening;
  Vector whitened_means;
  Vector weights;
  AggregatedRoc aggregated;
};

inline AggregationPipeline run_aggregation(const EvaluationDataset& data, std::size_t grid_size,
                                           double ridge) {
  AggregationPipeline p;
  p.whitening = fit_zca_cor(estimate_moments(data.scores()), ridge);
  p.whitened_means = whitened_means(p.whitening);
  p.weights = gini_weights(p.whitened_means);
  p.aggregated = roc_aggregated(data, p.weights, grid_size);
  return p;
}

struct BootstrapConfig {
  std::size_t replicates = 1000;
  double level = 0.95;
  std::uint64_t seed = 42;
  std::size_t grid_size = kDefaultGridSize;
  double ridge = kDefaultRidge;
  std::size_t band_points = 101;
  unsigned threads = 0;  // 0: hardware concurrency

  void validate() const {
    if (replicates < 10) throw ConfigError("roc", "bootstrap needs at least 10 replicates");
    if (!(level > 0.0 && level < 1.0)) throw ConfigError("roc", "confidence level must lie in (0, 1)");
    if (grid_size < 2) throw ConfigError("roc", "grid size must be at least 2");
    if (band_points < 2) throw ConfigError("roc", "band needs at least 2 FPR grid points");
    if (!(ridge >= 0.0) || !std::isfinite(ridge)) throw ConfigError("roc", "ridge must be finite and nonnegative");
  }
};

struct ConfidenceBand {
  std::vector<double> fpr_grid;
  std::vector<double> lower;
  std::vector<double> upper;
  double level = 0.95;
  std::size_t replicates = 0;

  friend bool operator==(const ConfidenceBand&, const ConfidenceBand&) = default;
};

struct BootstrapResult {
  ConfidenceBand band;
  std::vector<double> replicate_aucs;
  double auc_std_error = 0.0;
  std::size_t discarded = 0;
  std::vector<std::size_t> class_drop_counts;  // replicates that dropped each class
};

/// TPR of a curve at a given FPR: linear between points, and the upper end of
/// any vertical segment sitting exactly at `fpr`.
inline double tpr_at(const RocCurve& curve, double fpr) {
  const auto& pts = curve.points;
  if (pts.empty()) throw DomainError("roc", "interpolating an empty curve");
  auto hi = std::upper_bound(pts.begin(), pts.end(), fpr,
                             [](double f, const RocPoint& p) { return f < p.fpr; });
  if (hi == pts.begin()) return hi->tpr;
  const auto& left = *(hi - 1);
  if (left.fpr == fpr || hi == pts.end()) return left.tpr;
  const double span = hi->fpr - left.fpr;
  return left.tpr + (hi->tpr - left.tpr) * (fpr - left.fpr) / span;
}

/// Type-7 sample quantile of sorted values.
inline double sorted_quantile(const std::vector<double>& sorted, double q) {
  const double h = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

namespace detail {

struct Replicate {
  std::vector<double> tpr;
  double auc = 0.0;
  std::size_t attempts = 0;
  std::vector<int> dropped;
  bool ok = false;
};

inline Replicate run_replicate(const EvaluationDataset& data, const BootstrapConfig& cfg,
                               const std::vector<double>& fpr_grid, std::size_t index,
                               std::size_t max_attempts) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::size_t> pick(0, data.num_samples() - 1);
  std::vector<std::size_t> rows(data.num_samples());
  Replicate rep;
  while (rep.attempts < max_attempts) {
    ++rep.attempts;
    for (auto& r : rows) r = pick(rng);
    try {
      const auto sample = data.resample(rows);
      const auto p = run_aggregation(sample, cfg.grid_size, cfg.ridge);
      rep.tpr.resize(fpr_grid.size());
      for (std::size_t g = 0; g < fpr_grid.size(); ++g)
        rep.tpr[g] = tpr_at(p.aggregated.curve, fpr_grid[g]);
      rep.auc = p.aggregated.curve.auc;
      rep.dropped = p.aggregated.dropped;
      rep.ok = true;
      return rep;
    } catch (const NoSignalError&) {
    } catch (const DegenerateError&) {
    }
  }
  return rep;
}

}  // namespace detail

/// Resamples rows with replacement and reruns moments, whitening, weights and
/// aggregation per replicate. Replicate r draws from its own stream seeded by
/// (seed, r), so results do not depend on thread scheduling.
inline BootstrapResult bootstrap_band(const EvaluationDataset& data, const BootstrapConfig& cfg) {
  cfg.validate();
  const std::size_t B = cfg.replicates;
  const std::size_t max_attempts = 10 * B;

  BootstrapResult out;
  out.band.level = cfg.level;
  out.band.replicates = B;
  out.band.fpr_grid.resize(cfg.band_points);
  for (std::size_t g = 0; g < cfg.band_points; ++g)
    out.band.fpr_grid[g] = static_cast<double>(g) / static_cast<double>(cfg.band_points - 1);

  std::vector<detail::Replicate> reps(B);
  unsigned nthreads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = static_cast<unsigned>(std::min<std::size_t>(nthreads, B));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t r; (r = next.fetch_add(1)) < B && !failed;) {
      try {
        reps[r] = detail::run_replicate(data, cfg, out.band.fpr_grid, r, max_attempts);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::size_t attempts = 0;
  out.class_drop_counts.assign(data.num_classes(), 0);
  for (const auto& rep : reps) {
    attempts += rep.attempts;
    if (!rep.ok || attempts > max_attempts)
      throw NoSignalError("roc", "bootstrap exceeded " + std::to_string(max_attempts) +
                                     " attempts without enough usable replicates");
    out.discarded += rep.attempts - 1;
    for (int c : rep.dropped) ++out.class_drop_counts[static_cast<std::size_t>(c)];
    out.replicate_aucs.push_back(rep.auc);
  }

  const double lo_q = (1.0 - cfg.level) / 2.0;
  const double hi_q = (1.0 + cfg.level) / 2.0;
  std::vector<double> column(B);
  for (std::size_t g = 0; g < cfg.band_points; ++g) {
    for (std::size_t r = 0; r < B; ++r) column[r] = reps[r].tpr[g];
    std::sort(column.begin(), column.end());
    out.band.lower.push_back(std::clamp(sorted_quantile(column, lo_q), 0.0, 1.0));
    out.band.upper.push_back(std::clamp(sorted_quantile(column, hi_q), 0.0, 1.0));
  }

  double mean = 0.0;
  for (double a : out.replicate_aucs) mean += a;
  mean /= static_cast<double>(B);
  double ss = 0.0;
  for (double a : out.replicate_aucs) ss += (a - mean) * (a - mean);
  out.auc_std_error = std::sqrt(ss / static_cast<double>(B - 1));
  return out;
}

/// `fpr,tpr,threshold` rows; infinite thresholds print as inf / -inf.
inline std::string format_curve_csv(const RocCurve& curve) {
  std::string out = "fpr,tpr,threshold\n";
  for (const auto& p : curve.points) {
    out += format_double(p.fpr) + "," + format_double(p.tpr) + ",";
    if (std::isinf(p.threshold)) out += p.threshold > 0 ? "inf" : "-inf";
    else out += format_double(p.threshold);
    out += "\n";
  }
  return out;
}

}  // namespace mroc
