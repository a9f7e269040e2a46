#pragma once

// Univariate sample Gini index and the multidimensional Gini of whitened
// scores, whose normalized whitened means give the class weights.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "mroc/errors.hpp"
#include "mroc/whitening.hpp"

namespace mroc {

/// Relative mean absolute difference sum_ij |x_i - x_j| / (2 n^2 |mean|),
/// evaluated in O(n log n) from the sorted values.
inline double gini_univariate(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) throw DomainError("gini", "Gini index of an empty sample");
  std::vector<double> x(values.begin(), values.end());
  double max_abs = 0.0;
  for (double v : x) {
    if (!std::isfinite(v)) throw DomainError("gini", "Gini index of non-finite values");
    max_abs = std::max(max_abs, std::abs(v));
  }
  std::stable_sort(x.begin(), x.end());

  double sum = 0.0;
  for (double v : x) sum += v;
  const double mean = sum / static_cast<double>(n);
  if (!(std::abs(mean) > 1e-15 * max_abs) || max_abs == 0.0)
    throw DomainError("gini", "Gini index undefined for a sample with zero mean");

  // sum_{i<j} (x_(j) - x_(i)) = sum_j (2j - n + 1) x_(j), 0-based.
  double pair_sum = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    pair_sum += (2.0 * static_cast<double>(j) - static_cast<double>(n) + 1.0) * x[j];
  const double nn = static_cast<double>(n);
  return 2.0 * pair_sum / (2.0 * nn * nn * std::abs(mean));
}

inline double gini_univariate(const Vector& values) {
  return gini_univariate(std::span<const double>(values.data(), static_cast<std::size_t>(values.size())));
}

inline Vector whitened_means(const WhiteningModel& model) {
  return model.matrix * model.moments.mean;
}

/// Convex class weights |m*_i| / sum_j |m*_j|.
inline Vector gini_weights(const Vector& whitened_means) {
  const Vector abs_means = whitened_means.cwiseAbs();
  double total = 0.0;
  for (Eigen::Index i = 0; i < abs_means.size(); ++i) total += abs_means(i);
  if (!(total > 0.0) || !std::isfinite(total))
    throw DegenerateError("gini", "all whitened means are zero; class weights are undefined");
  return abs_means / total;
}

struct GiniDecomposition {
  Vector per_class_gini;
  Vector whitened_means;  // m* = W m
  Vector weights;         // |m*_i| / sum_j |m*_j|
  double aggregate = 0.0; // sum_i w_i G_i
};

/// `class_names` only labels error messages and may be empty.
inline GiniDecomposition multidimensional_gini(const WhiteningModel& model, const Matrix& scores,
                                               const std::vector<std::string>& class_names = {}) {
  const Matrix whitened = whiten(model, scores);
  const auto k = model.dimension();
  auto name_of = [&](Eigen::Index i) {
    return static_cast<std::size_t>(i) < class_names.size()
               ? "'" + class_names[static_cast<std::size_t>(i)] + "'"
               : "#" + std::to_string(i);
  };

  GiniDecomposition out;
  out.whitened_means = whitened_means(model);
  out.weights = gini_weights(out.whitened_means);

  out.per_class_gini.resize(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Vector col = whitened.col(i);
    try {
      out.per_class_gini(i) = gini_univariate(col);
    } catch (const DomainError& e) {
      throw DegenerateError("gini", "whitened column for class " + name_of(i) + ": " + e.what());
    }
  }
  double agg = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) agg += out.weights(i) * out.per_class_gini(i);
  out.aggregate = agg;
  return out;
}

inline double gini_from_auc(double auc) {
  if (!(auc >= 0.0 && auc <= 1.0)) throw DomainError("gini", "AUC must lie in [0, 1]");
  return 2.0 * auc - 1.0;
}

inline double auc_from_gini(double g) {
  if (!(g >= -1.0 && g <= 1.0)) throw DomainError("gini", "Gini index must lie in [-1, 1]");
  return (g + 1.0) / 2.0;
}

}  // namespace mroc
