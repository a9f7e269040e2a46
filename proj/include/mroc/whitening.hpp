#pragma once

// Sample moments of a score matrix and the ZCA-cor whitening transform
// W = P^{-1/2} V^{-1/2}.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "mroc/dataset.hpp"
#include "mroc/errors.hpp"

namespace mroc {

inline constexpr double kRelativeEigenFloor = 1e-10;
inline constexpr double kDefaultRidge = 1e-8;

struct MomentEstimates {
  Vector mean;        // k
  Matrix covariance;  // k x k, 1/(n-1) estimator
  Vector variances;   // diagonal of covariance
  Matrix correlation; // k x k, unit diagonal
  std::vector<int> degenerate_columns;  // zero variance

  Matrix variance_matrix() const { return variances.asDiagonal(); }
  Eigen::Index dimension() const { return mean.size(); }
};

namespace detail {

inline Matrix correlation_from_covariance(const Matrix& cov, std::vector<int>& degenerate) {
  const auto k = cov.rows();
  degenerate.clear();
  for (Eigen::Index i = 0; i < k; ++i)
    if (!(cov(i, i) > 0.0)) degenerate.push_back(static_cast<int>(i));
  Matrix p = Matrix::Identity(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      if (i == j || !(cov(i, i) > 0.0) || !(cov(j, j) > 0.0)) continue;
      const double r = cov(i, j) / std::sqrt(cov(i, i) * cov(j, j));
      p(i, j) = std::clamp(r, -1.0, 1.0);
    }
  return p;
}

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace detail

inline MomentEstimates estimate_moments(const Matrix& scores) {
  const auto n = scores.rows();
  if (n < 2)
    throw InsufficientDataError("whitening", "moment estimation needs at least 2 rows, got " +
                                                 std::to_string(n));
  if (!scores.allFinite()) throw ValidationError("whitening", "score matrix has non-finite entries");

  MomentEstimates m;
  m.mean = scores.colwise().mean().transpose();
  const Matrix centered = scores.rowwise() - m.mean.transpose();
  Matrix cov = (centered.transpose() * centered) / static_cast<double>(n - 1);
  // A constant column can leave rounding residue in its centered values.
  for (Eigen::Index c = 0; c < scores.cols(); ++c)
    if (scores.col(c).minCoeff() == scores.col(c).maxCoeff()) {
      cov.row(c).setZero();
      cov.col(c).setZero();
    }
  m.covariance = 0.5 * (cov + cov.transpose());
  m.variances = m.covariance.diagonal();
  m.correlation = detail::correlation_from_covariance(m.covariance, m.degenerate_columns);
  return m;
}

/// Moments from a known mean and covariance rather than from data.
inline MomentEstimates moments_from_covariance(const Vector& mean, const Matrix& covariance) {
  if (covariance.rows() != covariance.cols() || covariance.rows() != mean.size())
    throw ShapeError("whitening", "mean and covariance dimensions disagree");
  MomentEstimates m;
  m.mean = mean;
  m.covariance = 0.5 * (covariance + covariance.transpose());
  m.variances = m.covariance.diagonal();
  m.correlation = detail::correlation_from_covariance(m.covariance, m.degenerate_columns);
  return m;
}

struct InverseSqrtResult {
  Matrix matrix;
  double floor = 0.0;
  int floored = 0;  // eigenvalues raised to the floor
};

/// U diag(max(lambda, floor))^{-1/2} U^T. Without an explicit floor the floor
/// is kRelativeEigenFloor * lambda_max.
inline InverseSqrtResult inverse_sqrt_symmetric_ex(const Matrix& m,
                                                   std::optional<double> floor = std::nullopt) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw ShapeError("whitening", "inverse square root needs a non-empty square matrix");
  const double scale = std::max(detail::max_abs(m), 1.0);
  if (detail::max_abs(m - m.transpose()) > 1e-10 * scale)
    throw ShapeError("whitening", "inverse square root input is not symmetric");

  const Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
  if (eig.info() != Eigen::Success)
    throw NumericalError("whitening", "symmetric eigendecomposition failed");

  const Vector& lambda = eig.eigenvalues();
  const double lambda_max = lambda.maxCoeff();
  InverseSqrtResult out;
  out.floor = floor ? *floor : kRelativeEigenFloor * lambda_max;
  Vector inv_root(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    double l = lambda(i);
    if (l < out.floor) {
      l = out.floor;
      ++out.floored;
    }
    if (!(l > 0.0))
      throw NumericalError("whitening", "matrix is not positive definite and no floor applies");
    inv_root(i) = 1.0 / std::sqrt(l);
  }
  const Matrix& u = eig.eigenvectors();
  Matrix r = u * inv_root.asDiagonal() * u.transpose();
  out.matrix = 0.5 * (r + r.transpose());
  return out;
}

inline Matrix inverse_sqrt_symmetric(const Matrix& m, std::optional<double> floor = std::nullopt) {
  return inverse_sqrt_symmetric_ex(m, floor).matrix;
}

struct WhiteningModel {
  MomentEstimates moments;
  Matrix matrix;                  // W
  Matrix regularized_covariance;  // Sigma_r = V^{1/2} P_r V^{1/2}
  double ridge = 0.0;
  double eigen_floor = 0.0;
  int floored_eigenvalues = 0;
  double variance_floor = 0.0;
  std::string method = "zca-cor";

  Eigen::Index dimension() const { return matrix.rows(); }

  /// max |W Sigma_r W^T - I|
  double whitening_residual() const {
    const auto k = matrix.rows();
    return detail::max_abs(matrix * regularized_covariance * matrix.transpose() -
                           Matrix::Identity(k, k));
  }
  /// max |W^T W Sigma_r - I|
  double inverse_residual() const {
    const auto k = matrix.rows();
    return detail::max_abs(matrix.transpose() * matrix * regularized_covariance -
                           Matrix::Identity(k, k));
  }
};

/// W = (P + ridge I renormalized to unit diagonal)^{-1/2} V^{-1/2}.
/// Zero-variance columns take the variance floor kRelativeEigenFloor * max V;
/// every other column keeps its own variance so column scaling cancels.
inline WhiteningModel fit_zca_cor(const MomentEstimates& moments, double ridge = kDefaultRidge) {
  if (!(ridge >= 0.0) || !std::isfinite(ridge))
    throw DomainError("whitening", "ridge must be a finite nonnegative number");
  const auto k = moments.dimension();
  if (k == 0) throw ShapeError("whitening", "empty moment estimates");
  const double vmax = moments.variances.maxCoeff();
  if (!(vmax > 0.0))
    throw DegenerateError("whitening", "all score columns have zero variance");

  WhiteningModel model;
  model.moments = moments;
  model.ridge = ridge;
  model.variance_floor = kRelativeEigenFloor * vmax;

  Vector sd(k);
  for (Eigen::Index i = 0; i < k; ++i)
    sd(i) = std::sqrt(moments.variances(i) > 0.0 ? moments.variances(i) : model.variance_floor);

  const Matrix p_reg =
      (moments.correlation + ridge * Matrix::Identity(k, k)) / (1.0 + ridge);
  const auto root = inverse_sqrt_symmetric_ex(p_reg);
  model.eigen_floor = root.floor;
  model.floored_eigenvalues = root.floored;
  model.matrix = root.matrix * sd.cwiseInverse().asDiagonal();
  model.regularized_covariance = sd.asDiagonal() * p_reg * sd.asDiagonal();
  if (!model.matrix.allFinite())
    throw NumericalError("whitening", "whitening matrix has non-finite entries");
  return model;
}

/// Row i of the result is W * (row i of scores).
inline Matrix whiten(const WhiteningModel& model, const Matrix& scores) {
  if (scores.cols() != model.dimension())
    throw ShapeError("whitening", "score matrix has " + std::to_string(scores.cols()) +
                                      " columns, model expects " +
                                      std::to_string(model.dimension()));
  return scores * model.matrix.transpose();
}

}  // namespace mroc
