#include "mroc/whitening.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace mroc {
namespace {

Matrix mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

TEST(EstimateMoments, TwoByTwoByHand) {
  const auto m = estimate_moments(mat2(0, 1, 1, 0));
  EXPECT_DOUBLE_EQ(m.mean(0), 0.5);
  EXPECT_DOUBLE_EQ(m.mean(1), 0.5);
  EXPECT_LT(testing::max_abs_diff(m.covariance, mat2(0.5, -0.5, -0.5, 0.5)), 1e-15);
  EXPECT_LT(testing::max_abs_diff(m.correlation, mat2(1, -1, -1, 1)), 1e-15);
}

TEST(EstimateMoments, ConstantColumnFlagged) {
  Matrix s(3, 2);
  s << 1, 0.2, 2, 0.2, 4, 0.2;
  const auto m = estimate_moments(s);
  EXPECT_EQ(m.variances(1), 0.0);
  EXPECT_EQ(m.degenerate_columns, (std::vector<int>{1}));
  EXPECT_EQ(m.correlation(0, 1), 0.0);
  EXPECT_EQ(m.correlation(1, 1), 1.0);
}

TEST(EstimateMoments, NeedsTwoRows) {
  EXPECT_THROW(estimate_moments(Matrix::Ones(1, 3)), InsufficientDataError);
}

TEST(EstimateMoments, IndependentColumnsUncorrelated) {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix s(100000, 3);
  for (Eigen::Index r = 0; r < s.rows(); ++r) {
    s(r, 0) = g(rng);
    s(r, 1) = u(rng);
    s(r, 2) = std::exp(g(rng));
  }
  const auto m = estimate_moments(s);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j)
      if (i != j) {
        EXPECT_LT(std::abs(m.correlation(i, j)), 0.05);
      }
}

TEST(InverseSqrt, IdentityAndDiagonal) {
  EXPECT_LT(testing::max_abs_diff(inverse_sqrt_symmetric(Matrix::Identity(4, 4)), Matrix::Identity(4, 4)), 1e-15);
  const Matrix r = inverse_sqrt_symmetric(mat2(4, 0, 0, 9));
  EXPECT_NEAR(r(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(r(1, 1), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(r(0, 1), 0.0, 1e-15);
}

TEST(InverseSqrt, WhitensCorrelation) {
  const Matrix p = mat2(1, 0.5, 0.5, 1);
  const Matrix r = inverse_sqrt_symmetric(p);
  EXPECT_LT(testing::max_abs_diff(r * p * r, Matrix::Identity(2, 2)), 1e-10);
}

TEST(InverseSqrt, SquareTimesInputIsIdentity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index k = 2 + trial % 9;
    const Matrix m = testing::random_spd(rng, k);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
    ASSERT_LE(eig.eigenvalues().maxCoeff() / eig.eigenvalues().minCoeff(), 1e6);
    const Matrix r = inverse_sqrt_symmetric(m);
    EXPECT_LT(testing::max_abs_diff(r * r * m, Matrix::Identity(k, k)), 1e-8) << "trial " << trial;
  }
}

TEST(InverseSqrt, RejectsNonSymmetric) {
  EXPECT_THROW(inverse_sqrt_symmetric(mat2(1, 0.5, 0.2, 1)), ShapeError);
  EXPECT_THROW(inverse_sqrt_symmetric(Matrix::Ones(2, 3)), ShapeError);
}

TEST(InverseSqrt, FloorsSingularSpectrum) {
  const auto res = inverse_sqrt_symmetric_ex(mat2(1, 1, 1, 1));
  EXPECT_EQ(res.floored, 1);
  EXPECT_DOUBLE_EQ(res.floor, 2e-10);
  EXPECT_TRUE(res.matrix.allFinite());
}

TEST(FitZcaCor, IdentityMoments) {
  const auto m = moments_from_covariance(Vector::Zero(3), Matrix::Identity(3, 3));
  const auto w = fit_zca_cor(m, 0.0);
  EXPECT_LT(testing::max_abs_diff(w.matrix, Matrix::Identity(3, 3)), 1e-15);
}

TEST(FitZcaCor, UncorrelatedIsStandardization) {
  Vector var(3);
  var << 4.0, 0.25, 9.0;
  const auto w = fit_zca_cor(moments_from_covariance(Vector::Ones(3), var.asDiagonal()), 0.0);
  Matrix expected = Matrix::Zero(3, 3);
  expected.diagonal() << 0.5, 2.0, 1.0 / 3.0;
  EXPECT_LT(testing::max_abs_diff(w.matrix, expected), 1e-15);
}

TEST(FitZcaCor, RejectsAllZeroVarianceAndNegativeRidge) {
  EXPECT_THROW(fit_zca_cor(estimate_moments(Matrix::Ones(4, 3))), DegenerateError);
  EXPECT_THROW(fit_zca_cor(moments_from_covariance(Vector::Zero(2), Matrix::Identity(2, 2)), -1.0), DomainError);
}

TEST(FitZcaCor, ConstantColumnDoesNotAbort) {
  Matrix s(4, 3);
  s << 0.1, 0.5, 1, 0.4, 0.2, 1, 0.3, 0.9, 1, 0.8, 0.1, 1;
  const auto w = fit_zca_cor(estimate_moments(s));
  EXPECT_TRUE(w.matrix.allFinite());
}

// Indicator columns plus small noise: P is close to singular because the
// indicators sum to one, so the eigenvalue floor and ridge matter.
TEST(FitZcaCor, OneHotPlusNoiseNearSingular) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> noise(0.0, 0.1);
  const auto y = testing::draw_labels(rng, 3000, 3, {0.5, 0.3, 0.2}, 5);
  Matrix s(3000, 3);
  for (Eigen::Index r = 0; r < s.rows(); ++r)
    for (Eigen::Index c = 0; c < 3; ++c) s(r, c) = (y[static_cast<std::size_t>(r)] == c ? 1.0 : 0.0) + noise(rng);
  const auto w = fit_zca_cor(estimate_moments(s));
  EXPECT_TRUE(w.matrix.allFinite());
  EXPECT_EQ(w.ridge, kDefaultRidge);
  const auto out = estimate_moments(whiten(w, s));
  EXPECT_LT(testing::max_abs_diff(out.covariance, Matrix::Identity(3, 3)), 1e-6);
}

// Exactly rank-deficient softmax rows: the whitened covariance is the
// identity on the data's span, i.e. a projector of rank k - 1.
TEST(FitZcaCor, RankDeficientSoftmaxStaysFinite) {
  const auto d = testing::softmax_dataset(8, 1500, 4);
  const auto w = fit_zca_cor(estimate_moments(d.scores()));
  EXPECT_TRUE(w.matrix.allFinite());
  EXPECT_GE(w.floored_eigenvalues, 0);
  const Matrix c = estimate_moments(whiten(w, d.scores())).covariance;
  EXPECT_LT(testing::max_abs_diff(c * c, c), 1e-6);
  EXPECT_NEAR(c.trace(), 3.0, 1e-6);
}

TEST(Whiten, IdentityLeavesInputAndChecksShape) {
  const auto w = fit_zca_cor(moments_from_covariance(Vector::Zero(2), Matrix::Identity(2, 2)), 0.0);
  const Matrix s = mat2(0.3, -1.5, 7, 2);
  EXPECT_EQ(whiten(w, s), s);
  EXPECT_THROW(whiten(w, Matrix::Ones(2, 3)), ShapeError);
}

TEST(Whiten, FittingDataHasUnitVariance) {
  const auto d = testing::random_dataset(77, 800, 5);
  const auto w = fit_zca_cor(estimate_moments(d.scores()));
  const auto m = estimate_moments(whiten(w, d.scores()));
  for (Eigen::Index i = 0; i < 5; ++i) EXPECT_NEAR(m.variances(i), 1.0, 1e-6);
}

TEST(WhiteningProperties, ConditionsOnRandomSpd) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index k = 2 + trial % 11;
    const Matrix sigma = testing::random_spd(rng, k);
    const auto w = fit_zca_cor(moments_from_covariance(Vector::Zero(k), sigma), 0.0);
    const Matrix& W = w.matrix;
    EXPECT_LT(testing::max_abs_diff(W * sigma * W.transpose(), Matrix::Identity(k, k)), 1e-8);
    EXPECT_LT(testing::max_abs_diff(W.transpose() * W * sigma, Matrix::Identity(k, k)), 1e-8);

    // ZCA-cor, not some other rotation: W V^{1/2} must be the symmetric
    // inverse root of P.
    const Vector sd = sigma.diagonal().cwiseSqrt();
    const Matrix p = sd.cwiseInverse().asDiagonal() * sigma * sd.cwiseInverse().asDiagonal();
    const Matrix root = W * sd.asDiagonal();
    EXPECT_LT(testing::max_abs_diff(root, root.transpose()), 1e-8);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(root);
    EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0);
    EXPECT_LT(testing::max_abs_diff(root * p * root, Matrix::Identity(k, k)), 1e-8);
  }
}

TEST(WhiteningProperties, ScaleInvariance) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto d = testing::random_dataset(seed, 300, 2 + seed % 6);
    const Matrix& s = d.scores();
    Vector dvec(s.cols());
    for (Eigen::Index i = 0; i < dvec.size(); ++i) dvec(i) = scale(rng);
    const Matrix scaled = s * dvec.asDiagonal();
    const Matrix a = whiten(fit_zca_cor(estimate_moments(s)), s);
    const Matrix b = whiten(fit_zca_cor(estimate_moments(scaled)), scaled);
    EXPECT_LT(testing::max_abs_diff(a, b), 1e-8) << "seed " << seed;
  }
  const auto d = testing::random_dataset(50, 400, 3);
  Matrix five = d.scores();
  five.col(1) *= 5.0;
  EXPECT_LT(testing::max_abs_diff(whiten(fit_zca_cor(estimate_moments(d.scores())), d.scores()),
                                  whiten(fit_zca_cor(estimate_moments(five)), five)),
            1e-8);
}

TEST(WhiteningModel, ResidualsSmallForSpd) {
  const auto d = testing::random_dataset(3, 500, 4);
  const auto w = fit_zca_cor(estimate_moments(d.scores()), 0.0);
  EXPECT_LT(w.whitening_residual(), 1e-10);
  EXPECT_LT(w.inverse_residual(), 1e-10);
}

}  // namespace
}  // namespace mroc
