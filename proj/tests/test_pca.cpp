#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "densilex/pca.hpp"
#include "densilex/util.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace densilex {
namespace {

EmbeddingTable table_from(const RowMatrix& m) {
  std::vector<std::string> vocab;
  for (Eigen::Index i = 0; i < m.rows(); ++i) vocab.push_back("w" + std::to_string(i));
  return EmbeddingTable(vocab, m);
}

TEST(FitPca1, FourPointsOnALine) {
  RowMatrix m(4, 2);
  m << 1, 0, -1, 0, 2, 0, -2, 0;
  auto p = fit_pca1(table_from(m));
  EXPECT_NEAR(p.axis[0], 1.0, 1e-12);
  EXPECT_NEAR(p.axis[1], 0.0, 1e-12);
  EXPECT_NEAR(p.explained_variance, 10.0 / 3.0, 1e-12);
  EXPECT_NEAR(p.mean.norm(), 0.0, 1e-15);
}

TEST(FitPca1, DiagonalPoints) {
  RowMatrix m(4, 2);
  m << 1, 1, -1, -1, 2, 2, -2, -2;
  auto p = fit_pca1(table_from(m));
  EXPECT_NEAR(p.axis[0], std::sqrt(2.0) / 2, 1e-12);
  EXPECT_NEAR(p.axis[1], std::sqrt(2.0) / 2, 1e-12);
}

TEST(FitPca1, Errors) {
  RowMatrix one(1, 3);
  one << 1, 2, 3;
  EXPECT_THROW(fit_pca1(table_from(one)), InvalidArgument);
  RowMatrix same(3, 2);
  same << 1, 2, 1, 2, 1, 2;
  EXPECT_THROW(fit_pca1(table_from(same)), TrainingError);
}

TEST(PcaScore, ProjectsCenteredVectors) {
  RowMatrix m(2, 2);
  m << 1, 0, -1, 0;
  const auto t = table_from(m);
  const auto p = fit_pca1(t);
  EXPECT_NEAR(pca_score(p, t, "w0"), 1.0, 1e-12);
  EXPECT_NEAR(pca_score(p, t, "w1"), -1.0, 1e-12);
  EXPECT_THROW(pca_score(p, t, "nope"), NotFoundError);
}

TEST(PcaScore, WordAtMeanScoresZero) {
  RowMatrix m(3, 2);
  m << 1, 2, -1, 0, 0, 1;
  const auto t = table_from(m);
  EXPECT_NEAR(pca_score(fit_pca1(t), t, "w2"), 0.0, 1e-15);
}

RowMatrix random_cloud(std::mt19937_64& rng, int n, int d) {
  std::normal_distribution<double> g(0.0, 1.0);
  RowMatrix m(n, d);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
  for (int j = 0; j < d; ++j) m.col(j) *= (d - j);  // distinct variances
  return m;
}

TEST(FitPca1, TranslationInvariant) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const RowMatrix m = random_cloud(rng, 40, 5);
    Eigen::RowVectorXd shift = Eigen::RowVectorXd::LinSpaced(5, -30, 70);
    const RowMatrix moved = m.rowwise() + shift;
    const auto a = fit_pca1(table_from(m));
    const auto b = fit_pca1(table_from(moved));
    EXPECT_LE((a.axis - b.axis).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_NEAR(a.explained_variance, b.explained_variance,
                1e-9 * a.explained_variance);
  }
}

TEST(FitPca1, ScoreVarianceEqualsExplainedVariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = table_from(random_cloud(rng, 30, 4));
    const auto p = fit_pca1(t);
    EXPECT_NEAR(p.axis.norm(), 1.0, 1e-12);
    double sum = 0.0, sq = 0.0;
    for (const auto& w : t.vocab()) {
      const double s = pca_score(p, t, w);
      sum += s;
      sq += s * s;
    }
    const double n = static_cast<double>(t.size());
    EXPECT_NEAR(sum / n, 0.0, 1e-9);
    EXPECT_NEAR(sq / (n - 1), p.explained_variance, 1e-9 * p.explained_variance);
  }
}

TEST(FitPca1, MatchesTwoByTwoClosedForm) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const RowMatrix m = random_cloud(rng, 25, 2);
    const Eigen::RowVector2d mean = m.colwise().mean();
    const RowMatrix c = m.rowwise() - mean;
    const double n1 = static_cast<double>(m.rows() - 1);
    const double a = c.col(0).squaredNorm() / n1;
    const double d = c.col(1).squaredNorm() / n1;
    const double b = c.col(0).dot(c.col(1)) / n1;
    const double lambda = (a + d) / 2 + std::sqrt((a - d) * (a - d) / 4 + b * b);
    Eigen::Vector2d v = std::abs(b) > 1e-12 ? Eigen::Vector2d(lambda - d, b)
                                            : Eigen::Vector2d(a >= d ? 1 : 0, a >= d ? 0 : 1);
    v.normalize();
    const auto p = fit_pca1(table_from(m));
    EXPECT_NEAR(p.explained_variance, lambda, 1e-9 * lambda);
    EXPECT_NEAR(std::abs(p.axis.dot(v)), 1.0, 1e-9);
  }
}

TEST(FitPca1, MatchesPowerIterationOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const RowMatrix m = random_cloud(rng, 60, 8);
    const RowMatrix c = m.rowwise() - m.colwise().mean();
    const Eigen::MatrixXd cov = c.transpose() * c / static_cast<double>(m.rows() - 1);
    const Eigen::VectorXd v = testing::power_iteration(cov);
    const auto p = fit_pca1(table_from(m));
    EXPECT_NEAR(std::abs(p.axis.dot(v)), 1.0, 1e-8);
    EXPECT_NEAR(p.explained_variance, v.dot(cov * v), 1e-8 * p.explained_variance);
  }
}

TEST(FitPca1, SignConvention) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = fit_pca1(table_from(random_cloud(rng, 20, 6)));
    Eigen::Index i;
    p.axis.cwiseAbs().maxCoeff(&i);
    EXPECT_GT(p.axis[i], 0.0);
  }
}

TEST(FitPca1, PicksDistractorOnAnisotropicTable) {
  const auto f = testing::anisotropic_fixture(10.0);
  const auto p = fit_pca1(f.table);
  EXPECT_GE(std::abs(p.axis[static_cast<Eigen::Index>(f.distractor_axis)]), 0.9);
}

}  // namespace
}  // namespace densilex
