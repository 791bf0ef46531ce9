#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sbound/certify.hpp"
#include "sbound/csdecomp.hpp"
#include "sbound/errors.hpp"
#include "sbound/pluecker.hpp"

using namespace sbound;

namespace {

constexpr double kPi = std::numbers::pi;

double orth_error(const Eigen::Matrix2d& q) {
  return (q.transpose() * q - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff();
}

void expect_valid(const CSFactors& f, const StiefelMatrix& a) {
  EXPECT_LE(orth_error(f.q1), 1e-12);
  EXPECT_LE(orth_error(f.q2), 1e-12);
  EXPECT_LE(orth_error(f.q3), 1e-12);
  EXPECT_GE(f.alpha, 0.0);
  EXPECT_LE(f.alpha, f.beta);
  EXPECT_LE(f.beta, kPi / 2);
  EXPECT_LT((cs_reconstruct(f) - a.matrix()).cwiseAbs().maxCoeff(), 1e-10);
}

}  // namespace

TEST(CsDecompose, IdentityEmbedding) {
  const StiefelMatrix a(DenseMatrix::Identity(4, 2));
  const CSFactors f = cs_decompose(a);
  EXPECT_EQ(f.alpha, 0.0);
  EXPECT_EQ(f.beta, 0.0);
  EXPECT_LE((f.q1 - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE((f.q3 - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff(), 1e-15);
  expect_valid(f, a);
}

TEST(CsDecompose, ExtremalMatrix) {
  // Top block Gram diag(1, 1/4): cosines 1 and 1/2.
  const StiefelMatrix a(extremal_matrix());
  const CSFactors f = cs_decompose(a);
  EXPECT_NEAR(f.alpha, 0.0, 1e-8);
  EXPECT_NEAR(f.beta, kPi / 3, 1e-14);
  expect_valid(f, a);
}

TEST(CsDecompose, HaarSamples) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const StiefelMatrix a = haar_sample(4, 2, seed);
    expect_valid(cs_decompose(a), a);
  }
}

TEST(CsDecompose, VanishingSineCompletion) {
  // α = 0 exactly: the first column lies in the top block, so q2's first
  // column must come from orthogonal completion.
  const double c = 0.3;
  const double s = std::sqrt(1 - c * c);
  DenseMatrix m(4, 2);
  m << 0.6, -0.8 * c,  //
      0.8, 0.6 * c,    //
      0.0, 0.6 * s,    //
      0.0, 0.8 * s;
  const StiefelMatrix a(m);
  const CSFactors f = cs_decompose(a);
  EXPECT_NEAR(f.alpha, 0.0, 1e-12);
  EXPECT_GT(f.q2.determinant(), 0.0);
  expect_valid(f, a);
}

TEST(CsDecompose, RejectsOtherShapes) {
  EXPECT_THROW(cs_decompose(haar_sample(5, 2, 0)), DimensionError);
}

TEST(MinorsFromCs, Examples) {
  CSMinors m = minors_from_cs(0.0, kPi / 3);
  EXPECT_NEAR(m.m_top, 0.5, 1e-15);
  EXPECT_EQ(m.m_bottom, 0.0);
  m = minors_from_cs(kPi / 6, kPi / 3);
  EXPECT_NEAR(m.m_top, std::sqrt(3.0) / 4, 1e-15);
  EXPECT_NEAR(m.m_bottom, std::sqrt(3.0) / 4, 1e-15);
  m = minors_from_cs(0.0, 0.0);
  EXPECT_EQ(m.m_top, 1.0);
  EXPECT_EQ(m.m_bottom, 0.0);
}

TEST(MinorsFromCs, AgreeWithPlueckerOnExtremal) {
  const StiefelMatrix a(extremal_matrix());
  const CSMinors m = minors_from_cs(cs_decompose(a));
  const PlueckerCoords p = pluecker4x2(a);
  EXPECT_NEAR(m.m_top, std::abs(p.p12), 1e-12);
  EXPECT_NEAR(m.m_bottom, std::abs(p.p34), 1e-12);
}
