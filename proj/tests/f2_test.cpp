#include "homm/f2.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace homm;
using f2::BitMatrix;
using f2::BitVec;

TEST(Rref, IdentityIsFixedPoint) {
  BitMatrix id = BitMatrix::identity(3);
  auto rr = f2::rref(id);
  EXPECT_EQ(rr.reduced, id);
  EXPECT_EQ(rr.rank, 3u);
  EXPECT_EQ(rr.pivot_cols, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, ZeroMatrix) {
  BitMatrix z(2, 4);
  auto rr = f2::rref(z);
  EXPECT_EQ(rr.reduced, z);
  EXPECT_EQ(rr.rank, 0u);
  EXPECT_TRUE(rr.pivot_cols.empty());
}

TEST(Rref, DependentRow) {
  // third row = sum of the first two
  auto m = BitMatrix::from_rows({"110", "011", "101"});
  EXPECT_EQ(f2::rref(m).rank, 2u);
}

TEST(Rref, IdempotentOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto m = testutil::random_matrix(rng, 1 + t % 7, 1 + (t * 3) % 9);
    auto once = f2::rref(m).reduced;
    EXPECT_EQ(f2::rref(once).reduced, once);
  }
}

TEST(Rref, RowSpacePreserved) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    auto m = testutil::random_matrix(rng, 2 + t % 5, 3 + t % 6);
    EXPECT_EQ(testutil::span_set(m), testutil::span_set(f2::rref(m).reduced));
  }
}

TEST(Rank, EqualsTransposeRank) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    auto m = testutil::random_matrix(rng, 1 + t % 8, 1 + (t * 5) % 10);
    EXPECT_EQ(f2::rank(m), f2::rank(m.transpose()));
  }
}

TEST(Kernel, IdentityHasEmptyKernel) {
  EXPECT_EQ(f2::kernel_basis(BitMatrix::identity(4)).rows(), 0u);
}

TEST(Kernel, ZeroMatrixHasFullKernel) {
  auto k = f2::kernel_basis(BitMatrix(3, 5));
  EXPECT_EQ(k.rows(), 5u);
  EXPECT_EQ(testutil::span_set(k), testutil::kernel_set(BitMatrix(3, 5)));
}

TEST(Kernel, SingleParityRow) {
  auto m = BitMatrix::from_rows({"111"});
  auto k = f2::kernel_basis(m);
  EXPECT_EQ(k.rows(), 2u);
  // oracle: the even-weight vectors of length 3
  EXPECT_EQ(testutil::span_set(k), testutil::kernel_set(m));
}

TEST(Kernel, RankNullityOnRandomMatrices) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 60; ++t) {
    auto m = testutil::random_matrix(rng, 1 + t % 9, 1 + (t * 7) % 12);
    auto k = f2::kernel_basis(m);
    EXPECT_EQ(f2::rank(m) + k.rows(), m.cols());
    for (std::size_t r = 0; r < k.rows(); ++r) EXPECT_TRUE(m.mul(k.row(r)).zero());
    // returned rows are linearly independent
    EXPECT_EQ(f2::rank(k), k.rows());
  }
}

TEST(RowspaceContains, ZeroVectorAlways) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 10; ++t) {
    auto m = testutil::random_matrix(rng, 1 + t, 4);
    EXPECT_TRUE(f2::rowspace_contains(m, BitVec(4)));
  }
}

TEST(RowspaceContains, HandCases) {
  auto m = BitMatrix::from_rows({"110", "011"});
  EXPECT_TRUE(f2::rowspace_contains(m, BitVec::from_string("101")));
  EXPECT_FALSE(f2::rowspace_contains(BitMatrix::from_rows({"110"}), BitVec::from_string("011")));
}

TEST(RowspaceContains, AgreesWithSpanEnumeration) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 40; ++t) {
    std::size_t cols = 3 + t % 10;  // <= 12
    auto m = testutil::random_matrix(rng, 1 + t % 6, cols);
    auto span = testutil::span_set(m);
    for (int q = 0; q < 20; ++q) {
      auto v = testutil::random_vec(rng, cols);
      EXPECT_EQ(f2::rowspace_contains(m, v), span.count(v.str()) == 1);
    }
  }
}

TEST(SubspaceLeq, TrivialCases) {
  std::mt19937_64 rng(17);
  auto b = testutil::random_matrix(rng, 3, 6);
  EXPECT_TRUE(f2::subspace_leq(BitMatrix(0, 6), b));
  EXPECT_TRUE(f2::subspace_leq(BitMatrix(2, 6), b));  // zero rows
  EXPECT_TRUE(f2::subspace_leq(b, b));
}

TEST(SubspaceLeq, HandCase) {
  auto a = BitMatrix::from_rows({"100"});
  auto b = BitMatrix::from_rows({"110", "011"});
  EXPECT_FALSE(f2::subspace_leq(a, b));
}

TEST(SubspaceLeq, ReflexiveTransitiveOnRandomTriples) {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 40; ++t) {
    std::size_t cols = 4 + t % 6;
    auto a = testutil::random_matrix(rng, 2, cols);
    auto b = testutil::random_matrix(rng, 3, cols);
    auto c = testutil::random_matrix(rng, 4, cols);
    EXPECT_TRUE(f2::subspace_leq(a, a));
    if (f2::subspace_leq(a, b) && f2::subspace_leq(b, c)) {
      EXPECT_TRUE(f2::subspace_leq(a, c));
    }
    // cross-check against enumeration
    auto sa = testutil::span_set(a);
    auto sb = testutil::span_set(b);
    bool contained = true;
    for (const auto& s : sa) contained = contained && sb.count(s);
    EXPECT_EQ(f2::subspace_leq(a, b), contained);
  }
}

TEST(SubspaceLeq, DimensionMismatchThrows) {
  EXPECT_THROW(f2::subspace_leq(BitMatrix(1, 3), BitMatrix(1, 4)), DimensionMismatch);
}

TEST(QuotientDim, TrivialZeroKernel) {
  EXPECT_EQ(f2::quotient_dim(BitMatrix(0, 4), BitMatrix::identity(4)), 0u);
}

TEST(QuotientDim, RepetitionCodeCycle) {
  // cycle adjacency checks on a length-3 circle, no Z checks
  auto h_x = BitMatrix::from_rows({"110", "011", "101"});
  EXPECT_EQ(f2::quotient_dim(h_x, BitMatrix(0, 3)), 1u);
}

TEST(QuotientDim, PreconditionViolationThrows) {
  auto a = BitMatrix::from_rows({"11"});
  auto b = BitMatrix::from_rows({"10"});
  EXPECT_THROW(f2::quotient_dim(a, b), std::invalid_argument);
}

TEST(BitMatrix, ProductAgainstDefinition) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 30; ++t) {
    auto a = testutil::random_matrix(rng, 2 + t % 4, 3 + t % 5);
    auto b = testutil::random_matrix(rng, a.cols(), 2 + t % 6);
    auto p = a * b;
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) {
        bool acc = false;
        for (std::size_t k = 0; k < a.cols(); ++k) acc ^= a.get(i, k) && b.get(k, j);
        EXPECT_EQ(p.get(i, j), acc);
      }
  }
}

TEST(BitMatrix, EmptyShapesBehave) {
  BitMatrix a(0, 5), b(5, 0);
  EXPECT_TRUE((a * a.transpose()).is_zero());
  EXPECT_EQ((a * b.transpose().transpose()).cols(), 0u);
  EXPECT_EQ(f2::rank(a), 0u);
  EXPECT_EQ(f2::kernel_basis(b).rows(), 0u);
  EXPECT_EQ(f2::kernel_basis(a).rows(), 5u);
}

TEST(Reducer, MatchesRrefRank) {
  std::mt19937_64 rng(20);
  for (int t = 0; t < 40; ++t) {
    auto m = testutil::random_matrix(rng, 1 + t % 7, 2 + t % 9);
    f2::Reducer red(m);
    EXPECT_EQ(red.rank(), f2::rank(m));
    for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_TRUE(red.contains(m.row(r)));
  }
}
