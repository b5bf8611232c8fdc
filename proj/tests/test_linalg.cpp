#include <gtest/gtest.h>

#include <random>

#include "vpf/errors.hpp"
#include "vpf/matrix.hpp"
#include "vpf/rational.hpp"
#include "vpf/so5.hpp"

using namespace vpf;

namespace {

Int cofactor_det(const IntMat& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Int sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMat minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Int term = m(0, j) * cofactor_det(minor);
    sum += (j % 2 == 0) ? term : Int(-term);
  }
  return sum;
}

IntMat random_matrix(std::mt19937_64& rng, std::size_t n, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(to_string(parse_rat("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rat("-7")), "-7");
  EXPECT_EQ(to_string(parse_rat("0/5")), "0");
  EXPECT_THROW(parse_rat("1/0"), Error);
  EXPECT_THROW(parse_rat("1.5"), Error);
  EXPECT_THROW(parse_int("12a"), Error);
  EXPECT_THROW(make_rat(1, 0), Error);
}

TEST(Rational, FloorAndFrac) {
  EXPECT_EQ(floor(parse_rat("-1/2")), -1);
  EXPECT_EQ(frac(parse_rat("-1/3")), parse_rat("2/3"));
  EXPECT_TRUE(is_integer(parse_rat("4/2")));
  EXPECT_EQ(primitive(IntVec{4, -6, 0}), (IntVec{2, -3, 0}));
  const RatVec r = {parse_rat("1/2"), parse_rat("-1/3")};
  EXPECT_EQ(primitive(std::span<const Rat>(r)), (IntVec{3, -2}));
}

TEST(Determinant, SubmatrixOfSo5AgreesWithCofactorExpansion) {
  const IntMat A = so5::matrix_A();
  const std::vector<std::size_t> cols = {0, 1, 2, 3, 4, 5, 6, 7};
  const IntMat S = A.select_columns(cols);
  EXPECT_EQ(cofactor_det(S), -1);
  EXPECT_EQ(det(S), -1);
  EXPECT_EQ(det(to_rat(S)), -1);
}

TEST(Determinant, RandomMatricesAgreeWithCofactorExpansion) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 6;
    const IntMat m = random_matrix(rng, n, t % 3 == 0 ? 1 : 9);
    const Int c = cofactor_det(m);
    EXPECT_EQ(det(m), c);
    EXPECT_EQ(det(to_rat(m)), Rat(c));
  }
}

TEST(Determinant, Multiplicative) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const IntMat a = random_matrix(rng, 4, 5);
    const IntMat b = random_matrix(rng, 4, 5);
    EXPECT_EQ(det(a * b), det(a) * det(b));
  }
}

TEST(Inverse, ProductIsIdentity) {
  std::mt19937_64 rng(3);
  int tested = 0;
  while (tested < 50) {
    const IntMat m = random_matrix(rng, 5, 4);
    if (det(m) == 0) continue;
    const RatMat inv = invert(to_rat(m));
    EXPECT_EQ(to_rat(m) * inv, RatMat::identity(5));
    EXPECT_EQ(inv * to_rat(m), RatMat::identity(5));
    ++tested;
  }
}

TEST(Inverse, BasisOfSo5) {
  const IntMat A = so5::matrix_A();
  const std::vector<std::size_t> cols = {0, 1, 2, 3, 4, 5, 6, 7};
  const RatMat S = to_rat(A.select_columns(cols));
  EXPECT_EQ(S * invert(S), RatMat::identity(8));
}

TEST(Inverse, SingularThrows) {
  const IntMat m{{1, 2}, {2, 4}};
  try {
    invert(to_rat(m));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularMatrix);
  }
}

TEST(Rank, So5MatrixHasFullRowRank) {
  EXPECT_EQ(rank(so5::matrix_A()), 8u);
  EXPECT_EQ(rank(to_rat(so5::matrix_A())), 8u);
  EXPECT_EQ(rank(IntMat{{1, 2, 3}, {2, 4, 6}}), 1u);
  EXPECT_EQ(rank(IntMat{{0, 0}, {0, 0}}), 0u);
}

TEST(Nullspace, AnnihilatesAndHasComplementaryDimension) {
  const RatMat A = to_rat(so5::matrix_A());
  const RatMat N = nullspace(A);
  EXPECT_EQ(N.rows(), 2u);
  EXPECT_EQ(A * N.transpose(), RatMat(8, 2));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const IntMat m = random_matrix(rng, 4, 2);
    const RatMat r = to_rat(m);
    const RatMat k = nullspace(r);
    EXPECT_EQ(rank(r) + k.rows(), 4u);
    if (k.rows() > 0) EXPECT_EQ(r * k.transpose(), RatMat(4, k.rows()));
  }
}

TEST(Rref, PivotsAreUnitAndRowSpaceKept) {
  const RatMat m = to_rat(IntMat{{2, 4, 1}, {1, 2, 0}, {3, 6, 1}});
  const RatMat r = rref(m);
  EXPECT_EQ(r.rows(), 2u);
  EXPECT_EQ(r(0, 0), 1);
  EXPECT_EQ(r(1, 2), 1);
  EXPECT_EQ(r(0, 2), 0);
}
