#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "vpf/combinatorics.hpp"
#include "vpf/errors.hpp"
#include "vpf/residue.hpp"
#include "vpf/so5.hpp"

using namespace vpf;
using testing_support::partition_count;

namespace {

struct Setup {
  IntMat A;
  std::vector<BasicSubset> basic;
  std::vector<BasicSubset> nbc;
  ChamberFan fan;
  ResidueEngine engine;

  explicit Setup(const IntMat& m)
      : A(m),
        basic(enumerate_basic_subsets(m)),
        nbc(enumerate_nbc(m)),
        fan(build_fan(m, basic, nbc)),
        engine(m, nbc, torus_points(m, basic)) {}
};

std::vector<std::size_t> free_columns(const IntMat& A, const BasicSubset& b) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < A.cols(); ++k)
    if (std::find(b.indices.begin(), b.indices.end(), k) == b.indices.end()) out.push_back(k);
  return out;
}

void check_against_counting(const IntMat& A, long range) {
  Setup s(A);
  const IntVec theta = *positive_functional(A);
  const auto free = free_columns(A, s.basic.front());
  std::vector<QuasiPolynomial> qp;
  for (const auto& c : s.fan.cones()) qp.push_back(s.engine.chamber_quasipolynomial(c.nbc));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(0, range);
  for (int t = 0; t < 150; ++t) {
    IntVec a(A.cols());
    for (auto& x : a) x = d(rng);
    const IntVec h = A.apply(a);
    const Int expected = partition_count(A, h, theta, free);
    for (std::size_t i = 0; i < s.fan.cones().size(); ++i)
      if (s.fan.cones()[i].cone.contains(std::span<const Int>(h))) EXPECT_EQ(qp[i].evaluate(h), Rat(expected));
  }
}

}  // namespace

TEST(Series, ChamberOfOneOne) {
  const IntMat A{{1, 1}};
  const ConeH C = ConeH::from_inequalities(1, {IntVec{1}});
  const QuasiPolynomial q = chamber_quasipolynomial(A, C);
  ASSERT_TRUE(q.coset_independent());
  EXPECT_EQ(q.cosets()[0], RatPoly::variable(1, 0) + RatPoly::constant(1, 1));
}

TEST(Series, SingleColumnTwoIsParity) {
  const IntMat A{{2}};
  const QuasiPolynomial q = chamber_quasipolynomial(A, ConeH::from_inequalities(1, {IntVec{1}}));
  EXPECT_EQ(q.period(), (std::vector<unsigned>{2}));
  EXPECT_EQ(q.cosets()[0], RatPoly::constant(1, 1));
  EXPECT_TRUE(q.cosets()[1].is_zero());
}

TEST(Series, IdentityIsOne) {
  const IntMat A{{1, 0}, {0, 1}};
  const QuasiPolynomial q = chamber_quasipolynomial(A, ConeH::from_inequalities(2, {IntVec{1, 0}, IntVec{0, 1}}));
  EXPECT_EQ(q, QuasiPolynomial::polynomial(RatPoly::constant(2, 1)));
}

TEST(Series, OneTwoThreeHasPeriodSix) {
  const IntMat A{{1, 2, 3}};
  const QuasiPolynomial q = chamber_quasipolynomial(A, ConeH::from_inequalities(1, {IntVec{1}}));
  EXPECT_EQ(q.period(), (std::vector<unsigned>{6}));
  EXPECT_EQ(q.degree(), 2);
  for (long h = 0; h <= 40; ++h) {
    long count = 0;
    for (long c = 0; 3 * c <= h; ++c) count += (h - 3 * c) / 2 + 1;
    const IntVec v = {h};
    EXPECT_EQ(q.evaluate(v), Rat(count)) << h;
  }
}

TEST(Series, SmallMatricesAgreeWithCounting) {
  check_against_counting(IntMat{{1, 0, 1}, {0, 1, 1}}, 8);
  check_against_counting(IntMat{{1, 0, 1, 1}, {0, 1, 1, 2}}, 6);
  check_against_counting(IntMat{{1, 1, 0, 2}, {0, 1, 1, 1}}, 6);
  check_against_counting(IntMat{{2, 0, 1}, {0, 2, 1}}, 8);
}

TEST(Series, DegreeBoundedByColumnsMinusRows) {
  for (const IntMat& A : {IntMat{{1, 0, 1, 1}, {0, 1, 1, 2}}, IntMat{{1, 2, 3}}, so5::matrix_A()}) {
    const auto nbc = enumerate_nbc(A);
    const auto fan = build_fan(A, enumerate_basic_subsets(A), nbc);
    const ResidueEngine engine(A, nbc, torus_points(A, enumerate_basic_subsets(A)));
    for (std::size_t i = 0; i < fan.cones().size(); i += 5)
      EXPECT_LE(engine.chamber_quasipolynomial(fan.cones()[i].nbc).degree(), static_cast<int>(A.cols() - A.rows()));
  }
}

TEST(Series, ZeroColumnThrows) {
  const BasicSubset s{{0}, 1};
  try {
    expand_kostant_term(IntMat{{1, 0}}, s, TorusElement::zero(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDenominatorFactor);
  }
}

TEST(Series, LowTruncationThrows) {
  const IntMat A{{1, 1, 1}};
  const BasicSubset s{{0}, 1};
  const TorusElement g = TorusElement::zero(1);
  EXPECT_EQ(required_truncation(A, s, g), 2);
  const KostantExpansion e = expand_kostant_term(A, s, g, 1);
  try {
    iterated_residue(e);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::TruncationTooLow);
  }
  const KostantExpansion full = expand_kostant_term(A, s, g);
  // (h+1)(h+2)/2
  const CycPoly r = iterated_residue(full);
  for (long h = 0; h < 6; ++h) {
    const std::vector<Cyclotomic> v = {Cyclotomic(h)};
    EXPECT_EQ(r.evaluate<Cyclotomic>(v), Cyclotomic(make_rat((h + 1) * (h + 2), 2)));
  }
}

TEST(Series, CharacterSumPullbackAndQuasiPolynomial) {
  CharacterSum s(1);
  const TorusElement half(RatVec{Rat(1, 2)});
  s.add(TorusElement::zero(1), CycPoly::constant(1, Cyclotomic(Rat(1, 2))));
  s.add(half, CycPoly::constant(1, Cyclotomic(Rat(1, 2))));
  const QuasiPolynomial q = s.to_quasi_polynomial();
  EXPECT_EQ(q.period(), (std::vector<unsigned>{2}));
  const CharacterSum p = s.pullback(IntMat{{2}});
  EXPECT_TRUE(p.to_quasi_polynomial().coset_independent());

  CharacterSum bad(1);
  bad.add(TorusElement(RatVec{Rat(1, 4)}), CycPoly::constant(1, Cyclotomic(1)));
  try {
    bad.to_quasi_polynomial();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonRationalCoefficient);
  }
}

TEST(Series, So5ConesAgreeWithCounting) {
  const IntMat A = so5::matrix_A();
  const auto nbc = enumerate_nbc(A);
  const auto fan = build_fan(A, enumerate_basic_subsets(A), nbc);
  const ResidueEngine engine(A, nbc, torus_points(A, enumerate_basic_subsets(A)));
  std::mt19937_64 rng(2024);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < fan.cones().size(); i += 8) {
    const auto& mc = fan.cones()[i];
    const QuasiPolynomial q = engine.chamber_quasipolynomial(mc.nbc);
    for (const auto& h : testing_support::interior_points(mc.cone, 5, rng, 2)) {
      EXPECT_EQ(q.evaluate(h), Rat(testing_support::so5_partition_count(h))) << mc.cone.key();
      ++checked;
    }
  }
  EXPECT_GE(checked, 200u);
}
