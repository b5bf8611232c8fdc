#include <gtest/gtest.h>

#include "vpf/errors.hpp"
#include "vpf/quasipolynomial.hpp"

using namespace vpf;

namespace {

RatPoly x(std::size_t n, std::size_t i) { return RatPoly::variable(n, i); }
RatPoly c(std::size_t n, const Rat& v) { return RatPoly::constant(n, v); }

}  // namespace

TEST(QuasiPolynomial, EvaluateByCoset) {
  // h/2 on even h, (h+1)/2 on odd h
  const QuasiPolynomial q({2}, {x(1, 0).scaled(Rat(1, 2)), (x(1, 0) + c(1, 1)).scaled(Rat(1, 2))});
  for (long h = -6; h <= 6; ++h) {
    const IntVec v = {h};
    EXPECT_EQ(q.evaluate(v), make_rat(h % 2 == 0 ? h : h + 1, 2)) << h;
  }
  EXPECT_EQ(q.residue(1), (std::vector<unsigned>{1}));
  EXPECT_EQ(q.degree(), 1);
}

TEST(QuasiPolynomial, CosetOrderLastCoordinateFastest) {
  std::vector<RatPoly> cosets;
  for (int i = 0; i < 6; ++i) cosets.push_back(c(2, i));
  const QuasiPolynomial q({2, 3}, cosets);
  EXPECT_EQ(q.residue(4), (std::vector<unsigned>{1, 1}));
  const IntVec h = {-1, 5};
  EXPECT_EQ(q.coset_index(h), 5u);
}

TEST(QuasiPolynomial, WithPeriodKeepsValues) {
  const QuasiPolynomial q({2}, {c(1, 0), c(1, 1)});
  const QuasiPolynomial fine = q.with_period({6});
  EXPECT_EQ(fine.coset_count(), 6u);
  for (long h = -10; h <= 10; ++h) {
    const IntVec v = {h};
    EXPECT_EQ(fine.evaluate(v), q.evaluate(v));
  }
  EXPECT_THROW(q.with_period({3}), Error);
}

TEST(QuasiPolynomial, MinimizedDropsRedundantPeriod) {
  const QuasiPolynomial q({2, 3}, std::vector<RatPoly>(6, x(2, 1) + c(2, 1)));
  const QuasiPolynomial m = q.minimized();
  EXPECT_TRUE(m.coset_independent());
  EXPECT_EQ(m.period(), (std::vector<unsigned>{1, 1}));

  std::vector<RatPoly> cosets;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int r2 = 0; r2 < 6; ++r2) cosets.push_back(c(2, r2 % 2));
  const QuasiPolynomial p = QuasiPolynomial({2, 6}, cosets).minimized();
  EXPECT_EQ(p.period(), (std::vector<unsigned>{1, 2}));
}

TEST(QuasiPolynomial, EqualityAsFunctions) {
  const QuasiPolynomial a = QuasiPolynomial::polynomial(x(1, 0) + c(1, 1));
  const QuasiPolynomial b = a.with_period({4});
  EXPECT_TRUE(quasipoly_equal(a, b));
  EXPECT_EQ(a, b);
  const QuasiPolynomial d = QuasiPolynomial::polynomial(x(1, 0) - c(1, 1));
  EXPECT_FALSE(quasipoly_equal(a, d));
}

TEST(QuasiPolynomial, RejectsWrongCosetCount) {
  EXPECT_THROW(QuasiPolynomial({2}, {c(1, 1)}), Error);
}
