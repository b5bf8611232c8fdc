#include <gtest/gtest.h>

#include <numeric>

#include "vpf/cyclotomic.hpp"
#include "vpf/errors.hpp"

using namespace vpf;

TEST(Cyclotomic, RootsHaveTheirOrder) {
  for (unsigned m = 1; m <= 24; ++m) {
    const Cyclotomic z = Cyclotomic::root_of_unity(m, 1);
    Cyclotomic p = 1;
    for (unsigned k = 0; k < m; ++k) p *= z;
    EXPECT_EQ(p, Cyclotomic(1)) << m;
  }
}

TEST(Cyclotomic, PowersSumToZero) {
  for (unsigned m = 2; m <= 24; ++m) {
    Cyclotomic s = 0;
    for (unsigned r = 0; r < m; ++r) s += Cyclotomic::root_of_unity(m, r);
    EXPECT_TRUE(s.is_zero()) << m;
  }
}

TEST(Cyclotomic, KnownValues) {
  EXPECT_EQ(Cyclotomic::root_of_unity(2, 1), Cyclotomic(-1));
  const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  EXPECT_EQ(i * i, Cyclotomic(-1));
  const Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
  EXPECT_EQ(w + w * w, Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root_of_unity(12, 4), w);
  EXPECT_EQ(Cyclotomic::root_of_unity(6, -1), Cyclotomic::root_of_unity(6, 5));
  EXPECT_EQ(totient(12), 4u);
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<Int>{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, MixedOrdersLift) {
  const Cyclotomic a = Cyclotomic::root_of_unity(4, 1);
  const Cyclotomic b = Cyclotomic::root_of_unity(3, 1);
  const Cyclotomic ab = a * b;
  EXPECT_EQ(ab, Cyclotomic::root_of_unity(12, 7));
  EXPECT_EQ(ab.order(), 12u);
}

TEST(Cyclotomic, InverseAndDivision) {
  for (unsigned m : {3u, 4u, 5u, 6u, 8u, 12u}) {
    for (unsigned r = 1; r < m; ++r) {
      const Cyclotomic x = Cyclotomic(1) - Cyclotomic::root_of_unity(m, r);
      EXPECT_EQ(x * x.inverse(), Cyclotomic(1));
    }
  }
  EXPECT_THROW(Cyclotomic(0).inverse(), Error);
}

TEST(Cyclotomic, RationalValue) {
  const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  EXPECT_TRUE((i * i).is_rational());
  EXPECT_EQ((i * i + Cyclotomic(Rat(1, 2))).rational_value(), Rat(-1, 2));
  try {
    i.rational_value();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonRationalCoefficient);
  }
}

TEST(Cyclotomic, PrimitiveRootsSumToMoebius) {
  const std::vector<std::pair<unsigned, long>> mu = {{1, 1},  {2, -1}, {3, -1}, {4, 0},  {5, -1}, {6, 1},
                                                     {7, -1}, {8, 0},  {9, 0},  {10, 1}, {12, 0}, {30, -1}};
  for (const auto& [m, value] : mu) {
    Cyclotomic s = 0;
    for (unsigned r = 0; r < m; ++r)
      if (std::gcd(r, m) == 1) s += Cyclotomic::root_of_unity(m, r);
    EXPECT_EQ(s, Cyclotomic(value)) << m;
  }
}
