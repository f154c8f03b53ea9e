#include "tianji/exact.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

namespace tianji {
namespace {

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(1), 1);
  EXPECT_EQ(factorial(7), 5040);
  EXPECT_EQ(factorial(10), 3628800);
}

TEST(Factorial, ExceedsSixtyFourBits) {
  // 21! no longer fits in a u64; spot-check the first digits and a ratio.
  Int f21 = factorial(21);
  EXPECT_EQ(f21, Int("51090942171709440000"));
  EXPECT_EQ(factorial(22) / f21, 22);
}

TEST(Factorial, NegativeRejected) { EXPECT_THROW(factorial(-1), std::domain_error); }

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(30, 15), Int("155117520"));
}

TEST(Binomial, NegativeUpperArgument) {
  // C(-4, 2) = (-4)(-5)/2! = 10, and the sign-flip identity agrees.
  EXPECT_EQ(binomial(-4, 2), 10);
  EXPECT_EQ(binomial(-4, 2), binomial(-(-4) + 2 - 1, 2));
  EXPECT_EQ(binomial(-1, 5), -1);
  EXPECT_EQ(binomial(-2, 3), -4);
}

TEST(Binomial, NegativeLowerArgumentRejected) {
  EXPECT_THROW(binomial(5, -1), std::domain_error);
}

TEST(Binomial, PascalRule) {
  for (long long n = -20; n <= 20; ++n)
    for (long long k = 1; k <= 20; ++k)
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k))
          << "n=" << n << " k=" << k;
}

TEST(Binomial, SymmetryForNonnegativeUpper) {
  for (long long n = 0; n <= 30; ++n)
    for (long long k = 0; k <= n; ++k)
      EXPECT_EQ(binomial(n, k), binomial(n, n - k)) << "n=" << n << " k=" << k;
}

TEST(Binomial, NegationIdentity) {
  // C(n, m) = (-1)^m C(-n+m-1, m)
  for (long long n = -15; n <= 15; ++n)
    for (long long m = 0; m <= 12; ++m) {
      Int rhs = binomial(-n + m - 1, m);
      if (m % 2 == 1) rhs = -rhs;
      EXPECT_EQ(binomial(n, m), rhs) << "n=" << n << " m=" << m;
    }
}

TEST(Binomial, VandermondeConvolution) {
  for (long long n1 = 0; n1 <= 12; ++n1)
    for (long long n2 = 0; n2 <= 12; ++n2)
      for (long long n = 0; n <= n1 + n2; ++n) {
        Int sum = 0;
        for (long long m = 0; m <= n; ++m) sum += binomial(n1, m) * binomial(n2, n - m);
        EXPECT_EQ(sum, binomial(n1 + n2, n)) << "n1=" << n1 << " n2=" << n2 << " n=" << n;
      }
}

TEST(Rational, ReducesAndNormalizesSign) {
  Rational r(93, 120);
  EXPECT_EQ(r.num(), 31);
  EXPECT_EQ(r.den(), 40);
  EXPECT_EQ(Rational(27, 120), Rational(9, 40));
  EXPECT_EQ(Rational(0, 7).num(), 0);
  EXPECT_EQ(Rational(0, 7).den(), 1);
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(-3, -6), Rational(1, 2));
}

TEST(Rational, ZeroDenominatorRejected) { EXPECT_THROW(Rational(1, 0), std::domain_error); }

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(abs(Rational(-5, 7)), Rational(5, 7));
  EXPECT_EQ(Rational(9, 40).str(), "9/40");
}

TEST(PercentHalfUp, TableValues) {
  EXPECT_EQ(percent_half_up(Rational(93, 120)), 78);  // 77.5 rounds up
  EXPECT_EQ(percent_half_up(Rational(27, 120)), 23);  // 22.5 rounds up
  EXPECT_EQ(percent_half_up(Rational(1, 2)), 50);
  EXPECT_EQ(percent_half_up(Rational(0, 1)), 0);
  EXPECT_EQ(percent_half_up(Rational(1, 1)), 100);
  EXPECT_EQ(percent_half_up(Rational(1, 6)), 17);
  EXPECT_EQ(percent_half_up(Rational(103345, 362880)), 28);
}

TEST(PercentHalfUp, OutOfRangeRejected) {
  EXPECT_THROW(percent_half_up(Rational(-1, 2)), std::domain_error);
  EXPECT_THROW(percent_half_up(Rational(3, 2)), std::domain_error);
}

TEST(PercentHalfUp, MonotoneNondecreasing) {
  // Sweep a fine ascending grid plus every exact half-percent boundary.
  int prev = 0;
  for (int k = 0; k <= 1000; ++k) {
    int p = percent_half_up(Rational(k, 1000));
    EXPECT_GE(p, prev) << "k=" << k;
    prev = p;
  }
  prev = 0;
  for (int k = 0; k <= 200; ++k) {
    int p = percent_half_up(Rational(k, 200));
    EXPECT_GE(p, prev) << "k=" << k;
    prev = p;
  }
}

}  // namespace
}  // namespace tianji
