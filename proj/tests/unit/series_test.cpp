#include <random>

#include <gtest/gtest.h>

#include "hookid/partition.hpp"
#include "hookid/series.hpp"
#include "oracles.hpp"

using namespace hookid;

namespace {

const Polynomial s = Polynomial::variable(Var::s);

TruncatedSeries x_series(int degree) { return TruncatedSeries::monomial(degree, Polynomial(1L), 1); }

TruncatedSeries random_series(int degree, std::mt19937& rng, bool zero_constant) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    TruncatedSeries out(degree);
    for (int n = zero_constant ? 1 : 0; n <= degree; ++n) {
        out[n] = Polynomial(static_cast<long>(coeff(rng)));
    }
    return out;
}

std::vector<long> integer_coefficients(const TruncatedSeries& a) {
    std::vector<long> out;
    for (int n = 0; n <= a.degree(); ++n) {
        out.push_back(a[n].as_rational().get_num().get_si());
    }
    return out;
}

}  // namespace

TEST(Series, PentagonalPattern) {
    const TruncatedSeries e = euler_product_power(Polynomial(1L), 16);
    EXPECT_EQ(integer_coefficients(e),
              (std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 0}));
}

TEST(Series, CubeIsTripleProduct) {
    const TruncatedSeries e = euler_product_power(Polynomial(3L), 10);
    EXPECT_EQ(integer_coefficients(e), (std::vector<long>{1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9}));
}

TEST(Series, ZeroPowerIsOne) {
    EXPECT_EQ(euler_product_power(Polynomial(), 9), TruncatedSeries::one(9));
}

TEST(Series, SymbolicAndIntegerPowersAgree) {
    const TruncatedSeries symbolic = euler_product_power(s, 20);
    for (long m = -2; m <= 5; ++m) {
        ASSERT_EQ(symbolic.evaluate(Var::s, Rational(m)), euler_product_power_by_multiplication(m, 20)) << m;
        ASSERT_EQ(power(euler_product_power_by_multiplication(1, 20), m), euler_product_power_by_multiplication(m, 20));
    }
}

TEST(Series, SteppedProductDoublesExponents) {
    const TruncatedSeries x2(12, {Polynomial(), Polynomial(), Polynomial(1L)});
    EXPECT_EQ(compose(euler_product_power_by_multiplication(1, 12), x2), euler_product_power_by_multiplication(1, 12, 2));
}

TEST(Series, ExpOfZeroAndOfX) {
    EXPECT_EQ(exp_series(TruncatedSeries(6)), TruncatedSeries::one(6));
    const TruncatedSeries e = exp_series(x_series(8));
    for (int k = 0; k <= 8; ++k) {
        EXPECT_EQ(e[k].as_rational(), Rational(Rational(1) / Rational(factorial(k)))) << k;
    }
    EXPECT_THROW((void)exp_series(TruncatedSeries::one(3)), std::domain_error);
}

TEST(Series, ExpOfLambertSeriesIsPartitionFunction) {
    const int N = 20;
    TruncatedSeries lambert(N);
    for (int k = 1; k <= N; ++k) {
        for (int e = k; e <= N; e += k) {
            lambert[e] += Polynomial(Rational(1, k));
        }
    }
    EXPECT_EQ(exp_series(lambert), euler_product_power(Polynomial(-1L), N, 1));
    EXPECT_EQ(log_series(euler_product_power_by_multiplication(-1, N)), lambert);
}

TEST(Series, LogExpInverse) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const TruncatedSeries u = random_series(15, rng, true);
        ASSERT_EQ(exp_series(log_series(TruncatedSeries::one(15) + u)), TruncatedSeries::one(15) + u);
        ASSERT_EQ(log_series(exp_series(u)), u);
    }
}

TEST(Series, RingOperations) {
    std::mt19937 rng(5);
    const TruncatedSeries one = TruncatedSeries::one(12);
    for (int trial = 0; trial < 20; ++trial) {
        const TruncatedSeries a = random_series(12, rng, false);
        const TruncatedSeries b = random_series(12, rng, false);
        const TruncatedSeries c = random_series(12, rng, false);
        ASSERT_EQ(a * one, a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(subtract(add(a, b), b), a);
        ASSERT_EQ(multiply(a, b), b * a);
        ASSERT_EQ(scale(a, Polynomial(2L)), a + a);
    }
    TruncatedSeries geometric(10);
    for (int k = 0; k <= 10; ++k) {
        geometric[k] = Polynomial(1L);
    }
    EXPECT_EQ((one.truncate(10) - x_series(10)) * geometric, TruncatedSeries::one(10));
    EXPECT_EQ(euler_product_power_by_multiplication(1, 20) * euler_product_power_by_multiplication(-1, 20),
              TruncatedSeries::one(20));
    EXPECT_THROW((void)(TruncatedSeries(3) + TruncatedSeries(4)), std::invalid_argument);
    EXPECT_THROW((void)(TruncatedSeries(3) * TruncatedSeries(4)), std::invalid_argument);
}

TEST(Series, ReciprocalMatchesDivision) {
    TruncatedSeries a = TruncatedSeries::one(10);
    divide_binomial(a, Polynomial(1L), 3);
    TruncatedSeries b = TruncatedSeries::one(10);
    multiply_binomial(b, Polynomial(-1L), 3);
    EXPECT_EQ(reciprocal(b), a);
    EXPECT_THROW((void)reciprocal(TruncatedSeries(4)), std::domain_error);
}

TEST(Series, ReversionOfEulerProduct) {
    const int N = 7;
    const TruncatedSeries e = euler_product_power_by_multiplication(1, N);
    TruncatedSeries a(N);
    for (int n = 1; n <= N; ++n) {
        a[n] = e[n - 1];
    }
    EXPECT_EQ(integer_coefficients(revert(a)), (std::vector<long>{0, 1, 1, 3, 10, 38, 153, 646}));
    EXPECT_EQ(revert(x_series(9)), x_series(9));
}

TEST(Series, ReversionComposesToIdentity) {
    std::mt19937 rng(99);
    const int N = 10;
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries a = random_series(N, rng, true);
        a[1] = Polynomial(trial % 2 == 0 ? 1L : -1L);
        const TruncatedSeries y = revert(a);
        ASSERT_EQ(compose(a, y), x_series(N));
        ASSERT_EQ(compose(y, a), x_series(N));
    }
    TruncatedSeries bad = x_series(5) * Polynomial(2L);
    EXPECT_THROW((void)revert(bad), std::domain_error);
    EXPECT_THROW((void)revert(TruncatedSeries::one(5)), std::domain_error);
}

TEST(Series, ComposeWithIdentity) {
    std::mt19937 rng(3);
    const TruncatedSeries a = random_series(9, rng, false);
    EXPECT_EQ(compose(a, x_series(9)), a);
    EXPECT_THROW((void)compose(a, TruncatedSeries::one(9)), std::domain_error);
}

TEST(Series, EulerPowerCoefficients) {
    const TruncatedSeries e = euler_product_power(s, 10);
    const Polynomial f3 = -(s * (s - Polynomial(1L)) * (s - Polynomial(8L))) * Rational(1, 6);
    const Polynomial f4 = s * (s - Polynomial(1L)) * (s - Polynomial(3L)) * (s - Polynomial(14L)) * Rational(1, 24);
    EXPECT_EQ(extract_coefficient(e, 0), Polynomial(1L));
    EXPECT_EQ(extract_coefficient(e, 3), f3);
    EXPECT_EQ(extract_coefficient(e, 4), f4);
    EXPECT_THROW((void)extract_coefficient(e, 11), std::out_of_range);
    for (int k = 1; k <= 10; ++k) {
        EXPECT_EQ(e[k].degree(Var::s), k);
        EXPECT_EQ(e[k].evaluate(Var::s, Rational(0)), Polynomial());
    }
}

TEST(Series, TruncationBookkeeping) {
    EXPECT_THROW(TruncatedSeries(-1), std::invalid_argument);
    EXPECT_EQ(TruncatedSeries::monomial(3, Polynomial(1L), 5), TruncatedSeries(3));
    EXPECT_THROW((void)TruncatedSeries(3).truncate(4), std::invalid_argument);
}
