#include <set>

#include <gtest/gtest.h>

#include "hookid/identities.hpp"
#include "oracles.hpp"

using namespace hookid;

namespace {

const Polynomial z = Polynomial::variable(Var::z);
const Polynomial y = Polynomial::variable(Var::y);

void expect_verified(const IdentityReport& r) {
    EXPECT_TRUE(r.verified) << r.identity << " first mismatch at degree "
                            << (r.first_mismatch ? r.first_mismatch->degree : -1);
}

TruncatedSeries monomial_x_power(int degree, const Polynomial& c, int power) {
    return TruncatedSeries::monomial(degree, c, power);
}

}  // namespace

TEST(CompareSides, ReportsLowestMismatch) {
    TruncatedSeries a = TruncatedSeries::one(5);
    TruncatedSeries b = TruncatedSeries::one(5);
    EXPECT_TRUE(compare_sides("same", {a, b}).verified);
    a[3] = z;
    a[4] = Polynomial(2L);
    const IdentityReport r = compare_sides("diff", {a, b});
    EXPECT_FALSE(r.verified);
    EXPECT_EQ(r.identity, "diff");
    EXPECT_EQ(r.degree, 5);
    ASSERT_TRUE(r.first_mismatch.has_value());
    EXPECT_EQ(r.first_mismatch->degree, 3);
    EXPECT_EQ(r.first_mismatch->lhs, z);
    EXPECT_EQ(r.first_mismatch->rhs, Polynomial());
}

TEST(NekrasovOkounkov, Holds) { expect_verified(verify_nekrasov_okounkov(10)); }

TEST(NekrasovOkounkov, IntegerSpecializationsMatchPlainProducts) {
    const IdentitySides sides = nekrasov_okounkov_sides(12);
    for (long m = -2; m <= 4; ++m) {
        ASSERT_EQ(sides.lhs.evaluate(Var::z, Rational(m)), euler_product_power_by_multiplication(m - 1, 12)) << m;
    }
}

TEST(NekrasovOkounkov, TopCoefficientInZ) {
    // [z^n x^n] = (-1)^n Σ_{λ⊢n} 1/∏h² = (-1)^n/n!
    const IdentitySides sides = nekrasov_okounkov_sides(9);
    for (int n = 0; n <= 9; ++n) {
        ASSERT_EQ(sides.lhs[n].degree(Var::z), n);
        const Polynomial top = sides.lhs[n].coefficient(Var::z, n);
        const Rational expected = make_rational(n % 2 == 0 ? 1 : -1, factorial(n));
        ASSERT_EQ(top, Polynomial(expected)) << n;
    }
}

TEST(NekrasovOkounkov, InterpolatedFromOddSquareValues) {
    // Each coefficient is a polynomial of degree n in z; its values at z = t²
    // for odd t come from the V-coding sums alone.
    const int N = 4;
    std::vector<int> ts;
    for (int t = 1; static_cast<int>(ts.size()) <= N; t += 2) {
        ts.push_back(t);
    }
    std::vector<TruncatedSeries> coding_sums;
    for (int t : ts) {
        coding_sums.push_back(macdonald_sides(N, t).rhs);
    }
    const IdentitySides sides = nekrasov_okounkov_sides(N);
    for (int n = 0; n <= N; ++n) {
        std::vector<mpq_class> xs;
        std::vector<mpq_class> values;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
            xs.emplace_back(ts[i] * ts[i]);
            values.push_back(coding_sums[i][n].is_zero() ? mpq_class(0) : coding_sums[i][n].as_rational());
        }
        const std::vector<mpq_class> coeffs = oracle::interpolate(xs, values);
        Polynomial interpolated;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            interpolated += z.pow(static_cast<unsigned>(k)) * Rational(coeffs[k]);
        }
        ASSERT_EQ(interpolated, sides.lhs[n]) << n;
    }
}

TEST(ExtensionTY, Holds) {
    for (int t = 1; t <= 3; ++t) {
        expect_verified(verify_extension_ty(8, t));
    }
}

TEST(ExtensionTY, Specializations) {
    const int N = 9;
    for (int t = 1; t <= 3; ++t) {
        const IdentitySides ty = extension_ty_sides(N, t);
        // y = 1 is the t-core interpolation identity.
        const IdentitySides interp = tcore_interpolation_sides(N, t);
        ASSERT_EQ(ty.lhs.evaluate(Var::y, Rational(1)), interp.lhs) << t;
        ASSERT_EQ(ty.rhs.evaluate(Var::y, Rational(1)), interp.rhs) << t;
        // z = 0 counts hooks divisible by t.
        const IdentitySides marker = hook_t_marker_sides(N, t);
        ASSERT_EQ(ty.lhs.evaluate(Var::z, Rational(0)), marker.lhs) << t;
        ASSERT_EQ(ty.rhs.evaluate(Var::z, Rational(0)), marker.rhs) << t;
    }
    const IdentitySides one = extension_ty_sides(N, 1);
    const IdentitySides no = nekrasov_okounkov_sides(N);
    EXPECT_EQ(one.lhs.evaluate(Var::y, Rational(1)), no.lhs);
    EXPECT_EQ(one.rhs.evaluate(Var::y, Rational(1)), no.rhs);
}

TEST(HookTCount, HoldsAndSpecializes) {
    const int N = 12;
    for (int t = 1; t <= 3; ++t) {
        expect_verified(verify_hook_t_count(N, t));
        const IdentitySides count = hook_t_count_sides(N, t);
        ASSERT_EQ(count.lhs.evaluate(Var::y, Rational(0)), tcore_count_sides(N, t).lhs) << t;
        ASSERT_EQ(count.rhs.evaluate(Var::y, Rational(0)), tcore_count_sides(N, t).rhs) << t;
        ASSERT_EQ(count.lhs.evaluate(Var::y, Rational(2)), doubled_hook_t_sides(N, t).lhs) << t;
        ASSERT_EQ(count.rhs.evaluate(Var::y, Rational(2)), doubled_hook_t_sides(N, t).rhs) << t;
        ASSERT_EQ(count.lhs.evaluate(Var::y, Rational(1)), partition_generating_function(N)) << t;
    }
}

TEST(Corollaries, AllHold) {
    for (const IdentityReport& r : verify_corollaries(10)) {
        expect_verified(r);
    }
}

TEST(Corollaries, TCoreCountsMatchEnumeration) {
    for (int t = 2; t <= 5; ++t) {
        const IdentitySides sides = tcore_count_sides(16, t);
        for (int m = 0; m <= 16; ++m) {
            ASSERT_EQ(sides.lhs[m], Polynomial(Rational(count_t_cores(m, t)))) << t << " " << m;
        }
    }
}

TEST(Corollaries, DistinctPartsCount) {
    const IdentitySides sides = distinct_parts_hook_sides(20);
    for (int n = 0; n <= 20; ++n) {
        ASSERT_EQ(sides.rhs[n], Polynomial(Rational(oracle::distinct_partition_count(n)))) << n;
    }
}

TEST(Corollaries, PentagonalSignsFromOracle) {
    const IdentitySides sides = pentagonal_hook_sides(20);
    for (int n = 0; n <= 20; ++n) {
        ASSERT_EQ(sides.lhs[n], Polynomial(Rational(oracle::pentagonal_sign(n)))) << n;
    }
}

TEST(Corollaries, SignedCountFromMarkerAtMinusOne) {
    // Replacing y by -1 in ∏(1 - y^k x^{tk})^{-t} is composition with -x^t.
    const int N = 18;
    for (int t = 1; t <= 3; ++t) {
        const IdentitySides marker = hook_t_marker_sides(N, t);
        const IdentitySides sign = signed_hook_t_sides(N, t);
        ASSERT_EQ(marker.lhs.evaluate(Var::y, Rational(-1)), sign.lhs) << t;
        const TruncatedSeries inner = compose(euler_product_power_by_multiplication(-t, N),
                                              monomial_x_power(N, Polynomial(-1L), t));
        const TruncatedSeries derived = euler_product_power_by_multiplication(t, N, t) *
                                        euler_product_power_by_multiplication(-1, N) * inner;
        ASSERT_EQ(derived, sign.rhs) << t;
        ASSERT_EQ(marker.rhs.evaluate(Var::y, Rational(-1)), sign.rhs) << t;
    }
}

TEST(Corollaries, SixCoreSupport) {
    // At z = 36/t the weight vanishes unless λ is a 6-core (t | 6).
    for (int t : {1, 2, 3, 6}) {
        for (int n = 0; n <= 14; ++n) {
            for (const Partition& p : enumerate_partitions(n)) {
                const Polynomial w = hook_product(hook_lengths_mod_t(p, t),
                                                  [](int h) { return Polynomial(make_rational(h * h - 36, h * h)); });
                ASSERT_EQ(!w.is_zero(), is_t_core(p, 6)) << p << " t=" << t;
            }
        }
        const IdentitySides interp = tcore_interpolation_sides(12, t);
        const IdentitySides six = six_core_sides(12, t);
        ASSERT_EQ(interp.lhs.evaluate(Var::z, make_rational(36, t)), six.lhs) << t;
        ASSERT_EQ(interp.rhs.evaluate(Var::z, make_rational(36, t)), six.rhs) << t;
    }
    EXPECT_THROW((void)six_core_sides(5, 5), std::invalid_argument);
}

TEST(Corollaries, TCoreProductIsInterpolationAtT) {
    const int N = 12;
    for (int t = 1; t <= 3; ++t) {
        const IdentitySides interp = tcore_interpolation_sides(N, t);
        const IdentitySides cores = tcore_count_sides(N, t);
        ASSERT_EQ(interp.rhs.evaluate(Var::z, Rational(t)), cores.rhs) << t;
    }
}

TEST(Corollaries, OddInverseSquaresAreAllMinusEven) {
    const int N = 15;
    const IdentitySides all = inverse_square_sum_sides(N, 1);
    const IdentitySides even = inverse_square_sum_sides(N, 2);
    const IdentitySides odd = odd_inverse_square_sum_sides(N);
    EXPECT_EQ(all.lhs - even.lhs, odd.lhs);
    EXPECT_EQ(all.rhs - even.rhs, odd.rhs);
}

TEST(Corollaries, ExponentialLimitLeadingTerms) {
    // [b^k] of the left side collects λ with exactly k hooks divisible by t.
    const int N = 9;
    for (int t = 1; t <= 3; ++t) {
        const IdentitySides sides = exponential_limit_sides(N, t);
        const TruncatedSeries constant = sides.lhs.coefficient_in(Var::b, 0);
        ASSERT_EQ(constant, tcore_count_sides(N, t).lhs) << t;
    }
}

TEST(ClassicalProducts, Hold) {
    expect_verified(compare_sides("pentagonal", pentagonal_sides(40)));
    expect_verified(compare_sides("triple-product", triple_product_sides(40)));
    expect_verified(compare_sides("euler-exp", euler_exp_sides(25)));
}

TEST(Macdonald, WorkedConstantAndHolds) {
    for (int t : {1, 3, 5, 7}) {
        expect_verified(verify_macdonald_odd(8, t));
    }
    EXPECT_EQ(macdonald_square_sum_bound(10, 5), 2 * 5 * 10 + 10);
    EXPECT_THROW((void)macdonald_sides(5, 4), std::invalid_argument);
}

TEST(Macdonald, CodingSumEqualsCoreSum) {
    for (int t : {3, 5}) {
        EXPECT_EQ(macdonald_sides(12, t).rhs, macdonald_core_sum(12, t)) << t;
    }
}

TEST(Macdonald, TooSmallBoundIsDetected) {
    const IdentityReport r = verify_macdonald_odd(6, 5, Coord{10});
    EXPECT_FALSE(r.verified);
    ASSERT_TRUE(r.first_mismatch.has_value());
    EXPECT_EQ(r.first_mismatch->degree, 1);
    EXPECT_EQ(r.first_mismatch->lhs, Polynomial(-24L));
    EXPECT_EQ(r.identity, "macdonald-odd[t=5]");
}

TEST(Catalog, NamesAreUniqueAndLookupWorks) {
    std::set<std::string> names;
    for (const IdentityFamily& f : identity_catalog()) {
        EXPECT_TRUE(names.insert(f.name).second) << f.name;
        EXPECT_EQ(find_identity(f.name), &f);
        EXPECT_FALSE(f.summary.empty());
        for (int t : f.default_ts) {
            EXPECT_TRUE(f.accepts_t(t)) << f.name << " " << t;
        }
    }
    EXPECT_EQ(find_identity("no-such-identity"), nullptr);
    EXPECT_EQ(identity_label("six-core", 3), "six-core[t=3]");
    EXPECT_EQ(identity_label("pentagonal", std::nullopt), "pentagonal");
    EXPECT_TRUE(find_identity("extension-ty")->multi_symbolic);
    EXPECT_FALSE(find_identity("macdonald-odd")->accepts_t(4));
}

TEST(Catalog, EveryFamilyVerifiesAtSmallDegree) {
    for (const IdentityFamily& f : identity_catalog()) {
        const std::vector<int> ts = f.default_ts.empty() ? std::vector<int>{1} : f.default_ts;
        for (int t : ts) {
            const IdentityReport r = f.run(6, t);
            EXPECT_TRUE(r.verified) << r.identity;
            EXPECT_EQ(r.identity, identity_label(f.name, f.default_ts.empty() ? std::nullopt : std::optional<int>(t)));
        }
    }
}
