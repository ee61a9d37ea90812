#include <gtest/gtest.h>

#include "hookid/identities.hpp"
#include "oracles.hpp"

using namespace hookid;

TEST(ScalarHookSums, SytAndMarkedHook) {
    EXPECT_TRUE(verify_syt_square_sum(10).verified);
    const IdentityReport marked = verify_marked_hook(10);
    EXPECT_TRUE(marked.verified);
    EXPECT_EQ(marked.identity, "marked-hook");
    EXPECT_EQ(marked.degree, 10);
}

TEST(ScalarHookSums, MarkedHookAtThree) {
    // λ ⊢ 3: (3) and (1,1,1) have f = 1, Σh² = 14; (2,1) has f = 2, Σh² = 11.
    // 14 + 14 + 4·11 = 72 = 3·8/2 · 3!.
    Integer total = 0;
    for (const Partition& p : enumerate_partitions(3)) {
        Integer squares = 0;
        for (int h : oracle::naive_hooks(p.parts())) {
            squares += h * h;
        }
        total += oracle::syt_by_corners(p.parts()) * oracle::syt_by_corners(p.parts()) * squares;
    }
    EXPECT_EQ(total, 72);
}

TEST(ScalarHookSums, TCoreInverseHooks) {
    for (int t = 1; t <= 3; ++t) {
        EXPECT_TRUE(verify_tcore_inverse_hook(12, t).verified) << t;
        EXPECT_TRUE(verify_tcore_inverse_hook_shifted(10, t).verified) << t;
        EXPECT_TRUE(verify_marked_tcore(12, t).verified) << t;
    }
    EXPECT_EQ(verify_tcore_inverse_hook(6, 2).identity, "tcore-inverse-hook[t=2]");
}

TEST(ScalarHookSums, RestrictedSumByHand) {
    // t = 2, n = 1, m = 0: (2) and (1,1) each have one even hook, 2.
    EXPECT_EQ(restricted_inverse_hook_sum(1, 0, 2), make_rational(1, 2));
    // t = 1 reduces to Σ_{λ⊢n} 1/H_λ² = 1/n!.
    for (int n = 0; n <= 8; ++n) {
        EXPECT_EQ(restricted_inverse_hook_sum(n, 0, 1), make_rational(1, factorial(n))) << n;
    }
    // m that is not a core size gives zero.
    EXPECT_EQ(restricted_inverse_hook_sum(1, 2, 3), make_rational(2, 3));
    EXPECT_EQ(restricted_inverse_hook_sum(0, 4, 2), Rational(0));
    EXPECT_THROW((void)restricted_inverse_hook_sum(-1, 0, 2), std::invalid_argument);
}

TEST(ScalarHookSums, AllTogether) {
    EXPECT_TRUE(verify_scalar_hook_sums(4, 2));
    EXPECT_TRUE(verify_scalar_hook_sums(3, 3));
    EXPECT_THROW((void)verify_marked_hook(-1), std::invalid_argument);
}
