#include "thetadic/greedy.hpp"

#include <gtest/gtest.h>

#include <map>

#include "test_util.hpp"

using namespace thetadic;
using testutil::Rng;

namespace {

GreedyWord word_of(int sign, int t_exp, long lo, std::vector<long> digits) {
    GreedyWord w;
    w.sign = sign;
    w.t_exp = t_exp;
    w.lo = lo;
    w.digits = std::move(digits);
    return w;
}

}  // namespace

TEST(Renyi, DevelopmentOfOne) {
    EXPECT_EQ(renyi_d1(ThetaParams(1, 1), 2), (std::vector<long>{1, 1}));
    EXPECT_EQ(renyi_d1(ThetaParams(3, -1), 4), (std::vector<long>{2, 1, 1, 1}));
    EXPECT_EQ(renyi_d1(ThetaParams(4, 1), 3), (std::vector<long>{4, 1, 0}));
}

TEST(Greedy, IsGreedyCases) {
    ThetaParams phi(1, 1);
    EXPECT_FALSE(is_greedy({1, 1}, phi));  // Fibonacci relation
    EXPECT_TRUE(is_greedy({1, 0, 1}, phi));
    EXPECT_TRUE(is_greedy({1, 0, 0, 1}, phi));
    EXPECT_TRUE(is_greedy({1}, phi));

    ThetaParams p3(3, -1);
    EXPECT_FALSE(is_greedy({2, 2}, p3));     // forbidden block, k=1
    EXPECT_FALSE(is_greedy({2, 1, 2}, p3));  // forbidden block, k=2
    EXPECT_TRUE(is_greedy({2, 0, 2}, p3));
    EXPECT_TRUE(is_greedy({2, 1, 1}, p3));
    EXPECT_FALSE(is_greedy({3, 0}, p3));  // digit out of range
    // [2,0,2] really is greedy: evaluate and re-expand reproduces it
    GreedyWord w = word_of(1, 0, 0, {2, 0, 2});
    EXPECT_EQ(expand(evaluate(w, p3)), w);
}

TEST(Greedy, ExpandTwoAtGoldenRatio) {
    ThetaParams phi(1, 1);
    GreedyWord w = expand(make_int(phi, 2));
    // 2 = phi + phi^-2
    EXPECT_EQ(w, word_of(1, 0, -2, {1, 0, 0, 1}));
}

TEST(Greedy, ExpandFourAtAThree) {
    ThetaParams p(3, 1);
    GreedyWord w = expand(make_int(p, 4));
    // 4 = theta^-2 + 2 theta^-1 + theta
    EXPECT_EQ(w, word_of(1, 0, -2, {1, 2, 0, 1}));
    // 8 = theta^-2 + theta^-1 + 1 + 2 theta
    EXPECT_EQ(expand(make_int(p, 8)), word_of(1, 0, -2, {1, 1, 1, 2}));
}

TEST(Greedy, EpsilonBallsAreNotOpen) {
    // |phi^{2m} - (1+phi^2)|_phi = phi for every m >= 2: the witness that
    // norm balls fail to be open
    ThetaParams phi(1, 1);
    RingElt f = make_int(phi, 1) + theta_pow(phi, 2);
    for (long m = 2; m <= 8; ++m)
        EXPECT_EQ(expand(theta_pow(phi, 2 * m) - f).lo, -1);
}

TEST(Greedy, ExpandMixedSignNeedsT) {
    for (long a = 3; a <= 6; ++a) {
        ThetaParams prm(a, -1);
        RingElt T = t_elt(prm);
        GreedyWord w = expand(T);
        EXPECT_EQ(w.t_exp, -1);
        EXPECT_EQ(w.sign, 1);
        // T^2 = (a-2) theta
        EXPECT_EQ(w, word_of(1, -1, 1, {a - 2}));
        EXPECT_EQ(evaluate(w, prm), T);
    }
}

TEST(Greedy, DigitBudgetIsAHardError) {
    ThetaParams phi(1, 1);
    RingElt big = theta_pow(phi, 40) + make_int(phi, 7);
    EXPECT_THROW(expand(big, 3), expansion_error);
    EXPECT_NO_THROW(expand(big));
}

TEST(Greedy, ExpandZero) {
    ThetaParams phi(1, 1);
    GreedyWord w = expand(make_int(phi, 0));
    EXPECT_TRUE(w.is_zero());
    EXPECT_EQ(evaluate(w, phi), make_int(phi, 0));
}

TEST(Greedy, RoundTripRandomized) {
    Rng rng(101);
    for (const auto& prm : testutil::all_params(5)) {
        for (int i = 0; i < 10000; ++i) {
            RingElt x = rng.elt(prm, 5000);
            GreedyWord w = expand(x);
            EXPECT_EQ(evaluate(w, prm), x);
            if (!w.is_zero()) EXPECT_TRUE(is_greedy(w.digits, prm));
            if (!w.is_zero()) EXPECT_NE(w.digits.front(), 0);
        }
    }
}

TEST(Greedy, ExpandRespectsSignClasses) {
    Rng rng(103);
    for (long a = 3; a <= 5; ++a) {
        ThetaParams prm(a, -1);
        for (int i = 0; i < 5000; ++i) {
            RingElt x = rng.nonzero_elt(prm, 2000);
            GreedyWord w = expand(x);
            bool same = sign_real(x) == sign_real(conj(x));
            EXPECT_EQ(w.t_exp, same ? 0 : -1);
        }
    }
}

TEST(Greedy, GoldenSumWorkedExample) {
    ThetaParams phi(1, 1);
    auto pw = [&](long k) { return theta_pow(phi, k); };
    RingElt f = pw(7) + pw(5) + pw(2);
    RingElt g = pw(5) + pw(2) + make_int(phi, 1);
    GreedyWord sum = expand(f + g);
    // f + g = phi^8 + phi^4 + phi^2 + 1
    EXPECT_EQ(sum, word_of(1, 0, 0, {1, 0, 1, 0, 1, 0, 0, 0, 1}));
}

TEST(Greedy, NormalizeAgainstCanonical) {
    ThetaParams phi(1, 1);
    // phi^7 + 2 phi^5 + 2 phi^2 + 1
    std::vector<Int> raw{1, 0, 2, 0, 0, 2, 0, 1};
    GreedyWord w = normalize(raw, 0, phi);
    EXPECT_EQ(w, word_of(1, 0, 0, {1, 0, 1, 0, 1, 0, 0, 0, 1}));
    GreedyWord r = normalize_by_rewriting(raw, 0, phi);
    EXPECT_EQ(w, r);
}

TEST(Greedy, NormalizeIdempotentOnGreedyInput) {
    Rng rng(107);
    for (const auto& prm : testutil::all_params(5)) {
        for (int i = 0; i < 500; ++i) {
            RingElt x = rng.elt(prm, 2000);
            GreedyWord w = expand(x);
            if (w.is_zero() || w.t_exp != 0) continue;
            std::vector<Int> raw(w.digits.begin(), w.digits.end());
            if (w.sign < 0)
                for (auto& d : raw) d = -d;
            EXPECT_EQ(normalize(raw, w.lo, prm), w);
        }
    }
}

TEST(Greedy, NormalizeRejectsMixedSigns) {
    ThetaParams phi(1, 1);
    EXPECT_THROW(normalize({Int(1), Int(-1)}, 0, phi), std::invalid_argument);
}

TEST(Greedy, RewritingEngineAgreesRandomized) {
    Rng rng(109);
    for (const auto& prm : testutil::all_params(5)) {
        for (int i = 0; i < 400; ++i) {
            std::vector<Int> raw;
            long len = rng.uniform(1, 8);
            for (long j = 0; j < len; ++j)
                raw.emplace_back(rng.uniform(0, 3 * prm.a()));
            long lo = rng.uniform(-4, 4);
            GreedyWord a = normalize(raw, lo, prm);
            GreedyWord b = normalize_by_rewriting(raw, lo, prm);
            EXPECT_EQ(a, b);
        }
    }
}

TEST(Greedy, CarryIdentities) {
    // 2 phi^k = phi^{k+1} + phi^{k-2}
    ThetaParams phi(1, 1);
    for (long k = -5; k <= 5; ++k)
        EXPECT_TRUE(carry_identity_check(phi, 1, k));
    // (a-1) th^k + (a-1) th^{k+1} = th^{k-1} + th^{k+2} at a=3
    ThetaParams p3(3, -1);
    EXPECT_TRUE(forbidden_block_identity_check(p3, 0, 1));
    // a=5, n=-1, i=2: 6 th^k = th^{k+1} + th^k + th^{k-1}
    ThetaParams p5(5, -1);
    for (long k = -3; k <= 3; ++k) {
        EXPECT_TRUE(carry_identity_check(p5, 2, k));
        RingElt lhs = theta_pow(p5, k) * Int(6);
        RingElt rhs =
            theta_pow(p5, k + 1) + theta_pow(p5, k) + theta_pow(p5, k - 1);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Greedy, ZThetaNotClosedWitnesses) {
    // a(2 + theta) for n=+1, a >= 2 expands with lo < 0
    for (long a = 2; a <= 5; ++a) {
        ThetaParams prm(a, 1);
        RingElt x = (make_int(prm, 2) + make_theta(prm)) * Int(a);
        EXPECT_LT(expand(x).lo, 0);
    }
    // (1 + phi^2)^2 at a=1
    ThetaParams phi(1, 1);
    RingElt y = make_int(phi, 1) + theta_pow(phi, 2);
    GreedyWord w = expand(y * y);
    EXPECT_EQ(w, expand(theta_pow(phi, -2) + make_theta(phi) +
                        theta_pow(phi, 5)));
    EXPECT_EQ(w.lo, -2);
    // (a-1)(1 + theta) for n=-1
    for (long a = 3; a <= 5; ++a) {
        ThetaParams prm(a, -1);
        RingElt z = (make_int(prm, 1) + make_theta(prm)) * Int(a - 1);
        GreedyWord zw = expand(z);
        EXPECT_EQ(zw, expand(theta_pow(prm, -1) + theta_pow(prm, 2)));
        EXPECT_LT(zw.lo, 0);
    }
}

// Parry oracle at reduced scale (the acceptance suite runs the full one):
// a word is admissible iff evaluate-then-expand reproduces it.
TEST(Greedy, ParryOracleSmall) {
    for (const auto& prm : testutil::all_params(4)) {
        const long maxd = prm.max_digit();
        const long len = 6;
        std::vector<long> digits(len, 0);
        long mismatches = 0;
        for (;;) {
            bool adm = is_greedy(digits, prm);
            GreedyWord w;
            size_t first = 0;
            while (first < digits.size() && digits[first] == 0) ++first;
            if (first < digits.size()) {
                w.sign = 1;
                w.lo = static_cast<long>(first);
                w.digits.assign(digits.begin() + static_cast<long>(first),
                                digits.end());
                while (w.digits.back() == 0) w.digits.pop_back();
            }
            bool fixes = expand(evaluate(w, prm)) == w;
            if (adm != fixes) ++mismatches;
            long pos = 0;
            while (pos < len && digits[pos] == maxd) digits[pos++] = 0;
            if (pos == len) break;
            ++digits[pos];
        }
        EXPECT_EQ(mismatches, 0) << prm.describe();
    }
}
