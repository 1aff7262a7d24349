#include "thetadic/series.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace thetadic;
using testutil::Rng;

namespace {

LaurentSeries periodic(int sign, int t_exp, long lo, std::vector<long> head,
                       std::vector<long> block) {
    LaurentSeries s;
    s.sign = sign;
    s.t_exp = t_exp;
    s.lo = lo;
    s.head = std::move(head);
    s.period = std::move(block);
    s.tail = TailKind::Periodic;
    return s;
}

}  // namespace

TEST(Series, ValidateRejectsBadWords) {
    ThetaParams phi(1, 1);
    EXPECT_THROW(validate(periodic(1, 0, 0, {1, 1}, {1, 0}), phi),
                 std::invalid_argument);
    EXPECT_THROW(validate(periodic(1, 0, 0, {0, 1}, {1, 0}), phi),
                 std::invalid_argument);
    EXPECT_NO_THROW(validate(periodic(1, 0, 0, {1}, {0, 1}), phi));
    ThetaParams p3(3, -1);
    // forbidden block across the seam: 2 at the head end, (1 1 2) repeating
    EXPECT_THROW(validate(periodic(1, 0, 0, {2}, {1, 1, 2}), p3),
                 std::invalid_argument);
    EXPECT_NO_THROW(validate(periodic(1, 0, 0, {2}, {1}), p3));
}

TEST(Series, DigitAtAndTruncate) {
    ThetaParams phi(1, 1);
    LaurentSeries s = periodic(1, 0, 1, {1}, {0, 1});  // theta + theta^3 + ...
    EXPECT_EQ(*s.digit_at(1), 1);
    EXPECT_EQ(*s.digit_at(2), 0);
    EXPECT_EQ(*s.digit_at(3), 1);
    EXPECT_EQ(*s.digit_at(9), 1);
    EXPECT_EQ(*s.digit_at(0), 0);
    TruncValue t = truncate_at(s, phi, 5);
    EXPECT_EQ(t.w, make_theta(phi) + theta_pow(phi, 3) + theta_pow(phi, 5));
}

TEST(Series, ConjValueExactGeometric) {
    // a (theta + theta^3 + ...) has conjugate exactly -1 (n=+1)
    for (long a = 1; a <= 4; ++a) {
        ThetaParams prm(a, 1);
        LaurentSeries s = periodic(1, 0, 1, {a}, {0, a});
        FieldElt cv = conj_value_exact(s, prm);
        EXPECT_EQ(cv, FieldElt(make_int(prm, -1))) << a;
    }
    // theta^-1 + (a-1) + a(theta^2 + theta^4 + ...) has conjugate -1 too
    for (long a = 1; a <= 4; ++a) {
        ThetaParams prm(a, 1);
        LaurentSeries s = periodic(1, 0, -1, {1, a - 1, 0}, {a, 0});
        EXPECT_EQ(conj_value_exact(s, prm), FieldElt(make_int(prm, -1))) << a;
    }
    // n=-1, a=3: 2 theta + 1 (theta^2 + theta^3 + ...) conjugates to 1
    ThetaParams p3(3, -1);
    LaurentSeries u = periodic(1, 0, 1, {2}, {1});
    EXPECT_EQ(conj_value_exact(u, p3), FieldElt(make_int(p3, 1)));
}

TEST(Series, ConjValueBoundIsCertified) {
    // truncating a known periodic series: the exact limit lies within the
    // reported radius of the reported center
    for (const auto& prm : testutil::all_params(5)) {
        if (prm.n() != 1) continue;
        LaurentSeries full = periodic(1, 0, 1, {prm.a()}, {0, prm.a()});
        FieldElt truth = conj_value_exact(full, prm);  // equals -1
        for (long M : {8L, 16L, 32L}) {
            LaurentSeries t;
            t.sign = 1;
            t.lo = 1;
            for (long e = 1; e <= M; ++e) t.head.push_back(*full.digit_at(e));
            t.tail = TailKind::Truncated;
            t.precision = M;
            ConjValue cv = conj_value(t, prm, M);
            ASSERT_FALSE(cv.exact);
            FieldElt err = truth - cv.center;
            if (sign_real(err) < 0) err = -err;
            EXPECT_LE(cmp_real(err, cv.radius), 0) << prm.describe() << " " << M;
        }
    }
    // n=-1 with a T factor: 1_3 truncated
    for (long a = 3; a <= 5; ++a) {
        ThetaParams prm(a, -1);
        LaurentSeries full = periodic(-1, -1, 1, {a - 2}, {a - 2});
        FieldElt truth = conj_value_exact(full, prm);  // equals 1
        LaurentSeries t = full;
        t.tail = TailKind::Truncated;
        t.period.clear();
        for (long e = 2; e <= 24; ++e) t.head.push_back(a - 2);
        t.precision = 24;
        ConjValue cv = conj_value(t, prm, 24);
        FieldElt err = truth - cv.center;
        if (sign_real(err) < 0) err = -err;
        EXPECT_LE(cmp_real(err, cv.radius), 0) << a;
    }
}

TEST(Series, EvaluateRejectsInexactTDivision) {
    ThetaParams p4(4, -1);
    GreedyWord w;
    w.sign = 1;
    w.t_exp = -1;
    w.lo = 0;
    w.digits = {1};  // 1/T is not in O_K for a=4
    EXPECT_THROW(evaluate(w, p4), std::domain_error);
}

TEST(Series, ConjValueFiniteMatchesConj) {
    Rng rng(307);
    for (const auto& prm : testutil::all_params(5)) {
        for (int i = 0; i < 500; ++i) {
            RingElt x = rng.nonzero_elt(prm, 3000);
            LaurentSeries s = series_from_word(expand(x));
            EXPECT_EQ(conj_value_exact(s, prm), FieldElt(conj(x)));
        }
    }
}

TEST(Series, RepresentativesOfMinusOne) {
    for (long a = 1; a <= 4; ++a) {
        ThetaParams prm(a, 1);
        MultiValue mv = representatives(make_int(prm, -1));
        ASSERT_EQ(mv.members.size(), 3u);
        EXPECT_EQ(mv.members[0].series,
                  series_from_word(expand(make_int(prm, -1))));
        // the two positive series: a(th + th^3 + ...) and
        // th^-1 + (a-1) + a(th^2 + th^4 + ...)
        LaurentSeries s1 = periodic(1, 0, 1, {a}, {0, a});
        LaurentSeries s2 = periodic(1, 0, -1, {1, a - 1, 0}, {a, 0});
        bool found1 = false, found2 = false;
        for (const auto& m : mv.members) {
            if (series_equal_to(m.series, s1, 80)) found1 = true;
            if (series_equal_to(m.series, s2, 80)) found2 = true;
        }
        EXPECT_TRUE(found1) << "a=" << a;
        EXPECT_TRUE(found2) << "a=" << a;
    }
}

TEST(Series, RepresentativesOfOneNormOne) {
    for (long a = 3; a <= 5; ++a) {
        ThetaParams prm(a, -1);
        MultiValue mv = representatives(make_int(prm, 1));
        ASSERT_EQ(mv.members.size(), 3u);
        // 1_2 = (a-1) theta + (a-2)(theta^2 + theta^3 + ...)
        LaurentSeries s12 = periodic(1, 0, 1, {a - 1}, {a - 2});
        // 1_3 = -T^{-1} (a-2)(theta + theta^2 + ...)
        LaurentSeries s13 = periodic(-1, -1, 1, {a - 2}, {a - 2});
        bool found2 = false, found3 = false;
        for (const auto& m : mv.members) {
            if (series_equal_to(m.series, s12, 80)) found2 = true;
            if (series_equal_to(m.series, s13, 80)) found3 = true;
        }
        EXPECT_TRUE(found2) << "a=" << a;
        EXPECT_TRUE(found3) << "a=" << a;
    }
}

TEST(Series, PositiveMonomialIsSingletonPositiveMember) {
    ThetaParams phi(1, 1);
    for (long k = -3; k <= 3; ++k) {
        MultiValue mv = representatives(theta_pow(phi, k));
        ASSERT_EQ(mv.members.size(), 3u);
        int positives = 0;
        for (const auto& m : mv.members)
            if (m.series.sign > 0) ++positives;
        EXPECT_EQ(positives, 1);
        EXPECT_EQ(mv.members[0].series, series_from_word(expand(theta_pow(phi, k))));
    }
}

TEST(Series, FiberCardinalityAndConjAgreement) {
    Rng rng(311);
    for (const auto& prm : testutil::all_params(5)) {
        for (int i = 0; i < 200; ++i) {
            RingElt x = rng.nonzero_elt(prm, 500);
            MultiValue mv = representatives(x);
            ASSERT_EQ(mv.members.size(), 3u);
            for (const auto& m : mv.members) {
                validate(m.series, prm);
                EXPECT_EQ(conj_value_exact(m.series, prm), FieldElt(conj(x)));
            }
        }
    }
}

TEST(Series, PairwiseTruncationDifferencesDiverge) {
    Rng rng(313);
    const long M = 64;
    for (const auto& prm : testutil::all_params(5)) {
        for (int i = 0; i < 60; ++i) {
            RingElt x = rng.nonzero_elt(prm, 200);
            MultiValue mv = representatives(x);
            for (size_t j = 0; j < mv.members.size(); ++j) {
                for (size_t k = j + 1; k < mv.members.size(); ++k) {
                    TruncValue tj = truncate_at(mv.members[j].series, prm, M);
                    TruncValue tk = truncate_at(mv.members[k].series, prm, M);
                    NormValue d = trunc_norm(trunc_sub(tj, tk));
                    ASSERT_FALSE(d.is_zero());
                    EXPECT_GE(*d.v, M - 4) << prm.describe();
                }
            }
        }
    }
}

TEST(Series, NormSpreadWithinClassAtMostTwo) {
    Rng rng(317);
    for (long a = 1; a <= 5; ++a) {
        ThetaParams prm(a, 1);
        for (int i = 0; i < 300; ++i) {
            RingElt x = rng.nonzero_elt(prm, 1000);
            MultiValue mv = representatives(x);
            long vmin = 1 << 30, vmax = -(1 << 30);
            for (const auto& m : mv.members) {
                long v = m.series.lo;  // |series| = theta^{-lo}
                vmin = std::min(vmin, v);
                vmax = std::max(vmax, v);
            }
            EXPECT_LE(vmax - vmin, 2);
        }
    }
}

TEST(Series, RenyiSeriesOfValue) {
    // digits of T' = (theta-1)/theta for a=3..5 are all (a-2) from exp 1
    for (long a = 3; a <= 5; ++a) {
        ThetaParams prm(a, -1);
        LaurentSeries v = conj_series_of(-t_elt(prm));
        EXPECT_TRUE(series_equal_to(v, periodic(1, 0, 1, {a - 2}, {a - 2}), 60))
            << a;
        EXPECT_EQ(conj_value_exact(v, prm), FieldElt(conj(-t_elt(prm))));
    }
}

TEST(Series, WordRoundTrip) {
    Rng rng(331);
    for (const auto& prm : testutil::all_params(5)) {
        for (int i = 0; i < 300; ++i) {
            RingElt x = rng.elt(prm, 3000);
            GreedyWord w = expand(x);
            EXPECT_EQ(word_from_series(series_from_word(w)), w);
        }
    }
}
