#include "thetadic/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace thetadic {

std::optional<long> LaurentSeries::digit_at(long e) const {
    if (is_zero()) return 0;
    if (e < lo) return 0;
    if (e <= head_hi()) return head[static_cast<size_t>(e - lo)];
    switch (tail) {
        case TailKind::Finite:
            return 0;
        case TailKind::Periodic:
            return period[static_cast<size_t>((e - head_hi() - 1) %
                                              static_cast<long>(period.size()))];
        case TailKind::Truncated:
            if (e <= precision) return 0;
            return std::nullopt;
    }
    return std::nullopt;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    if (sign != o.sign) return false;
    if (is_zero()) return true;
    return t_exp == o.t_exp && lo == o.lo && head == o.head && tail == o.tail &&
           period == o.period &&
           (tail != TailKind::Truncated || precision == o.precision);
}

void validate(const LaurentSeries& s, const ThetaParams& params) {
    if (s.is_zero()) return;
    if (s.sign != 1 && s.sign != -1)
        throw std::invalid_argument("series: bad sign");
    if (s.t_exp != 0 && s.t_exp != -1)
        throw std::invalid_argument("series: bad t_exp");
    if (s.t_exp == -1 && params.n() != -1)
        throw std::invalid_argument("series: t_exp=-1 requires n=-1");
    if (s.head.empty() && s.tail != TailKind::Periodic)
        throw std::invalid_argument("series: empty digits");
    if (!s.head.empty() && s.head.front() == 0)
        throw std::invalid_argument("series: leading zero digit");
    if (s.tail == TailKind::Periodic) {
        if (s.period.empty())
            throw std::invalid_argument("series: empty period");
        if (std::all_of(s.period.begin(), s.period.end(),
                        [](long d) { return d == 0; }))
            throw std::invalid_argument("series: zero period is a finite tail");
    }
    std::vector<long> window = s.head;
    if (s.tail == TailKind::Periodic)
        for (int rep = 0; rep < 3; ++rep)
            window.insert(window.end(), s.period.begin(), s.period.end());
    if (!is_greedy(window, params))
        throw std::invalid_argument("series: digits violate the greedy rules");
    if (s.head.empty() && s.period.front() == 0)
        throw std::invalid_argument("series: leading zero digit");
}

LaurentSeries series_from_word(const GreedyWord& w) {
    LaurentSeries s;
    s.sign = w.sign;
    if (w.is_zero()) return s;
    s.t_exp = w.t_exp;
    s.lo = w.lo;
    s.head = w.digits;
    s.tail = TailKind::Finite;
    return s;
}

GreedyWord word_from_series(const LaurentSeries& s) {
    if (!s.is_finite())
        throw std::invalid_argument("word_from_series: finite tails only");
    GreedyWord w;
    w.sign = s.sign;
    if (s.is_zero()) return w;
    w.t_exp = s.t_exp;
    w.lo = s.lo;
    w.digits = s.head;
    while (!w.digits.empty() && w.digits.back() == 0) w.digits.pop_back();
    if (w.digits.empty()) w.sign = 0;
    return w;
}

TruncValue truncate_at(const LaurentSeries& s, const ThetaParams& params,
                       long e) {
    TruncValue t{make_int(params, 0), s.is_zero() ? 0 : s.t_exp};
    if (s.is_zero()) return t;
    RingElt v = make_int(params, 0);
    for (long k = e; k >= s.lo; --k) {
        auto d = s.digit_at(k);
        if (!d)
            throw precision_error("truncate_at: digit beyond truncated tail");
        if (k == e)
            v = make_int(params, *d);
        else
            v = theta_shift(v, 1) + make_int(params, *d);
    }
    v = theta_shift(v, s.lo);
    if (s.sign < 0) v = -v;
    t.w = v;
    return t;
}

NormValue trunc_norm(const TruncValue& t) { return infranorm(t.w); }

TruncValue trunc_sub(const TruncValue& a, const TruncValue& b) {
    if (a.t_exp == b.t_exp) return TruncValue{a.w - b.w, a.t_exp};
    const ThetaParams prm = a.w.params();
    const RingElt T = t_elt(prm);
    if (a.t_exp == -1) return TruncValue{a.w - T * b.w, -1};
    return TruncValue{T * a.w - b.w, -1};
}

FieldElt trunc_value(const TruncValue& t) {
    if (t.t_exp == 0) return FieldElt(t.w);
    const ThetaParams prm = t.w.params();
    // value = w / T = w * conj(T) / N(T).
    Int nt = field_norm(t_elt(prm));
    return FieldElt(t.w * conj(t_elt(prm)), nt);
}

FieldElt conj_value_exact(const LaurentSeries& s, const ThetaParams& params) {
    if (s.tail == TailKind::Truncated)
        throw precision_error("conj_value_exact: truncated tail");
    if (s.is_zero()) return FieldElt(make_int(params, 0));
    RingElt headval = make_int(params, 0);
    for (long e = s.head_hi(); e >= s.lo; --e) {
        headval = theta_shift(headval, 1) +
                  make_int(params, s.head.empty() ? 0 : *s.digit_at(e));
    }
    headval = theta_shift(headval, s.lo);
    FieldElt total(conj(headval));
    if (s.tail == TailKind::Periodic) {
        const long L = static_cast<long>(s.period.size());
        RingElt blockval = make_int(params, 0);
        for (auto it = s.period.rbegin(); it != s.period.rend(); ++it)
            blockval = theta_shift(blockval, 1) + make_int(params, *it);
        blockval = theta_shift(blockval, s.head_hi() + 1);
        FieldElt one(make_int(params, 1));
        FieldElt ratio(conj(theta_pow(params, L)));
        total = total + FieldElt(conj(blockval)) / (one - ratio);
    }
    if (s.t_exp == -1) total = total / FieldElt(conj(t_elt(params)));
    if (s.sign < 0) total = -total;
    return total;
}

ConjValue conj_value(const LaurentSeries& s, const ThetaParams& params,
                     long cutoff_exponent) {
    ConjValue cv;
    if (s.is_exact()) {
        cv.center = conj_value_exact(s, params);
        cv.radius = FieldElt(make_int(params, 0));
        cv.exact = true;
        return cv;
    }
    long m = std::min(cutoff_exponent, s.precision);
    TruncValue t = truncate_at(s, params, m);
    cv.center = conj(trunc_value(t));
    // |tail'| <= max_digit * theta^{-m} / (1 - 1/theta)
    FieldElt bound =
        FieldElt(theta_pow(params, -m + 1) * Int(params.max_digit())) /
        FieldElt(t_elt(params));
    if (s.t_exp == -1) {
        // dividing by |T'| = 1 - 1/theta scales the bound by theta/(theta-1)
        bound = bound * FieldElt(theta_pow(params, 1)) / FieldElt(t_elt(params));
    }
    cv.radius = bound;
    cv.exact = false;
    return cv;
}

namespace {

void strip_leading_zeros(LaurentSeries& s) {
    size_t k = 0;
    while (k < s.head.size() && s.head[k] == 0) ++k;
    s.head.erase(s.head.begin(), s.head.begin() + static_cast<long>(k));
    s.lo += static_cast<long>(k);
}

// n=+1 helper: the two positive series in the Cauchy class of -A (A > 0).
// With N the top exponent of A and B = theta^{N+1} - A:
//   even-tail member: B + a (theta^{N+2} + theta^{N+4} + ...)
//   odd-tail member:  gr(B + theta^N + (a-1) theta^{N+1})
//                       + a (theta^{N+3} + theta^{N+5} + ...)
std::pair<LaurentSeries, LaurentSeries> negative_pair(const RingElt& A) {
    const ThetaParams prm = A.params();
    const long a = prm.a();
    GreedyWord wa = expand(A);
    const long N = wa.hi();
    RingElt B = theta_pow(prm, N + 1) - A;

    auto build = [&](const RingElt& headval, long tail_start) {
        GreedyWord hw = expand(headval);
        LaurentSeries s;
        s.sign = 1;
        s.lo = hw.lo;
        s.head = hw.digits;
        s.head.resize(static_cast<size_t>(tail_start - hw.lo), 0);
        s.tail = TailKind::Periodic;
        s.period = {a, 0};
        return s;
    };

    LaurentSeries even = build(B, N + 2);
    RingElt C = B + theta_pow(prm, N) + theta_pow(prm, N + 1) * Int(a - 1);
    LaurentSeries odd = build(C, N + 3);
    return {even, odd};
}

// n=-1 helper: same-type partner of a finite word: decrement the top digit
// and append the (a-1)(a-2)(a-2)... pattern one exponent above it.
LaurentSeries same_type_partner(const GreedyWord& w, const ThetaParams& prm) {
    const long a = prm.a();
    LaurentSeries s;
    s.sign = w.sign;
    s.t_exp = w.t_exp;
    s.lo = w.lo;
    s.head = w.digits;
    s.head.back() -= 1;
    s.head.push_back(a - 1);
    s.tail = TailKind::Periodic;
    s.period = {a - 2};
    strip_leading_zeros(s);
    return s;
}

}  // namespace

LaurentSeries renyi_series_of_value(const FieldElt& target,
                                    const ThetaParams& params) {
    if (sign_real(target) <= 0)
        throw std::invalid_argument("renyi_series_of_value: target > 0");

    // Top exponent of the real greedy expansion of the target value.
    long M = 0;
    const FieldElt th(make_theta(params));
    const FieldElt thinv(theta_pow(params, -1));
    FieldElt pw(make_int(params, 1));
    if (cmp_real(target, pw) >= 0) {
        while (cmp_real(target, pw * th) >= 0) {
            pw = pw * th;
            ++M;
        }
    } else {
        do {
            pw = pw * thinv;
            --M;
        } while (cmp_real(target, pw) < 0);
    }

    // Renyi digit loop on the scaled remainder tau in [0,1); the remainder
    // keeps a fixed denominator and both embeddings stay bounded, so the
    // state must repeat.
    std::vector<long> digits;
    FieldElt tau = target;
    for (long i = 0; i < M; ++i) tau = tau * thinv;
    for (long i = 0; i < -M; ++i) tau = tau * th;
    long first = floor_real(tau).get_si();
    digits.push_back(first);
    tau = tau - FieldElt(make_int(params, first));

    std::map<std::pair<std::string, std::string>, size_t> seen;
    size_t preperiod = 0, period_len = 0;
    for (size_t step = 0;; ++step) {
        if (tau.is_zero()) break;  // finite expansion
        auto key = std::make_pair(tau.num().str(), tau.den().get_str());
        auto it = seen.find(key);
        if (it != seen.end()) {
            preperiod = it->second;
            period_len = step - it->second;
            break;
        }
        seen.emplace(key, step);
        FieldElt scaled = tau * th;
        long d = floor_real(scaled).get_si();
        digits.push_back(d);
        tau = scaled - FieldElt(make_int(params, d));
        if (step > 2'000'000)
            throw expansion_error("renyi_series_of_value: period not found");
    }

    LaurentSeries s;
    s.sign = 1;
    s.t_exp = 0;
    s.lo = -M;
    if (period_len == 0) {
        s.head = digits;
        while (!s.head.empty() && s.head.back() == 0) s.head.pop_back();
        s.tail = TailKind::Finite;
    } else {
        s.head.assign(digits.begin(),
                      digits.begin() + static_cast<long>(preperiod) + 1);
        s.period.assign(digits.begin() + static_cast<long>(preperiod) + 1,
                        digits.end());
        s.tail = TailKind::Periodic;
    }
    return s;
}

LaurentSeries conj_series_of(const RingElt& u) {
    const ThetaParams prm = u.params();
    if (prm.n() != -1)
        throw std::invalid_argument("conj_series_of: n=-1 only");
    RingElt w = conj(u);
    if (sign_real(w) <= 0)
        throw std::invalid_argument("conj_series_of: conj(u) must be > 0");
    return renyi_series_of_value(FieldElt(w), prm);
}

MultiValue representatives(const RingElt& x) {
    if (x.is_zero())
        throw std::invalid_argument("representatives: x != 0 required");
    const ThetaParams prm = x.params();
    MultiValue mv;
    GreedyWord wx = expand(x);
    mv.members.push_back({series_from_word(wx), true, "finite word"});

    if (prm.n() == 1) {
        int s = sign_real(x);
        auto [even, odd] = negative_pair(s > 0 ? x : -x);
        if (s > 0) {
            even.sign = -1;
            odd.sign = -1;
        }
        validate(even, prm);
        validate(odd, prm);
        mv.members.push_back({even, true, "series, even-offset a-tail"});
        mv.members.push_back({odd, true, "series, odd-offset a-tail"});
        return mv;
    }

    // n = -1: the fiber of the conjugation map over conj(x).
    LaurentSeries partner = same_type_partner(wx, prm);
    validate(partner, prm);
    mv.members.push_back({partner, true, "same-type series"});

    int rsign = sign_real(conj(x));
    LaurentSeries other;
    if (wx.t_exp == 0) {
        RingElt ustar = (x * t_elt(prm)) * Int(-rsign);
        other = conj_series_of(ustar);
        other.sign = -rsign;
        other.t_exp = -1;
    } else {
        RingElt z = x * Int(rsign);
        other = conj_series_of(z);
        other.sign = rsign;
        other.t_exp = 0;
    }
    validate(other, prm);
    mv.members.push_back({other, true, "opposite-type series"});
    return mv;
}

bool series_equal_to(const LaurentSeries& a, const LaurentSeries& b, long e) {
    if (a.sign != b.sign) return false;
    if (a.is_zero()) return true;
    if (a.t_exp != b.t_exp) return false;
    long from = std::min(a.lo, b.lo);
    for (long k = from; k <= e; ++k) {
        auto da = a.digit_at(k), db = b.digit_at(k);
        if (!da || !db) return false;
        if (*da != *db) return false;
    }
    return true;
}

std::string series_str(const LaurentSeries& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    if (s.sign < 0) os << "-";
    if (s.t_exp == -1) os << "T^-1*";
    os << "[";
    for (size_t i = 0; i < s.head.size(); ++i) {
        if (i) os << " ";
        os << s.head[i];
    }
    os << "]@" << s.lo;
    if (s.tail == TailKind::Periodic) {
        os << " (";
        for (size_t i = 0; i < s.period.size(); ++i) {
            if (i) os << " ";
            os << s.period[i];
        }
        os << ")*";
    } else if (s.tail == TailKind::Truncated) {
        os << " ...@" << s.precision;
    }
    return os.str();
}

}  // namespace thetadic
