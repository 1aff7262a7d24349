#include "thetadic/multiops.hpp"

#include <algorithm>
#include <limits>

namespace thetadic {

namespace {

enum class Op { Add, Mul };

LaurentSeries zero_series() { return LaurentSeries{}; }

// Word of a partial value T^{t_exp} * w; the digit part may carry its own
// formal T factor when w has mixed signs (n=-1), which combines with t_exp.
// A combined exponent below -1 has no admissible partial-sum shape and the
// word is marked invalid.
struct PartialWord {
    bool valid = true;
    int sign = 0;
    int t_exp = 0;
    GreedyWord word;  // digit part, sign stripped
};

PartialWord partial_word(const TruncValue& t) {
    PartialWord pw;
    if (t.w.is_zero()) return pw;
    pw.sign = sign_real(t.w);
    GreedyWord g = expand(abs_real(t.w));
    pw.t_exp = t.t_exp + g.t_exp;
    g.t_exp = 0;
    pw.word = g;
    if (pw.t_exp < -1) pw.valid = false;
    return pw;
}

// Highest exponent e such that a and b agree on all digits <= e.  Returns
// LONG_MIN-ish when they disagree structurally.
long common_prefix_exponent(const PartialWord& a, const PartialWord& b) {
    constexpr long kNone = std::numeric_limits<long>::min() / 2;
    if (!a.valid || !b.valid) return kNone;
    if (a.sign != b.sign || a.t_exp != b.t_exp) return kNone;
    if (a.sign == 0) return std::numeric_limits<long>::max() / 2;
    if (a.word.lo != b.word.lo) return kNone;
    long e = a.word.lo - 1;
    long top = std::max(a.word.hi(), b.word.hi());
    for (long k = a.word.lo; k <= top; ++k) {
        if (a.word.digit_at(k) != b.word.digit_at(k)) break;
        e = k;
    }
    return e;
}

// Detect a repeating block in digits[from..] (exponent-indexed vector) and
// classify the tail; require at least three full repetitions of the block
// at the end of the known range.
void classify_tail(LaurentSeries& s, long known_hi) {
    const long n = static_cast<long>(s.head.size());
    if (n == 0) return;
    // strip trailing zeros first: if the tail is all zero, call it Finite
    // only when the series is genuinely finite -- unknowable here, so keep
    // Truncated unless a period is found.
    for (long L = 1; L <= std::min<long>(8, n / 3); ++L) {
        bool ok = true;
        // require the last 3L digits to repeat with period L, and extend the
        // match backwards as far as it goes
        for (long i = n - 3 * L; i < n - L; ++i) {
            if (s.head[static_cast<size_t>(i)] !=
                s.head[static_cast<size_t>(i + L)]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        long start = n - 3 * L;
        while (start > 0 && s.head[static_cast<size_t>(start - 1)] ==
                                s.head[static_cast<size_t>(start - 1 + L)])
            --start;
        std::vector<long> block(s.head.begin() + start,
                                s.head.begin() + start + L);
        if (std::all_of(block.begin(), block.end(),
                        [](long d) { return d == 0; })) {
            // trailing zeros: treat as a truncated-but-zero tail
            continue;
        }
        s.period = block;
        s.head.resize(static_cast<size_t>(start));
        s.tail = TailKind::Periodic;
        return;
    }
    s.tail = TailKind::Truncated;
    s.precision = known_hi;
}

// Canonical partial-sum stabilization: combine prefix truncations, expand,
// and look for subsequences (period p <= 4) whose words stabilize with
// linearly growing common prefixes.
std::vector<AnnotatedSeries> stabilize(const LaurentSeries& x,
                                       const LaurentSeries& y,
                                       const ThetaParams& params, Op op,
                                       long depth) {
    std::vector<AnnotatedSeries> out;
    const long slack = 8;
    long base = std::min(x.is_zero() ? 0 : x.lo, y.is_zero() ? 0 : y.lo);
    long e_hi = base + depth + 2 * slack;
    if (x.tail == TailKind::Truncated) e_hi = std::min(e_hi, x.precision);
    if (y.tail == TailKind::Truncated) e_hi = std::min(e_hi, y.precision);
    const long N = e_hi - base;
    if (N < 8) return out;
    depth = std::min(depth, e_hi - 2 * slack);

    std::vector<PartialWord> words;
    words.reserve(static_cast<size_t>(N));
    for (long n = 1; n <= N; ++n) {
        long e = base + n;
        TruncValue tx = truncate_at(x, params, e);
        TruncValue ty = truncate_at(y, params, e);
        TruncValue h;
        if (op == Op::Add) {
            h = trunc_sub(tx, TruncValue{-ty.w, ty.t_exp});
        } else {
            int te = tx.t_exp + ty.t_exp;
            RingElt w = tx.w * ty.w;
            if (te == -2) {
                // T^2 = (a-2) theta when n=-1; reduce when exact.
                try {
                    w = div_int_exact(theta_shift(w, -1), Int(params.a() - 2));
                    te = 0;
                } catch (const std::domain_error&) {
                    return out;  // not representable at this prefix depth
                }
            }
            h = TruncValue{w, te};
        }
        words.push_back(partial_word(h));
    }

    auto words_equal = [](const PartialWord& a, const PartialWord& b) {
        return a.valid && b.valid && a.sign == b.sign && a.t_exp == b.t_exp &&
               a.word == b.word;
    };

    auto emit = [&](const std::vector<size_t>& idx) {
        if (idx.size() < 4) return;
        const PartialWord& last = words[idx.back()];
        if (!last.valid) return;
        if (last.sign == 0) {
            out.push_back({zero_series(), true, "null sequence"});
            return;
        }
        // stationary tail: the exact finite word is the (single) limit
        bool stationary = true;
        for (size_t j = idx.size() - 4; j + 1 < idx.size(); ++j)
            if (!words_equal(words[idx[j]], last)) stationary = false;
        if (stationary) {
            LaurentSeries s;
            s.sign = last.sign;
            s.t_exp = last.t_exp;
            s.lo = last.word.lo;
            s.head = last.word.digits;
            s.tail = TailKind::Finite;
            out.push_back({s, true, "stationary partial sums"});
            return;
        }
        // require linearly growing agreement against the last word
        long need = depth;
        for (size_t j = 0; j + 1 < idx.size(); ++j) {
            long cpe = common_prefix_exponent(words[idx[j]], last);
            long expect = std::min<long>(
                need, base + 1 + static_cast<long>(idx[j]) - slack);
            if (cpe < expect) return;
        }
        if (need < last.word.lo) return;
        LaurentSeries s;
        s.sign = last.sign;
        s.t_exp = last.t_exp;
        s.lo = last.word.lo;
        for (long e = s.lo; e <= need; ++e)
            s.head.push_back(last.word.digit_at(e));
        classify_tail(s, need);
        if (s.tail == TailKind::Periodic) {
            try {
                validate(s, params);
            } catch (const std::invalid_argument&) {
                // the periodic reading does not extend admissibly
                s.head.clear();
                for (long e = s.lo; e <= need; ++e)
                    s.head.push_back(last.word.digit_at(e));
                s.period.clear();
                s.tail = TailKind::Truncated;
                s.precision = need;
            }
        }
        out.push_back({s, s.tail == TailKind::Periodic,
                       "partial-sum scheme, stabilized prefix"});
    };

    for (long p = 1; p <= 4; ++p) {
        for (long phase = 0; phase < p; ++phase) {
            std::vector<size_t> idx;
            for (size_t i = static_cast<size_t>(phase); i < words.size();
                 i += static_cast<size_t>(p))
                idx.push_back(i);
            emit(idx);
        }
        if (!out.empty()) break;  // smallest period that stabilizes wins
    }

    // dedupe
    std::vector<AnnotatedSeries> uniq;
    for (auto& m : out) {
        bool dup = false;
        for (auto& u : uniq)
            if (series_equal_to(m.series, u.series, depth)) dup = true;
        if (!dup) uniq.push_back(std::move(m));
    }
    return uniq;
}

// n=-1: the two series (one per type) whose conjugate value is the given
// non-O_K target r.
std::vector<AnnotatedSeries> fiber_over_field_value(const FieldElt& r,
                                                    const ThetaParams& params);

MultiValue multi_op(const LaurentSeries& x, const LaurentSeries& y,
                    const ThetaParams& params, Op op, long depth) {
    validate(x, params);
    validate(y, params);
    MultiValue mv;

    if (op == Op::Add) {
        if (x.is_zero() && y.is_zero()) {
            mv.members.push_back({zero_series(), true, "zero"});
            return mv;
        }
    } else if (x.is_zero() || y.is_zero()) {
        mv.members.push_back({zero_series(), true, "x*0 = 0"});
        return mv;
    }

    const bool exact_inputs = x.is_exact() && y.is_exact();
    if (!exact_inputs) {
        long d = depth;
        if (x.tail == TailKind::Truncated) d = std::min(d, x.precision);
        if (y.tail == TailKind::Truncated) d = std::min(d, y.precision);
        auto ms = stabilize(x, y, params, op, d);
        for (auto& m : ms) {
            m.exact = false;
            m.note += "; precision-limited";
            mv.members.push_back(std::move(m));
        }
        return mv;
    }

    FieldElt cx = conj_value_exact(x, params);
    FieldElt cy = conj_value_exact(y, params);
    FieldElt r = op == Op::Add ? cx + cy : cx * cy;
    if (r.is_zero()) {
        mv.members.push_back({zero_series(), true, "null class"});
        return mv;
    }

    // Sign reachable by partial combinations: the product of the signs for
    // a product, the common sign for a same-sign sum.  Mixed-sign sums have
    // no definite sign; those report the stabilized canonical schemes only.
    int want_sign = 0;
    if (op == Op::Mul)
        want_sign = x.sign * y.sign;
    else if (x.is_zero() || y.is_zero() || x.sign == y.sign)
        want_sign = x.is_zero() ? y.sign : x.sign;

    // For two finite words the canonical partial sums are stationary, so
    // the machinery's contribution is exactly the word of the plain value.
    const bool both_finite = x.is_finite() && y.is_finite();
    std::vector<AnnotatedSeries> machine;
    if (both_finite) {
        // finite words denote O_K elements, so the value is integral
        FieldElt val = trunc_value(truncate_at(x, params, x.head_hi())),
                 vy = trunc_value(truncate_at(y, params, y.head_hi()));
        val = op == Op::Add ? val + vy : val * vy;
        machine.push_back({series_from_word(expand(val.as_ring())), true,
                           "stationary partial sums"});
    } else {
        machine = stabilize(x, y, params, op, depth);
    }

    if (want_sign == 0) {
        for (auto& m : machine) mv.members.push_back(std::move(m));
        if (mv.members.empty()) {
            // no canonical scheme stabilized: fall back to the Cauchy-class
            // fiber so the result is never empty (multioperations are
            // nonempty)
            FieldElt w0 = conj(r);
            if (w0.is_integral()) {
                for (auto& m : representatives(w0.as_ring()).members) {
                    m.note += "; Cauchy-class member (no scheme found)";
                    mv.members.push_back(std::move(m));
                }
            } else if (params.n() == -1) {
                for (auto& m : fiber_over_field_value(r, params)) {
                    m.note += "; Cauchy-class member (no scheme found)";
                    mv.members.push_back(std::move(m));
                }
            }
        }
        return mv;
    }

    // Same-sign same-type finite sums restrict to the plain O_K sum (for
    // n=+1 the sign pruning below yields the same single member anyway).
    if (op == Op::Add && x.is_finite() && y.is_finite() &&
        x.t_exp == y.t_exp && params.n() == -1) {
        FieldElt val = trunc_value(truncate_at(x, params, x.head_hi())) +
                       trunc_value(truncate_at(y, params, y.head_hi()));
        mv.members.push_back(
            {series_from_word(expand(val.as_ring())), true, "finite word"});
        return mv;
    }

    auto merge = [&](std::vector<AnnotatedSeries> fib) {
        for (auto& m : fib) {
            if (m.series.sign != want_sign) continue;
            bool confirmed = false;
            for (auto& s : machine)
                if (series_equal_to(m.series, s.series, depth)) confirmed = true;
            m.note += confirmed ? "; partial-sum scheme verified"
                                : "; Cauchy-class member";
            mv.members.push_back(std::move(m));
        }
    };

    FieldElt w = conj(r);
    if (w.is_integral()) {
        merge(std::move(representatives(w.as_ring()).members));
        return mv;
    }
    // conjugate value outside conj(O_K): a unique member for n=+1 (found by
    // the machinery), two exactly constructible members for n=-1
    if (params.n() == -1) {
        merge(fiber_over_field_value(r, params));
        return mv;
    }
    for (auto& m : machine) mv.members.push_back(std::move(m));
    return mv;
}

std::vector<AnnotatedSeries> fiber_over_field_value(const FieldElt& r,
                                                    const ThetaParams& params) {
    std::vector<AnnotatedSeries> out;
    int rs = sign_real(r);
    // type-0 member: digits are the Renyi stream of |r|
    LaurentSeries t0 = renyi_series_of_value(rs < 0 ? -r : r, params);
    t0.sign = rs;
    validate(t0, params);
    out.push_back({t0, true, "series over conjugate value"});
    // type-1 member: s * T^{-1} * v with conj(v) = |r| (1 - 1/theta)
    FieldElt scale = FieldElt(t_elt(params)) / FieldElt(make_theta(params));
    FieldElt target = (rs < 0 ? -r : r) * scale;
    LaurentSeries v = renyi_series_of_value(target, params);
    v.sign = -rs;
    v.t_exp = -1;
    validate(v, params);
    out.push_back({v, true, "T-factored series over conjugate value"});
    return out;
}

}  // namespace

MultiValue multi_add(const LaurentSeries& x, const LaurentSeries& y,
                     const ThetaParams& params, long precision) {
    return multi_op(x, y, params, Op::Add, precision);
}

MultiValue multi_mul(const LaurentSeries& x, const LaurentSeries& y,
                     const ThetaParams& params, long precision) {
    return multi_op(x, y, params, Op::Mul, precision);
}

namespace {

MultiValue member_wise(const MultiValue& xs, const MultiValue& ys,
                       const ThetaParams& params, Op op, long precision) {
    MultiValue out;
    for (const auto& x : xs.members) {
        for (const auto& y : ys.members) {
            MultiValue one = op == Op::Add
                                 ? multi_add(x.series, y.series, params, precision)
                                 : multi_mul(x.series, y.series, params, precision);
            for (auto& m : one.members) {
                if (!multivalue_contains(out, m.series, precision))
                    out.members.push_back(std::move(m));
            }
        }
    }
    return out;
}

}  // namespace

MultiValue multi_add(const MultiValue& xs, const MultiValue& ys,
                     const ThetaParams& params, long precision) {
    return member_wise(xs, ys, params, Op::Add, precision);
}

MultiValue multi_mul(const MultiValue& xs, const MultiValue& ys,
                     const ThetaParams& params, long precision) {
    return member_wise(xs, ys, params, Op::Mul, precision);
}

bool multivalue_contains(const MultiValue& mv, const LaurentSeries& s,
                         long depth) {
    for (const auto& m : mv.members)
        if (series_equal_to(m.series, s, depth)) return true;
    return false;
}

bool multivalue_subset(const MultiValue& a, const MultiValue& b, long depth) {
    for (const auto& m : a.members)
        if (!multivalue_contains(b, m.series, depth)) return false;
    return true;
}

bool multivalue_equal(const MultiValue& a, const MultiValue& b, long depth) {
    return multivalue_subset(a, b, depth) && multivalue_subset(b, a, depth);
}

}  // namespace thetadic
