#include "thetadic/model_set.hpp"

#include <algorithm>

namespace thetadic {

bool Window::contains(const FieldElt& v) const {
    int cl = cmp_real(v, lo);
    if (cl < 0 || (cl == 0 && !lo_closed)) return false;
    int ch = cmp_real(v, hi);
    if (ch > 0 || (ch == 0 && !hi_closed)) return false;
    return true;
}

ModelSet model_set(const ThetaParams& params, const Window& window,
                   const FieldElt& radius) {
    if (cmp_real(window.lo, window.hi) >= 0)
        throw std::invalid_argument("model_set: empty window");
    if (sign_real(radius) <= 0)
        throw std::invalid_argument("model_set: radius must be positive");

    ModelSet out{window, radius, {}};
    // q (theta - theta') = value - conjugate lies in
    // [-R - whi, R - wlo]; theta - theta' = sqrt(D) = 2 theta - a.
    FieldElt sqrtD(make_elt(params, -params.a(), 2));
    Int qmax = floor_real((radius - window.lo) / sqrtD);
    Int qmin = -floor_real((radius + window.hi) / sqrtD) - 1;
    const FieldElt th(make_theta(params));
    const FieldElt thconj(conj(make_theta(params)));
    for (Int q = qmin; q <= qmax; ++q) {
        FieldElt qf(make_int(params, q));
        // -R - q theta <= p <= R - q theta  and window bounds on p + q theta'
        Int plo1 = -floor_real(radius + qf * th) - 1;
        Int phi1 = floor_real(radius - qf * th) + 1;
        Int plo2 = -floor_real(-(window.lo - qf * thconj)) - 1;
        Int phi2 = floor_real(window.hi - qf * thconj) + 1;
        Int plo = plo1 > plo2 ? plo1 : plo2;
        Int phi = phi1 < phi2 ? phi1 : phi2;
        for (Int p = plo; p <= phi; ++p) {
            RingElt cand = make_elt(params, p, q);
            if (cmp_real(FieldElt(abs_real(cand)), radius) > 0 ||
                !window.contains(conj(cand)))
                continue;
            out.points.push_back(cand);
        }
    }
    std::sort(out.points.begin(), out.points.end(), less_real);
    return out;
}

namespace {

Window pm_one_window(const ThetaParams& params, bool closed) {
    Window w;
    w.lo = FieldElt(make_int(params, -1));
    w.hi = FieldElt(make_int(params, 1));
    w.lo_closed = closed;
    w.hi_closed = closed;
    return w;
}

}  // namespace

ModelSet qc_ring_A(const ThetaParams& params, const FieldElt& radius) {
    return model_set(params, pm_one_window(params, true), radius);
}

ModelSet qc_ideal_m(const ThetaParams& params, const FieldElt& radius) {
    return model_set(params, pm_one_window(params, false), radius);
}

Window z_theta_window(const ThetaParams& params) {
    Window w;
    w.lo = FieldElt(make_int(params, params.n() == 1 ? -1 : 0));
    w.hi = FieldElt(make_theta(params));
    w.lo_closed = true;
    w.hi_closed = false;
    return w;
}

namespace {

// Depth-first enumeration of admissible digit words over exponents 0..K,
// ascending, pruning on the running value.  `run` tracks the n=-1
// forbidden-block state: an (a-1) so far followed only by (a-2)s.
void enum_words(const ThetaParams& prm, const FieldElt& R, long e, long K,
                const RingElt& value, const RingElt& power, long prev,
                bool run, std::vector<RingElt>& out) {
    if (e > K) {
        out.push_back(value);
        return;
    }
    const long a = prm.a();
    const RingElt next_power = theta_shift(power, 1);
    for (long d = 0; d <= prm.max_digit(); ++d) {
        if (prm.n() == 1 && d == a && prev != 0) continue;
        bool nrun = false;
        if (prm.n() == -1) {
            if (d == a - 1 && run) continue;  // would complete a block
            nrun = d == a - 1 ? true : (d == a - 2 ? run : false);
        }
        RingElt nv = d == 0 ? value : value + power * Int(d);
        if (d > 0 && cmp_real(FieldElt(nv), R) > 0) break;
        enum_words(prm, R, e + 1, K, nv, next_power, d, nrun, out);
    }
}

}  // namespace

std::vector<RingElt> greedy_polynomial_values(const ThetaParams& params,
                                              const FieldElt& R) {
    if (sign_real(R) <= 0)
        throw std::invalid_argument("greedy_polynomial_values: R > 0");
    long K = 0;
    FieldElt pw(make_int(params, 1));
    const FieldElt th(make_theta(params));
    while (cmp_real(pw * th, R) <= 0) {
        pw = pw * th;
        ++K;
    }
    std::vector<RingElt> out;
    enum_words(params, R, 0, K, make_int(params, 0), make_int(params, 1), 0,
               false, out);
    std::sort(out.begin(), out.end(), less_real);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<RingElt> r_ball(const ModelSet& set, const RingElt& center,
                            const FieldElt& R) {
    FieldElt need = FieldElt(abs_real(center)) + R;
    if (cmp_real(set.radius, need) < 0)
        throw precision_error("r_ball: generation radius shortfall");
    std::vector<RingElt> out;
    for (const RingElt& a : set.points) {
        RingElt t = a - center;
        if (cmp_real(FieldElt(abs_real(t)), R) <= 0) out.push_back(t);
    }
    return out;
}

bool cauchy_check(const std::vector<RingElt>& centers, const ModelSet& gen,
                  const FieldElt& R, size_t start_index) {
    if (centers.size() <= start_index + 1) return true;
    std::vector<RingElt> first = r_ball(gen, centers[start_index], R);
    for (size_t i = start_index + 1; i < centers.size(); ++i)
        if (r_ball(gen, centers[i], R) != first) return false;
    return true;
}

std::vector<RingElt> periods(const ModelSet& gen, const FieldElt& R,
                             const FieldElt& search_bound) {
    FieldElt need = search_bound + R;
    if (cmp_real(gen.radius, need) < 0)
        throw precision_error("periods: generation radius shortfall");
    const ThetaParams params = gen.radius.params();
    std::vector<RingElt> ball = r_ball(gen, make_int(params, 0), R);
    bool zero_in = false;
    for (const RingElt& x : ball)
        if (x.is_zero()) zero_in = true;
    if (!zero_in)
        throw std::invalid_argument("periods: 0 must belong to the R-ball");
    std::vector<RingElt> out;
    for (const RingElt& beta : gen.points) {
        if (cmp_real(FieldElt(abs_real(beta)), search_bound) > 0) continue;
        if (r_ball(gen, beta, R) == ball) out.push_back(beta);
    }
    return out;
}

std::vector<RingElt> gap_alphabet(const ModelSet& set) {
    if (set.points.size() < 2)
        throw std::invalid_argument("gap_alphabet: need at least two points");
    std::vector<RingElt> gaps;
    for (size_t i = 0; i + 1 < set.points.size(); ++i) {
        RingElt g = set.points[i + 1] - set.points[i];
        bool dup = false;
        for (const RingElt& h : gaps)
            if (h == g) dup = true;
        if (!dup) gaps.push_back(g);
    }
    std::sort(gaps.begin(), gaps.end(), less_real);
    return gaps;
}

std::vector<RingElt> LimitSetResult::in_points() const {
    std::vector<RingElt> out;
    for (const auto& lp : points)
        if (lp.status == LimitPoint::Status::In) out.push_back(lp.point);
    return out;
}

LimitSetResult series_limit_qc(const LaurentSeries& s,
                               const ThetaParams& params, const FieldElt& R,
                               long precision) {
    validate(s, params);
    ConjValue cv = conj_value(s, params, precision);
    LimitSetResult res;
    res.window_exact = cv.exact;
    res.window.lo = cv.center - FieldElt(make_int(params, 1));
    res.window.hi = cv.center + FieldElt(make_int(params, 1));
    res.window.lo_closed = false;
    res.window.hi_closed = false;

    if (cv.exact && !s.is_finite()) {
        // Half-open selection when the limit conjugate is an O_K value: the
        // tail parity (n=+1) resp. the series type (n=-1) decides which
        // boundary joins the window.
        FieldElt pre = conj(cv.center);
        if (pre.is_integral()) {
            if (params.n() == 1 && s.tail == TailKind::Periodic) {
                // eventual a-tail at alternate exponents: locate an `a`
                long e = s.head_hi() + 1;  // first tail exponent
                long a_pos = -1;
                if (*s.digit_at(e) == params.a())
                    a_pos = e;
                else if (*s.digit_at(e + 1) == params.a())
                    a_pos = e + 1;
                if (a_pos >= 0) {
                    bool even = ((a_pos % 2) + 2) % 2 == 0;
                    if (even)
                        res.window.lo_closed = true;  // W_L = [-1+x', 1+x')
                    else
                        res.window.hi_closed = true;  // W_R = (-1+x', 1+x']
                }
            } else if (params.n() == -1) {
                RingElt alpha = pre.as_ring();  // alpha' = limit value
                bool alpha_o0 = in_o0(alpha);
                bool series_t0 = s.t_exp == 0;
                if (alpha_o0 == series_t0)
                    res.window.lo_closed = true;
                else
                    res.window.hi_closed = true;
            }
        }
    }

    // Candidate points: conj within the outer hull of the window interval.
    Window outer = res.window;
    outer.lo = outer.lo - cv.radius;
    outer.hi = outer.hi + cv.radius;
    outer.lo_closed = true;
    outer.hi_closed = true;
    ModelSet cand = model_set(params, outer, R);

    Window inner = res.window;
    inner.lo = inner.lo + cv.radius;
    inner.hi = inner.hi - cv.radius;

    for (const RingElt& pt : cand.points) {
        RingElt cp = conj(pt);
        LimitPoint lp{pt, LimitPoint::Status::Ambiguous};
        if (cv.exact) {
            lp.status = res.window.contains(cp) ? LimitPoint::Status::In
                                                : LimitPoint::Status::Out;
        } else if (inner.contains(cp)) {
            lp.status = LimitPoint::Status::In;
        }
        // points outside `outer` were never enumerated, so the remaining
        // candidates are boundary-ambiguous
        if (lp.status == LimitPoint::Status::Ambiguous) ++res.ambiguous;
        res.points.push_back(lp);
    }
    return res;
}

}  // namespace thetadic
