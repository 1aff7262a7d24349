#include "thetadic/greedy.hpp"

#include <map>

namespace thetadic {

std::vector<long> renyi_d1(const ThetaParams& params, size_t len) {
    std::vector<long> t(len, 0);
    if (len == 0) return t;
    if (params.n() == 1) {
        t[0] = params.a();
        if (len > 1) t[1] = 1;
    } else {
        t[0] = params.a() - 1;
        for (size_t i = 1; i < len; ++i) t[i] = params.a() - 2;
    }
    return t;
}

bool is_greedy(const std::vector<long>& digits, const ThetaParams& params) {
    const long a = params.a();
    if (params.n() == 1) {
        for (size_t i = 0; i < digits.size(); ++i) {
            if (digits[i] < 0 || digits[i] > a) return false;
            // "If b_i = a then b_{i-1} = 0": next-lower exponent digit.
            if (digits[i] == a && i > 0 && digits[i - 1] != 0) return false;
        }
        return true;
    }
    for (long d : digits)
        if (d < 0 || d > a - 2 + 1) return false;
    // Forbidden block (a-1)(a-2)^k(a-1), k >= 0; palindromic, so scanning
    // order does not matter.
    long last_high = -1;  // index of the most recent a-1, with only a-2 since
    for (size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] == a - 1) {
            if (last_high >= 0) return false;
            last_high = static_cast<long>(i);
        } else if (digits[i] != a - 2) {
            last_high = -1;
        }
    }
    return true;
}

namespace {

// Greedy digit loop on a positive O_K value: fills digits of x descending
// from its top power; x must satisfy x > 0.
void expand_positive(const RingElt& x, long budget, GreedyWord& out) {
    const ThetaParams prm = x.params();
    const long maxd = prm.max_digit();

    // Locate the top exponent k with theta^k <= x < theta^{k+1}.
    long k = 0;
    RingElt pw = make_int(prm, 1);
    if (cmp_real(x, pw) >= 0) {
        for (;;) {
            RingElt nxt = theta_shift(pw, 1);
            if (cmp_real(x, nxt) < 0) break;
            pw = nxt;
            ++k;
            if (k > budget) throw expansion_error("expand: exponent overflow");
        }
    } else {
        do {
            pw = theta_shift(pw, -1);
            --k;
            if (-k > budget) throw expansion_error("expand: exponent underflow");
        } while (cmp_real(x, pw) < 0);
    }

    const long hi = k;
    std::vector<long> rev;  // digits from hi downward
    RingElt r = x;
    long steps = 0;
    while (!r.is_zero()) {
        if (++steps > budget) throw expansion_error("expand: digit budget");
        // r < theta^{k+1}; extract d = max digit with d*theta^k <= r.
        long d = 0;
        RingElt acc = make_int(prm, 0);
        while (d < maxd) {
            RingElt nxt = acc + pw;
            if (cmp_real(r, nxt) < 0) break;
            acc = nxt;
            ++d;
        }
        rev.push_back(d);
        r = r - acc;
        if (r.is_zero()) break;
        do {
            pw = theta_shift(pw, -1);
            --k;
            if (hi - k > budget) throw expansion_error("expand: digit budget");
        } while (cmp_real(r, pw) < 0);
        // pad skipped exponents with zeros
        while (static_cast<long>(rev.size()) < hi - k) rev.push_back(0);
    }
    out.lo = k;
    out.digits.assign(rev.rbegin(), rev.rend());
}

}  // namespace

GreedyWord expand(const RingElt& x, long digit_budget) {
    GreedyWord w;
    if (x.is_zero()) return w;
    const ThetaParams prm = x.params();
    int s = sign_real(x);
    RingElt ax = s < 0 ? -x : x;
    if (prm.n() == -1 && sign_real(conj(x)) != s) {
        // Mixed signs: expand T*|x|, record the formal 1/T factor.
        w.t_exp = -1;
        ax = ax * t_elt(prm);
    }
    w.sign = s;
    expand_positive(ax, digit_budget, w);
    return w;
}

RingElt evaluate(const GreedyWord& w, const ThetaParams& params) {
    if (w.is_zero()) return make_int(params, 0);
    RingElt v = make_int(params, 0);
    for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it) {
        v = theta_shift(v, 1);
        v = v + make_int(params, *it);
    }
    v = theta_shift(v, w.lo);
    if (w.t_exp == -1) v = div_t_exact(v);
    if (w.sign < 0) v = -v;
    return v;
}

GreedyWord normalize(const std::vector<Int>& raw, long lo,
                     const ThetaParams& params) {
    int seen = 0;
    for (const Int& d : raw) {
        int s = sgn(d);
        if (s == 0) continue;
        if (seen == 0) seen = s;
        if (s != seen)
            throw std::invalid_argument("normalize: mixed-sign digit vector");
    }
    RingElt v = make_int(params, 0);
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
        v = theta_shift(v, 1);
        v = v + make_elt(params, *it, 0);
    }
    v = theta_shift(v, lo);
    return expand(v);
}

GreedyWord normalize_by_rewriting(const std::vector<Int>& raw, long lo,
                                  const ThetaParams& params,
                                  long step_budget) {
    int seen = 0;
    for (const Int& d : raw) {
        int s = sgn(d);
        if (s == 0) continue;
        if (seen == 0) seen = s;
        if (s != seen)
            throw std::invalid_argument("normalize: mixed-sign digit vector");
    }
    std::map<long, Int> c;  // exponent -> coefficient, all >= 0
    for (size_t i = 0; i < raw.size(); ++i) {
        Int d = seen < 0 ? Int(-raw[i]) : raw[i];
        if (d != 0) c[lo + static_cast<long>(i)] = d;
    }
    const long a = params.a();
    const int n = params.n();
    auto coeff = [&](long e) -> Int {
        auto it = c.find(e);
        return it == c.end() ? Int(0) : it->second;
    };
    auto addc = [&](long e, const Int& d) {
        if (d == 0) return;
        Int v = coeff(e) + d;
        if (v == 0)
            c.erase(e);
        else
            c[e] = v;
    };

    long steps = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        if (++steps > step_budget)
            throw expansion_error("normalize_by_rewriting: step budget");
        if (n == 1) {
            // Carry: c >= a+1 at e rewrites via
            // (a+i) th^e = th^{e+1} + (i-1) th^e + (a-1) th^{e-1} + th^{e-2}.
            for (auto it = c.rbegin(); it != c.rend(); ++it) {
                if (it->second >= a + 1) {
                    long e = it->first;
                    addc(e, Int(-(a + 1)));
                    addc(e + 1, 1);
                    addc(e - 1, Int(a - 1));
                    addc(e - 2, 1);
                    changed = true;
                    break;
                }
            }
            if (changed) continue;
            // Fibonacci relation: a th^{e+1} + th^e = th^{e+2}.
            for (auto it = c.rbegin(); it != c.rend(); ++it) {
                long e = it->first;
                if (it->second >= a && coeff(e - 1) >= 1) {
                    addc(e, Int(-a));
                    addc(e - 1, -1);
                    addc(e + 1, 1);
                    changed = true;
                    break;
                }
            }
        } else {
            // Fibonacci relation a th^e = th^{e+1} + th^{e-1} clears any
            // coefficient >= a.
            for (auto it = c.rbegin(); it != c.rend(); ++it) {
                if (it->second >= a) {
                    long e = it->first;
                    addc(e, Int(-a));
                    addc(e + 1, 1);
                    addc(e - 1, 1);
                    changed = true;
                    break;
                }
            }
            if (changed) continue;
            // Forbidden block (a-1) (a-2)^k (a-1) collapses to
            // th^{lo-1} + th^{hi+1}.
            long run_hi = 0;
            bool in_run = false;
            // scan descending exponents for  (a-1), (a-2)*, (a-1)
            long prev = 0;
            bool have_prev = false;
            for (auto it = c.rbegin(); it != c.rend(); ++it) {
                long e = it->first;
                if (have_prev && prev - e != 1) in_run = false;
                prev = e;
                have_prev = true;
                if (it->second == a - 1) {
                    if (in_run) {
                        // block spans run_hi .. e
                        addc(run_hi, Int(-(a - 1)));
                        addc(e, Int(-(a - 1)));
                        for (long j = e + 1; j < run_hi; ++j)
                            addc(j, Int(-(a - 2)));
                        addc(run_hi + 1, 1);
                        addc(e - 1, 1);
                        changed = true;
                        break;
                    }
                    in_run = true;
                    run_hi = e;
                } else if (it->second != a - 2) {
                    in_run = false;
                }
            }
        }
    }

    GreedyWord w;
    if (c.empty()) return w;
    w.sign = seen == 0 ? 0 : seen;
    if (w.sign == 0) return w;
    w.lo = c.begin()->first;
    long hi = c.rbegin()->first;
    w.digits.assign(static_cast<size_t>(hi - w.lo + 1), 0);
    for (auto& [e, d] : c)
        w.digits[static_cast<size_t>(e - w.lo)] = d.get_si();
    if (!is_greedy(w.digits, params))
        throw expansion_error("normalize_by_rewriting: not greedy at fixpoint");
    return w;
}

bool carry_identity_check(const ThetaParams& params, long i, long k) {
    const long a = params.a();
    RingElt lhs(params, 0, 0), rhs(params, 0, 0);
    std::vector<long> rhs_digits;
    if (params.n() == 1) {
        if (i < 1 || i > a) throw std::invalid_argument("carry check: i range");
        lhs = theta_pow(params, k) * Int(a + i);
        rhs = theta_pow(params, k + 1) + theta_pow(params, k) * Int(i - 1) +
              theta_pow(params, k - 1) * Int(a - 1) + theta_pow(params, k - 2);
        rhs_digits = {1, a - 1, i - 1, 1};
    } else {
        if (i < 1 || i > a - 1)
            throw std::invalid_argument("carry check: i range");
        lhs = theta_pow(params, k) * Int(a - 1 + i);
        rhs = theta_pow(params, k + 1) + theta_pow(params, k) * Int(i - 1) +
              theta_pow(params, k - 1);
        rhs_digits = {1, i - 1, 1};
    }
    return lhs == rhs && is_greedy(rhs_digits, params);
}

bool forbidden_block_identity_check(const ThetaParams& params, long m, long k) {
    if (params.n() != -1)
        throw std::invalid_argument("forbidden block check: n=-1 only");
    if (k < 1) throw std::invalid_argument("forbidden block check: k >= 1");
    const long a = params.a();
    RingElt lhs = theta_pow(params, m) * Int(a - 1) +
                  theta_pow(params, m + k) * Int(a - 1);
    for (long j = 1; j < k; ++j)
        lhs = lhs + theta_pow(params, m + j) * Int(a - 2);
    RingElt rhs = theta_pow(params, m - 1) + theta_pow(params, m + k + 1);
    return lhs == rhs;
}

}  // namespace thetadic
