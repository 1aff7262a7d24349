#include "thetadic/invert.hpp"

#include <map>
#include <stdexcept>

namespace thetadic {

long PrimeInverse::digit(long i) const {
    if (t_special)
        throw std::logic_error("PrimeInverse: t_special has no digit stream");
    if (i < 0) return 0;
    if (i == 0) return digit0;
    size_t j = static_cast<size_t>(i - 1);
    if (j < head.size()) return head[j];
    return block[(j - head.size()) % block.size()];
}

TruncValue PrimeInverse::truncation(const ThetaParams& params, long k) const {
    if (t_special) {
        // x_k = T + m (theta + ... + theta^k); value is T^{-1} x_k.
        RingElt xk = t_elt(params);
        RingElt geo = make_int(params, 0);
        for (long i = 0; i < k; ++i)
            geo = theta_shift(geo, 1) + make_int(params, special_m);
        xk = xk + theta_shift(geo, 1);
        return TruncValue{xk, -1};
    }
    RingElt v = make_int(params, 0);
    for (long i = k; i >= 0; --i) {
        v = theta_shift(v, 1);
        v = v + make_int(params, digit(i));
    }
    return TruncValue{v, 0};
}

RingElt PrimeInverse::residual(const ThetaParams& params, long k) const {
    TruncValue t = truncation(params, k);
    if (t.t_exp == 0) return t.w * p - make_int(params, 1);
    // T^{-1}(p x_k - T); the division is exact here.
    return div_t_exact(t.w * p - t_elt(params));
}

LaurentSeries PrimeInverse::plus_part(long upto) const {
    LaurentSeries s;
    s.sign = 1;
    s.lo = 0;
    for (long i = 0; i <= upto; ++i)
        s.head.push_back(std::max<long>(digit(i), 0));
    s.tail = TailKind::Truncated;
    s.precision = upto;
    while (!s.head.empty() && s.head.front() == 0) {
        s.head.erase(s.head.begin());
        ++s.lo;
    }
    if (s.head.empty()) s.sign = 0;
    return s;
}

LaurentSeries PrimeInverse::minus_part(long upto) const {
    LaurentSeries s;
    s.sign = 1;
    s.lo = 0;
    for (long i = 0; i <= upto; ++i)
        s.head.push_back(digit(i) < 0 ? -digit(i) : 0);
    s.tail = TailKind::Truncated;
    s.precision = upto;
    while (!s.head.empty() && s.head.front() == 0) {
        s.head.erase(s.head.begin());
        ++s.lo;
    }
    if (s.head.empty()) s.sign = 0;
    return s;
}

namespace {

long ceil_div(long x, long y) { return (x + y - 1) / y; }

// Digit stream for a prime p with p not dividing a (n=+1): the c-recursion
// c_0 = p-1, c_1 = b, c_i = c_{i-2} - b c_{i-1} mod p, with
// e_1 = ceil(a(p-1)/p) and, for i >= 2, e_i a floor or ceiling of
// a*c_{i-1}/p selected by the sign of c_{i-2} + d_{i-1} - p.
PrimeInverse general_stream_norm_minus1(const ThetaParams& params, long p) {
    const long a = params.a();
    const long b = a % p;
    PrimeInverse pi;
    pi.p = p;
    pi.digit0 = 1;

    std::vector<long> c = {p - 1, b};
    std::vector<long> e = {0, ceil_div(a * (p - 1), p)};  // e[1] = e_1
    auto push_next = [&]() {
        size_t i = c.size();
        long ci = ((c[i - 2] - b * c[i - 1]) % p + p) % p;
        c.push_back(ci);
        // digit e_i for i >= 2
        if (c[i - 1] == 0) {
            e.push_back(0);
            return;
        }
        long d = p * ceil_div(a * c[i - 1], p) - a * c[i - 1];
        long val = (c[i - 2] + d - p >= 0) ? (a * c[i - 1]) / p
                                           : ceil_div(a * c[i - 1], p);
        e.push_back(val);
    };

    // states (c_{i-1}, c_i) are purely periodic
    std::map<std::pair<long, long>, size_t> seen;
    seen[{c[0], c[1]}] = 1;
    size_t mu = 0, piL = 0;
    for (size_t i = 2;; ++i) {
        push_next();
        auto key = std::make_pair(c[i - 1], c[i]);
        auto it = seen.find(key);
        if (it != seen.end()) {
            mu = it->second;
            piL = i - it->second;
            break;
        }
        seen[key] = i;
    }
    // digits e_i are periodic from i = mu+1 with period piL
    while (e.size() < mu + 2 * piL + 1) push_next();
    pi.head.assign(e.begin() + 1, e.begin() + static_cast<long>(mu) + 1);
    pi.block.assign(e.begin() + static_cast<long>(mu) + 1,
                    e.begin() + static_cast<long>(mu + piL) + 1);
    return pi;
}

// n=-1 counterpart: c_0 = 1, c_1 = b in {1..p} (b != 2), c_i = b c_{i-1} -
// c_{i-2} mod p kept in {1..p}; e_1 = floor((a-1)/p) and
// e_i = (-c_i + a c_{i-1} - c_{i-2}) / p in [-1, a-1].
PrimeInverse general_stream_norm_plus1(const ThetaParams& params, long p) {
    const long a = params.a();
    long b = a % p;
    if (b == 0) b = p;
    PrimeInverse pi;
    pi.p = p;
    pi.digit0 = 0;

    std::vector<long> c = {1, b};
    std::vector<long> e = {0, (a - 1) / p};
    auto push_next = [&]() {
        size_t i = c.size();
        long ci = ((b * c[i - 1] - c[i - 2]) % p + p) % p;
        if (ci == 0) ci = p;
        c.push_back(ci);
        e.push_back((-c[i] + a * c[i - 1] - c[i - 2]) / p);
    };

    std::map<std::pair<long, long>, size_t> seen;
    seen[{c[0], c[1]}] = 1;
    size_t mu = 0, piL = 0;
    for (size_t i = 2;; ++i) {
        push_next();
        auto key = std::make_pair(c[i - 1], c[i]);
        auto it = seen.find(key);
        if (it != seen.end()) {
            mu = it->second;
            piL = i - it->second;
            break;
        }
        seen[key] = i;
    }
    while (e.size() < mu + 2 * piL + 1) push_next();
    pi.head.assign(e.begin() + 1, e.begin() + static_cast<long>(mu) + 1);
    pi.block.assign(e.begin() + static_cast<long>(mu) + 1,
                    e.begin() + static_cast<long>(mu + piL) + 1);
    return pi;
}

PrimeInverse invert_prime(const ThetaParams& params, long p) {
    const long a = params.a();
    if (params.n() == 1) {
        if (a % p == 0) {
            PrimeInverse pi;
            pi.p = p;
            pi.digit0 = 1;
            pi.block = {a / p * (p - 1), 0};
            return pi;
        }
        return general_stream_norm_minus1(params, p);
    }
    if ((a - 2) % p == 0) {
        PrimeInverse pi;
        pi.p = p;
        pi.t_special = true;
        pi.special_m = Int((a - 2) / p * (p - 1));
        return pi;
    }
    return general_stream_norm_plus1(params, p);
}

}  // namespace

FieldElt InverseSeries::truncation_value(long k) const {
    FieldElt v(make_int(params_, 1));
    for (const auto& [pi, mult] : factors_) {
        FieldElt t = trunc_value(pi.truncation(params_, k));
        for (int j = 0; j < mult; ++j) v = v * t;
    }
    return v;
}

RingElt InverseSeries::residual(long k) const {
    // n * prod(t_i) - 1 = prod(1 + r_i) - 1 with every r_i in O_K.
    RingElt acc = make_int(params_, 1);
    for (const auto& [pi, mult] : factors_) {
        RingElt r = pi.residual(params_, k);
        RingElt one_plus = r + make_int(params_, 1);
        for (int j = 0; j < mult; ++j) acc = acc * one_plus;
    }
    return acc - make_int(params_, 1);
}

InverseSeries invert_integer(const ThetaParams& params, const Int& n) {
    if (n < 2) throw std::invalid_argument("invert_integer: n >= 2");
    if (!n.fits_slong_p())
        throw std::invalid_argument("invert_integer: n too large");
    long m = n.get_si();
    std::vector<std::pair<PrimeInverse, int>> factors;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        int mult = 0;
        while (m % p == 0) {
            m /= p;
            ++mult;
        }
        factors.emplace_back(invert_prime(params, p), mult);
    }
    if (m > 1) factors.emplace_back(invert_prime(params, m), 1);
    return InverseSeries(params, n, std::move(factors));
}

NormValue residual_norm(const InverseSeries& inv, long k) {
    return infranorm(inv.residual(k));
}

ElementInverse::ElementInverse(RingElt x) : x_(std::move(x)) {
    if (x_.is_zero()) throw std::invalid_argument("invert_element: x != 0");
    nrm_ = field_norm(x_);
    Int an = abs(nrm_);
    if (an > 1) nrm_inv_ = invert_integer(x_.params(), an);
}

FieldElt ElementInverse::truncation_value(long k) const {
    FieldElt c(conj(x_));
    if (!nrm_inv_) return sgn(nrm_) < 0 ? -c : c;
    FieldElt t = nrm_inv_->truncation_value(k);
    return sgn(nrm_) < 0 ? -(c * t) : c * t;
}

RingElt ElementInverse::residual(long k) const {
    if (!nrm_inv_) return make_int(x_.params(), 0);
    // x * t_k - 1 = |N| * trunc_k(|N|^-1) - 1
    return nrm_inv_->residual(k);
}

ElementInverse invert_element(const RingElt& x) { return ElementInverse(x); }

bool hermite_identity_check(long n, long b) {
    if (!(1 <= b && b < n)) throw std::invalid_argument("hermite: 1 <= b < n");
    long lhs = ((n - 1) * b + n - 1) / n;  // ceil((n-1)b/n)
    return lhs == b;
}

OscillationReport infraoscillation_witness(const ThetaParams& params,
                                           long max_n) {
    if (params.n() != 1)
        throw std::invalid_argument("infraoscillation_witness: n=+1 only");
    const long a = params.a();
    OscillationReport rep;
    rep.max_n = max_n;

    auto f_elt = [&](long n) {
        if (n % 2 == 0) {
            RingElt v = make_int(params, 0);  // a th^2 + ... + a th^n
            for (long e = 2; e <= n; e += 2)
                v = v + theta_pow(params, e) * Int(a);
            return v;
        }
        RingElt v = make_int(params, 1) + make_theta(params) * Int(a - 1);
        for (long e = 3; e <= n; e += 2) v = v + theta_pow(params, e) * Int(a);
        return v;
    };
    auto g_elt = [&](long n) {
        if (n % 2 == 0) return -make_theta(params);
        return f_elt(n);
    };

    rep.f_pattern_ok = true;
    rep.g_pattern_ok = true;
    for (long n = 2; n <= max_n; ++n) {
        long vf = *infranorm(f_elt(n)).v;
        long vg = *infranorm(g_elt(n)).v;
        rep.f_valuations.push_back(vf);
        rep.g_valuations.push_back(vg);
        if (vf != (n % 2 == 0 ? 2 : 0)) rep.f_pattern_ok = false;
        if (vg != (n % 2 == 0 ? 1 : 0)) rep.g_pattern_ok = false;
    }

    // Exact lowest exponents of all pairwise differences, per the worked
    // difference expansions: the same-parity differences start at n+2, the
    // mixed-parity ones at n (m > n throughout).
    rep.differences_ok = true;
    for (long n = 2; n <= max_n; ++n) {
        for (long m = n + 1; m <= max_n; ++m) {
            long lo = expand(f_elt(m) - f_elt(n)).lo;
            long expect = (m % 2 == n % 2) ? n + 2 : n;
            if (lo != expect) rep.differences_ok = false;
            if (m % 2 == 1 && n % 2 == 0) {
                // g_{2j+1} - g_{2i} telescopes all the way to theta^{m+1}.
                long glo = expand(g_elt(m) - g_elt(n)).lo;
                if (glo != m + 1) rep.differences_ok = false;
            }
        }
    }
    return rep;
}

}  // namespace thetadic
