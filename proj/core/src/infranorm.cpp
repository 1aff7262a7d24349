#include "thetadic/infranorm.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetadic {

namespace {

// z in the theta-integer window: [-1, theta) for n=+1, [0, theta) for n=-1.
bool in_window(const RingElt& z) {
    const ThetaParams prm = z.params();
    if (prm.n() == 1) {
        if (sign_real(z + make_int(prm, 1)) < 0) return false;
    } else if (sign_real(z) < 0) {
        return false;
    }
    return sign_real(make_theta(prm) - z) > 0;
}

}  // namespace

// The valuation (lowest greedy exponent) without materializing digits: for
// positive y, lo(y) >= k iff conj(theta^{-k} y) lies in the theta-integer
// window, so walk the conjugate by conj(theta^{-1}) factors and test.
long valuation(const RingElt& x) {
    const ThetaParams prm = x.params();
    RingElt y = abs_real(x);
    if (prm.n() == -1 && sign_real(conj(x)) != sign_real(x))
        y = abs_real(x * t_elt(prm));  // |x|_theta := |T x|_theta
    RingElt z = conj(y);
    const RingElt down = conj(theta_pow(prm, -1));
    const RingElt up = conj(make_theta(prm));
    long k = 0;
    if (in_window(z)) {
        for (;;) {
            RingElt nz = z * down;
            if (!in_window(nz)) return k;
            z = std::move(nz);
            ++k;
        }
    }
    do {
        z = z * up;
        --k;
    } while (!in_window(z));
    return k;
}

NormValue infranorm(const RingElt& x) {
    if (x.is_zero()) return NormValue{};
    return NormValue{valuation(x)};
}

NormValue inframetric(const RingElt& x, const RingElt& y) {
    return infranorm(x - y);
}

long infratriangle_ratio(const RingElt& x, const RingElt& y) {
    if (x.is_zero() || y.is_zero())
        throw std::invalid_argument("infratriangle_ratio: nonzero inputs");
    long vx = *infranorm(x).v, vy = *infranorm(y).v;
    long vmin = std::min(vx, vy);
    long k = 0;
    for (const RingElt& s : {x + y, x - y}) {
        if (s.is_zero()) continue;  // |0| <= anything
        long vs = *infranorm(s).v;
        k = std::max(k, vmin - vs);
    }
    return k;
}

long inframult_exponent_gap(const std::vector<RingElt>& xs) {
    if (xs.size() < 2)
        throw std::invalid_argument("inframult_exponent_gap: need k >= 2");
    RingElt prod = make_int(xs.front().params(), 1);
    long vsum = 0;
    for (const RingElt& x : xs) {
        if (x.is_zero())
            throw std::invalid_argument("inframult_exponent_gap: zero input");
        vsum += *infranorm(x).v;
        prod = prod * x;
    }
    // |prod| / prod|x_i| = theta^{vsum - v(prod)}
    return vsum - *infranorm(prod).v;
}

bool in_o0(const RingElt& x) {
    if (x.is_zero()) return true;
    return sign_real(x) == sign_real(conj(x));
}

bool conj_comparability_check(const RingElt& x) {
    if (x.is_zero())
        throw std::invalid_argument("conj_comparability_check: x != 0");
    const ThetaParams prm = x.params();
    long v = *infranorm(x).v;
    RingElt c = abs_real(conj(x));
    // theta^{-v-1} <= |x'| <= (a+1) theta^{-v+1}
    RingElt lowb = theta_pow(prm, -v - 1);
    RingElt highb = theta_pow(prm, -v + 1) * Int(prm.a() + 1);
    return cmp_real(lowb, c) <= 0 && cmp_real(c, highb) <= 0;
}

bool reverse_infratriangle_check(const RingElt& x, const RingElt& y) {
    if (x.is_zero()) return true;
    long vx = *infranorm(x).v;
    if (!y.is_zero()) {
        long vy = *infranorm(y).v;
        // hypothesis theta^2 |y| < |x|  <=>  vx < vy - 2
        if (!(vx < vy - 2)) return true;
    }
    RingElt d = x - y;
    if (d.is_zero()) return false;
    return *infranorm(d).v <= vx + 2;
}

}  // namespace thetadic
