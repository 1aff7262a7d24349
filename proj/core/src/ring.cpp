#include "thetadic/ring.hpp"

#include <stdexcept>

namespace thetadic {

void RingElt::check_ctx(const RingElt& o) const {
    if (ctx_ != o.ctx_)
        throw std::logic_error("RingElt: mixed ThetaParams contexts");
}

RingElt RingElt::operator-() const {
    RingElt r(*this);
    r.p_ = -r.p_;
    r.q_ = -r.q_;
    return r;
}

RingElt RingElt::operator+(const RingElt& o) const {
    check_ctx(o);
    RingElt r(*this);
    r.p_ += o.p_;
    r.q_ += o.q_;
    return r;
}

RingElt RingElt::operator-(const RingElt& o) const {
    check_ctx(o);
    RingElt r(*this);
    r.p_ -= o.p_;
    r.q_ -= o.q_;
    return r;
}

RingElt RingElt::operator*(const RingElt& o) const {
    check_ctx(o);
    const ThetaParams prm = params();
    RingElt r(*this);
    // (p1 + q1 t)(p2 + q2 t) with t^2 = a t + n.
    Int p = p_ * o.p_ + Int(prm.n()) * q_ * o.q_;
    Int q = p_ * o.q_ + o.p_ * q_ + Int(prm.a()) * q_ * o.q_;
    r.p_ = std::move(p);
    r.q_ = std::move(q);
    return r;
}

RingElt RingElt::operator*(const Int& k) const {
    RingElt r(*this);
    r.p_ *= k;
    r.q_ *= k;
    return r;
}

std::string RingElt::str() const {
    if (q_ == 0) return p_.get_str();
    std::string s;
    if (p_ != 0) s += p_.get_str();
    if (q_ > 0 && !s.empty()) s += "+";
    if (q_ == -1)
        s += "-";
    else if (q_ != 1)
        s += q_.get_str() + "*";
    s += "theta";
    return s;
}

RingElt make_elt(const ThetaParams& params, const Int& p, const Int& q) {
    return RingElt(params, p, q);
}

RingElt make_int(const ThetaParams& params, const Int& k) {
    return RingElt(params, k, 0);
}

RingElt make_theta(const ThetaParams& params) { return RingElt(params, 0, 1); }

RingElt conj(const RingElt& x) {
    const ThetaParams prm = x.params();
    return RingElt(prm, x.p() + Int(prm.a()) * x.q(), -x.q());
}

Int field_norm(const RingElt& x) {
    const ThetaParams prm = x.params();
    // N(p + q theta) = p^2 + a p q - n q^2.
    return x.p() * x.p() + Int(prm.a()) * x.p() * x.q() -
           Int(prm.n()) * x.q() * x.q();
}

Int isqrt(const Int& m) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int floor_mul_sqrt(const Int& v, const Int& D) {
    if (v == 0) return 0;
    Int s = isqrt(v * v * D);
    // v*sqrt(D) is irrational for v != 0 since D is not a square.
    if (v > 0) return s;
    return -s - 1;
}

int sign_real(const RingElt& x) {
    if (x.is_zero()) return 0;
    const ThetaParams prm = x.params();
    // 2(p + q theta) = u + v sqrt(D) with u = 2p + a q, v = q.
    Int u = 2 * x.p() + Int(prm.a()) * x.q();
    const Int& v = x.q();
    int su = sgn(u), sv = sgn(v);
    if (su >= 0 && sv >= 0) return (su == 0 && sv == 0) ? 0 : 1;
    if (su <= 0 && sv <= 0) return -1;
    // Opposite signs: compare u^2 against v^2 D.  Equality is impossible
    // because D is not a perfect square.
    Int lhs = u * u, rhs = v * v * Int(prm.discriminant());
    if (su > 0) return lhs > rhs ? 1 : -1;
    return rhs > lhs ? 1 : -1;
}

int cmp_real(const RingElt& x, const RingElt& y) { return sign_real(x - y); }

bool less_real(const RingElt& x, const RingElt& y) { return cmp_real(x, y) < 0; }

RingElt abs_real(const RingElt& x) { return sign_real(x) < 0 ? -x : x; }

Int floor_real(const RingElt& x) {
    const ThetaParams prm = x.params();
    Int u = 2 * x.p() + Int(prm.a()) * x.q();
    Int w = floor_mul_sqrt(x.q(), Int(prm.discriminant()));
    Int r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), Int(u + w).get_mpz_t(), 1);
    return r;
}

RingElt theta_shift(const RingElt& x, long k) {
    const ThetaParams prm = x.params();
    const Int a(prm.a());
    const int n = prm.n();
    Int p = x.p(), q = x.q();
    if (k >= 0) {
        for (long i = 0; i < k; ++i) {
            // (p + q t) t = n q + (p + a q) t
            Int np = Int(n) * q;
            Int nq = p + a * q;
            p = std::move(np);
            q = std::move(nq);
        }
    } else {
        for (long i = 0; i < -k; ++i) {
            // (p + q t) t^-1 = (q - a n p) + n p t
            Int np = q - a * Int(n) * p;
            Int nq = Int(n) * p;
            p = std::move(np);
            q = std::move(nq);
        }
    }
    return RingElt(prm, p, q);
}

RingElt theta_pow(const ThetaParams& params, long k) {
    return theta_shift(make_int(params, 1), k);
}

RingElt t_elt(const ThetaParams& params) { return RingElt(params, -1, 1); }

RingElt div_t_exact(const RingElt& x) {
    const ThetaParams prm = x.params();
    if (prm.n() == 1) {
        // N(T) = -a: x/T = x * conj(T) / N(T), conj(T) = (a-1) - theta.
        RingElt y = x * RingElt(prm, Int(prm.a()) - 1, -1);
        return div_int_exact(y, Int(-prm.a()));
    }
    // n = -1: N(T) = 2 - a.
    RingElt y = x * RingElt(prm, Int(prm.a()) - 1, -1);
    return div_int_exact(y, Int(2 - prm.a()));
}

RingElt div_int_exact(const RingElt& x, const Int& k) {
    if (k == 0) throw std::domain_error("div_int_exact: divide by zero");
    if (!mpz_divisible_p(x.p().get_mpz_t(), k.get_mpz_t()) ||
        !mpz_divisible_p(x.q().get_mpz_t(), k.get_mpz_t()))
        throw std::domain_error("div_int_exact: inexact division");
    return RingElt(x.params(), x.p() / k, x.q() / k);
}

}  // namespace thetadic
