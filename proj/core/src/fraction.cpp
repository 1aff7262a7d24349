#include "thetadic/fraction.hpp"

#include <stdexcept>

namespace thetadic {

FieldElt::FieldElt(const RingElt& num, const Int& den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("FieldElt: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    reduce();
}

void FieldElt::reduce() {
    Int g;
    mpz_gcd(g.get_mpz_t(), num_.p().get_mpz_t(), num_.q().get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        num_ = RingElt(num_.params(), num_.p() / g, num_.q() / g);
        den_ /= g;
    }
}

RingElt FieldElt::as_ring() const {
    if (!is_integral()) throw std::domain_error("FieldElt: not in O_K");
    return num_;
}

FieldElt FieldElt::operator-() const { return FieldElt(-num_, den_); }

FieldElt FieldElt::operator+(const FieldElt& o) const {
    return FieldElt(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElt FieldElt::operator-(const FieldElt& o) const {
    return FieldElt(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElt FieldElt::operator*(const FieldElt& o) const {
    return FieldElt(num_ * o.num_, den_ * o.den_);
}

FieldElt FieldElt::operator/(const FieldElt& o) const {
    if (o.is_zero()) throw std::domain_error("FieldElt: divide by zero");
    // 1/(x/d) = d * conj(x) / N(x).
    Int nrm = field_norm(o.num_);
    return FieldElt(num_ * conj(o.num_) * o.den_, den_ * nrm);
}

std::string FieldElt::str() const {
    if (den_ == 1) return num_.str();
    return "(" + num_.str() + ")/" + den_.get_str();
}

FieldElt conj(const FieldElt& x) { return FieldElt(conj(x.num()), x.den()); }

int sign_real(const FieldElt& x) { return sign_real(x.num()); }

int cmp_real(const FieldElt& x, const FieldElt& y) { return sign_real(x - y); }

Int floor_real(const FieldElt& x) {
    const ThetaParams prm = x.params();
    // value = (u + v sqrt(D)) / (2 den), u = 2p + a q, v = q.
    Int u = 2 * x.num().p() + Int(prm.a()) * x.num().q();
    Int w = floor_mul_sqrt(x.num().q(), Int(prm.discriminant()));
    Int r;
    Int m = 2 * x.den();
    mpz_fdiv_q(r.get_mpz_t(), Int(u + w).get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace thetadic
