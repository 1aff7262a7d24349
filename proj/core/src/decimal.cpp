#include "thetadic/decimal.hpp"

#include <stdexcept>

namespace thetadic {

namespace {

Int pow10(int d) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(d));
    return r;
}

std::string format_scaled(const Int& scaled, int digits) {
    Int m = scaled;
    bool neg = m < 0;
    if (neg) m = -m;
    Int ten = pow10(digits);
    Int ip = m / ten, fp = m % ten;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (digits > 0) out += "." + frac;
    return out;
}

}  // namespace

std::string to_decimal(const FieldElt& x, int digits) {
    if (digits < 1) throw std::invalid_argument("to_decimal: digits >= 1");
    const ThetaParams prm = x.params();
    Int ten = pow10(digits);
    // 2 * value * 10^d = (u + v sqrt(D)) * 10^d / den.
    Int u = (2 * x.num().p() + Int(prm.a()) * x.num().q()) * ten;
    Int v = x.num().q() * ten;
    Int fl2;  // floor(2 * value * 10^d)
    mpz_fdiv_q(fl2.get_mpz_t(),
               Int(u + floor_mul_sqrt(v, Int(prm.discriminant()))).get_mpz_t(),
               x.den().get_mpz_t());
    // Nearest integer to value*10^d; ties cannot occur at irrational values
    // and rational values scale exactly.
    Int nearest;
    mpz_fdiv_q_2exp(nearest.get_mpz_t(), Int(fl2 + 1).get_mpz_t(), 1);
    return format_scaled(nearest, digits);
}

std::string to_decimal(const RingElt& x, int digits) {
    return to_decimal(FieldElt(x), digits);
}

DecimalPair to_decimal_pair(const RingElt& x, int digits) {
    return DecimalPair{to_decimal(x, digits), to_decimal(conj(x), digits)};
}

}  // namespace thetadic
