#pragma once

#include "thetadic/ring.hpp"

namespace thetadic {

// An element of the field K = Q(theta), kept as num/den with num in O_K and
// den a positive integer, reduced.  Used for exact conjugate values of
// periodic series, window endpoints, and anywhere a division leaves O_K.
class FieldElt {
public:
    FieldElt() : den_(1) {}
    explicit FieldElt(const RingElt& num) : num_(num), den_(1) {}
    FieldElt(const RingElt& num, const Int& den);

    const RingElt& num() const { return num_; }
    const Int& den() const { return den_; }
    ThetaParams params() const { return num_.params(); }

    bool is_zero() const { return num_.is_zero(); }

    // True when the value lies in O_K; `as_ring()` is then exact.
    bool is_integral() const { return den_ == 1; }
    RingElt as_ring() const;

    FieldElt operator-() const;
    FieldElt operator+(const FieldElt& o) const;
    FieldElt operator-(const FieldElt& o) const;
    FieldElt operator*(const FieldElt& o) const;
    FieldElt operator/(const FieldElt& o) const;

    bool operator==(const FieldElt& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const FieldElt& o) const { return !(*this == o); }

    std::string str() const;

private:
    void reduce();

    RingElt num_;
    Int den_;
};

FieldElt conj(const FieldElt& x);
int sign_real(const FieldElt& x);
int cmp_real(const FieldElt& x, const FieldElt& y);
Int floor_real(const FieldElt& x);

}  // namespace thetadic
