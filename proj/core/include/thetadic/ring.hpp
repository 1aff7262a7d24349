#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "thetadic/params.hpp"

namespace thetadic {

using Int = mpz_class;

// An element p + q*theta of O_K = Z[theta].  Exact arbitrary-precision
// arithmetic; theta^2 rewrites through a*theta + n.  Values are immutable
// in spirit: every operation returns a fresh element.
class RingElt {
public:
    RingElt() : p_(0), q_(0), ctx_(0) {}
    RingElt(const ThetaParams& params, Int p, Int q)
        : p_(std::move(p)), q_(std::move(q)), ctx_(params.id()) {}

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    std::uint64_t ctx() const { return ctx_; }
    ThetaParams params() const { return ThetaParams::from_id(ctx_); }

    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_integer() const { return q_ == 0; }

    RingElt operator-() const;
    RingElt operator+(const RingElt& o) const;
    RingElt operator-(const RingElt& o) const;
    RingElt operator*(const RingElt& o) const;
    RingElt operator*(const Int& k) const;

    bool operator==(const RingElt& o) const {
        return ctx_ == o.ctx_ && p_ == o.p_ && q_ == o.q_;
    }
    bool operator!=(const RingElt& o) const { return !(*this == o); }

    std::string str() const;

private:
    friend class FieldElt;
    void check_ctx(const RingElt& o) const;

    Int p_, q_;
    std::uint64_t ctx_;
};

// Constructors bound to a context.
RingElt make_elt(const ThetaParams& params, const Int& p, const Int& q);
RingElt make_int(const ThetaParams& params, const Int& k);
RingElt make_theta(const ThetaParams& params);

// Galois conjugation: p + q*theta  |->  (p + a q) - q*theta.
RingElt conj(const RingElt& x);

// x * conj(x); always a rational integer (the q-component vanishes).
Int field_norm(const RingElt& x);

// Exact sign of the real value p + q*theta, integer arithmetic only.
int sign_real(const RingElt& x);

// Three-way comparison of real values: -1, 0, +1.
int cmp_real(const RingElt& x, const RingElt& y);

bool less_real(const RingElt& x, const RingElt& y);

RingElt abs_real(const RingElt& x);

// The unique integer k with k <= p + q*theta < k+1, exact.
Int floor_real(const RingElt& x);

// x * theta^k for any k in Z; theta is a unit so this is exact.
RingElt theta_shift(const RingElt& x, long k);

// theta^k as a ring element.
RingElt theta_pow(const ThetaParams& params, long k);

// T = theta - 1 (used throughout the N(theta)=1 case).
RingElt t_elt(const ThetaParams& params);

// Exact division by T = theta - 1; throws std::domain_error when the
// division is not exact in O_K.
RingElt div_t_exact(const RingElt& x);

// Exact division by a rational integer; throws when not exact.
RingElt div_int_exact(const RingElt& x, const Int& k);

// floor(sqrt(m)) for m >= 0.
Int isqrt(const Int& m);

// floor(v * sqrt(D)) for any sign of v; D positive and not a square.
Int floor_mul_sqrt(const Int& v, const Int& D);

}  // namespace thetadic
