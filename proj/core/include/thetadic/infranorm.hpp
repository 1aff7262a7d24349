#pragma once

#include <optional>
#include <vector>

#include "thetadic/greedy.hpp"
#include "thetadic/ring.hpp"

namespace thetadic {

// |x|_theta = theta^{-v} where v is the lowest exponent of the greedy word
// (of T*x for n=-1 mixed-sign elements).  Zero gets the distinguished Zero
// value.  Comparisons between norms are comparisons of exponents: a larger
// norm means a smaller v.
struct NormValue {
    std::optional<long> v;  // nullopt == Zero

    bool is_zero() const { return !v.has_value(); }
    // exponent e with |x|_theta = theta^e
    long log_value() const { return -v.value(); }

    bool operator==(const NormValue& o) const { return v == o.v; }
    bool operator!=(const NormValue& o) const { return !(*this == o); }
    // |x| < |y| in norm order
    static bool less(const NormValue& x, const NormValue& y) {
        if (x.is_zero()) return !y.is_zero();
        if (y.is_zero()) return false;
        return *x.v > *y.v;
    }
};

// Lowest exponent of the greedy word (of T*x for mixed-sign n=-1 inputs),
// computed by exact window tests on the conjugate rather than by digit
// extraction; agrees with expand(x).lo by the model-set characterization of
// the theta-integers (cross-checked in the tests).
long valuation(const RingElt& x);

NormValue infranorm(const RingElt& x);
NormValue inframetric(const RingElt& x, const RingElt& y);

// Smallest k >= 0 with |x (+/-) y| <= theta^k * max(|x|,|y|), worst case
// over both signs.  Inputs nonzero.
long infratriangle_ratio(const RingElt& x, const RingElt& y);

// Exact exponent g with |prod x_i| = theta^g * prod |x_i|; all inputs
// nonzero.  Inframultiplicativity bounds g per sign class.
long inframult_exponent_gap(const std::vector<RingElt>& xs);

// For n=-1: is x in O^0 (sgn x == sgn x') or O^1.  Zero counts as O^0.
bool in_o0(const RingElt& x);

// Verifies theta^{-1} * |x|-value <= |conj(x)| <= (a+1) * theta * |x|-value
// with exact comparisons.  The widened band covers both norms.
bool conj_comparability_check(const RingElt& x);

// Reverse infratriangle (n=+1): whenever theta^2 |y| < |x|,
// |x| <= theta^2 |x - y|.  Returns true when the implication holds (and in
// particular when the hypothesis fails).
bool reverse_infratriangle_check(const RingElt& x, const RingElt& y);

}  // namespace thetadic
