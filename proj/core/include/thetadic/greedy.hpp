#pragma once

#include <stdexcept>
#include <vector>

#include "thetadic/ring.hpp"

namespace thetadic {

// Thrown when an expansion consumes more digits than the configured budget.
// Termination is guaranteed for O_K inputs, so hitting the budget signals an
// arithmetic bug rather than a long input.
class expansion_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr long kDefaultDigitBudget = 1'000'000;

// A finite greedy expansion: value = sign * T^{t_exp} * sum digits[i] *
// theta^{lo+i}.  t_exp is always 0 when n=+1; t_exp=-1 marks the formal
// 1/T factor carried by mixed-sign elements when n=-1.
struct GreedyWord {
    int sign = 0;   // +1, -1, or 0 for the zero word
    int t_exp = 0;  // 0 or -1
    long lo = 0;
    std::vector<long> digits;  // digits[0] is the coefficient of theta^lo

    bool is_zero() const { return sign == 0; }
    long hi() const { return lo + static_cast<long>(digits.size()) - 1; }
    long digit_at(long e) const {
        if (is_zero() || e < lo || e > hi()) return 0;
        return digits[static_cast<size_t>(e - lo)];
    }

    bool operator==(const GreedyWord& o) const {
        return sign == o.sign && t_exp == o.t_exp &&
               (is_zero() ? o.is_zero() : (lo == o.lo && digits == o.digits));
    }
    bool operator!=(const GreedyWord& o) const { return !(*this == o); }
};

// The Renyi development of 1: [a,1,0,0,...] when n=+1, and
// (a-1)(a-2)(a-2)... when n=-1.
std::vector<long> renyi_d1(const ThetaParams& params, size_t len);

// Finite-word admissibility per the quadratic-unit case rules: digits in
// range and, for n=+1, no digit a over a nonzero next-lower digit; for
// n=-1, no block (a-1)(a-2)^k(a-1), k >= 0.  Equivalent to Parry's
// lexicographic criterion against renyi_d1.
bool is_greedy(const std::vector<long>& digits, const ThetaParams& params);

// The greedy expansion of x.  For n=-1 elements whose conjugate has the
// opposite sign the result carries t_exp=-1 and the digit part expands T*x.
GreedyWord expand(const RingElt& x, long digit_budget = kDefaultDigitBudget);

// Exact value of a word; division by T must be exact for t_exp=-1 words.
RingElt evaluate(const GreedyWord& w, const ThetaParams& params);

// Greedy form of a raw signed digit vector (all entries one sign).  The
// canonical path evaluates and re-expands; `normalize_by_rewriting` applies
// the carrying formulas directly and must agree.
GreedyWord normalize(const std::vector<Int>& raw, long lo,
                     const ThetaParams& params);
GreedyWord normalize_by_rewriting(const std::vector<Int>& raw, long lo,
                                  const ThetaParams& params,
                                  long step_budget = kDefaultDigitBudget);

// Exact checks of the carrying identities.
// n=+1: (a+i) theta^k == theta^{k+1} + (i-1) theta^k + (a-1) theta^{k-1}
//       + theta^{k-2}, for 1 <= i <= a.
// n=-1: (a-1+i) theta^k == theta^{k+1} + (i-1) theta^k + theta^{k-1},
//       for 1 <= i <= a-1.
// Both sides are compared as ring elements and the right side must pass
// is_greedy.
bool carry_identity_check(const ThetaParams& params, long i, long k);

// n=-1 only: (a-1)th^m + (a-2)(th^{m+1}+...+th^{m+k-1}) + (a-1)th^{m+k}
//            == th^{m-1} + th^{m+k+1}, k >= 1.
bool forbidden_block_identity_check(const ThetaParams& params, long m, long k);

}  // namespace thetadic
