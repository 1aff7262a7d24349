#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "thetadic/fraction.hpp"
#include "thetadic/greedy.hpp"
#include "thetadic/infranorm.hpp"
#include "thetadic/ring.hpp"

namespace thetadic {

// Thrown when a computation would need digits beyond a Truncated tail or
// points beyond a generated radius.
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class TailKind { Finite, Truncated, Periodic };

// A (possibly infinite) greedy Laurent series
//   value ~ sign * T^{t_exp} * sum_{e >= lo} digit(e) * theta^e,
// where every finite prefix of the digit part is a greedy word.  The tail
// is either Finite (zeros), Periodic (exact repeating block after the
// head), or Truncated (digits known only through `precision`).
struct LaurentSeries {
    int sign = 0;
    int t_exp = 0;
    long lo = 0;
    std::vector<long> head;
    TailKind tail = TailKind::Finite;
    std::vector<long> period;
    long precision = 0;  // Truncated: highest exponent with a known digit

    bool is_zero() const { return sign == 0; }
    bool is_finite() const { return tail == TailKind::Finite; }
    bool is_exact() const { return tail != TailKind::Truncated; }
    long head_hi() const { return lo + static_cast<long>(head.size()) - 1; }

    // Digit at exponent e; nullopt beyond a Truncated tail.
    std::optional<long> digit_at(long e) const;

    bool operator==(const LaurentSeries& o) const;
};

// Structural validation: digit ranges, prefix admissibility (for periodic
// tails, over head plus three repetitions, which captures every possible
// violation), nonzero leading digit.  Throws std::invalid_argument.
void validate(const LaurentSeries& s, const ThetaParams& params);

LaurentSeries series_from_word(const GreedyWord& w);

// Finite-tail series back to a word.
GreedyWord word_from_series(const LaurentSeries& s);

// A partial sum: value = T^{t_exp} * w with w in O_K (sign folded in).
struct TruncValue {
    RingElt w;
    int t_exp = 0;
};

// Partial sum of all digits with exponent <= e.
TruncValue truncate_at(const LaurentSeries& s, const ThetaParams& params,
                       long e);

NormValue trunc_norm(const TruncValue& t);
TruncValue trunc_sub(const TruncValue& a, const TruncValue& b);
FieldElt trunc_value(const TruncValue& t);

// Exact conjugate value of a Finite or Periodic series (geometric sums in
// K).  Throws precision_error on Truncated tails.
FieldElt conj_value_exact(const LaurentSeries& s, const ThetaParams& params);

// Conjugate value with a certified error bound: exact part evaluated at the
// cutoff plus the geometric tail bound max_digit * theta^{-M} / (1 - 1/theta).
struct ConjValue {
    FieldElt center;   // exact when `exact`
    FieldElt radius;   // zero when `exact`
    bool exact = false;
};
ConjValue conj_value(const LaurentSeries& s, const ThetaParams& params,
                     long cutoff_exponent);

// One member of a multivalued result.
struct AnnotatedSeries {
    LaurentSeries series;
    bool exact = true;
    std::string note;
};

struct MultiValue {
    std::vector<AnnotatedSeries> members;
};

// The fiber over x: the (exactly three, for x != 0) elements of O_theta in
// the Cauchy class of x (n=+1), resp. with conjugate value conj(x) (n=-1).
MultiValue representatives(const RingElt& x);

// n=-1 only: the unique ascending series with non-negative digits whose
// conjugate value equals conj(u); requires conj(u) > 0.  Eventually
// periodic, detected exactly through the Renyi remainder state.
LaurentSeries conj_series_of(const RingElt& u);

// The Renyi (greedy) digit stream of a positive value of K in base theta,
// as an ascending series: digit_at(-e) is the coefficient of theta^e in the
// real greedy expansion.  Eventual periodicity is exact: the remainder
// state lives in a bounded box of K with fixed denominator.
LaurentSeries renyi_series_of_value(const FieldElt& target,
                                    const ThetaParams& params);

// Digitwise equality through exponent e (same sign and t_exp).
bool series_equal_to(const LaurentSeries& a, const LaurentSeries& b, long e);

std::string series_str(const LaurentSeries& s);

}  // namespace thetadic
