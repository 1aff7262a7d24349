#pragma once

#include <optional>
#include <vector>

#include "thetadic/series.hpp"

namespace thetadic {

// The inverse of a prime p as a theta-adic digit stream.
//
// n=+1: 1 + e_1 theta + e_2 theta^2 + ..., digits in [0, a]; when p | a the
// closed form 1 + (a(p-1)/p)(theta + theta^3 + ...) applies.
// n=-1: e_1 theta + e_2 theta^2 + ... with digits in [-1, a-1], stored as a
// formal plus/minus split; when p | (a-2) the closed form is T^{-1} x with
// x = T + ((a-2)(p-1)/p)(theta + theta^2 + ...).
struct PrimeInverse {
    Int p;
    bool t_special = false;
    Int special_m;           // (a-2)(p-1)/p in the t_special case
    long digit0 = 0;         // coefficient of theta^0
    std::vector<long> head;  // digits from exponent 1 (preperiod)
    std::vector<long> block; // repeating block after the head

    // Digit at exponent i >= 0 (not meaningful for t_special).
    long digit(long i) const;

    // Exact partial value through theta^k.
    TruncValue truncation(const ThetaParams& params, long k) const;

    // p * truncation(k) - 1; always lands in O_K, including the t_special
    // case where the truncation itself does not.
    RingElt residual(const ThetaParams& params, long k) const;

    // Formal split n^{-1} = plus - minus for the signed n=-1 stream; views
    // cover digits through exponent `upto`.
    LaurentSeries plus_part(long upto) const;
    LaurentSeries minus_part(long upto) const;
};

// Inverse of an integer n >= 2, composed from prime-power factors by
// truncation-wise products.
class InverseSeries {
public:
    InverseSeries(const ThetaParams& params, Int n,
                  std::vector<std::pair<PrimeInverse, int>> factors)
        : params_(params), n_(std::move(n)), factors_(std::move(factors)) {}

    const Int& n() const { return n_; }
    const ThetaParams& params() const { return params_; }
    const std::vector<std::pair<PrimeInverse, int>>& factors() const {
        return factors_;
    }
    bool single_prime() const {
        return factors_.size() == 1 && factors_.front().second == 1;
    }
    const PrimeInverse& prime() const { return factors_.front().first; }

    // Exact value of the composed truncation at length k (in K).
    FieldElt truncation_value(long k) const;

    // n * truncation(k) - 1, exact in O_K.
    RingElt residual(long k) const;

private:
    ThetaParams params_;
    Int n_;
    std::vector<std::pair<PrimeInverse, int>> factors_;
};

InverseSeries invert_integer(const ThetaParams& params, const Int& n);

// infranorm(n * truncation(k) - 1); the exponent grows linearly in k.
NormValue residual_norm(const InverseSeries& inv, long k);

// x^{-1} = conj(x) * N(x)^{-1} for x != 0.
class ElementInverse {
public:
    ElementInverse(RingElt x);

    // Exact value of the k-truncation.
    FieldElt truncation_value(long k) const;
    // x * truncation(k) - 1 in O_K; identically zero when N(x) = +/-1.
    RingElt residual(long k) const;
    bool exact() const { return !nrm_inv_.has_value(); }

private:
    RingElt x_;
    Int nrm_;
    std::optional<InverseSeries> nrm_inv_;
};

ElementInverse invert_element(const RingElt& x);

// ceil((n-1) b / n) == b for 1 <= b < n.
bool hermite_identity_check(long n, long b);

// The two explicit Cauchy sequences of the N(theta)=-1 infraoscillation
// examples, with their exact norm patterns and difference expansions.
struct OscillationReport {
    std::vector<long> f_valuations;  // v(f_n), n = 2..max_n
    std::vector<long> g_valuations;
    bool f_pattern_ok = false;   // |f_n| alternates in {1, theta^-2}
    bool g_pattern_ok = false;   // |g_n| alternates in {1, theta^-1}
    bool differences_ok = false; // exact lo formulas for all pairs
    long max_n = 0;
};
OscillationReport infraoscillation_witness(const ThetaParams& params,
                                           long max_n = 24);

}  // namespace thetadic
