#pragma once

#include <vector>

#include "thetadic/decimal.hpp"
#include "thetadic/series.hpp"

namespace thetadic {

// An acceptance window with exact endpoints and explicit open/closed flags.
struct Window {
    FieldElt lo;
    FieldElt hi;
    bool lo_closed = true;
    bool hi_closed = false;

    bool contains(const FieldElt& v) const;
    bool contains(const RingElt& v) const { return contains(FieldElt(v)); }
};

// A cut-and-project set over the lattice O_K -> R^2, alpha -> (alpha,
// alpha'): all points with |alpha| <= R and conj(alpha) in the window,
// sorted by value.
struct ModelSet {
    Window window;
    FieldElt radius;
    std::vector<RingElt> points;
};

ModelSet model_set(const ThetaParams& params, const Window& window,
                   const FieldElt& radius);

// The quasicrystal ring A (window [-1,1]) and its maximal ideal m
// (window (-1,1)).
ModelSet qc_ring_A(const ThetaParams& params, const FieldElt& radius);
ModelSet qc_ideal_m(const ThetaParams& params, const FieldElt& radius);

// The window characterizing the theta-integers: [-1, theta) for n=+1,
// [0, theta) for n=-1.
Window z_theta_window(const ThetaParams& params);

// Values of all admissible polynomial digit words (exponents >= 0) with
// value <= R, sorted: the direct enumeration side of the model-set duality.
std::vector<RingElt> greedy_polynomial_values(const ThetaParams& params,
                                              const FieldElt& R);

// (set - center) restricted to [-R, R]; requires the generator to reach
// |center| + R, else throws precision_error.
std::vector<RingElt> r_ball(const ModelSet& set, const RingElt& center,
                            const FieldElt& R);

// Pairwise R-ball equality of the translate sequence from start_index on.
bool cauchy_check(const std::vector<RingElt>& centers, const ModelSet& gen,
                  const FieldElt& R, size_t start_index = 0);

// All beta in the set with |beta| <= search_bound and
// (set - beta)_R == set_R.  Requires 0 in set_R and generation radius
// >= search_bound + R.
std::vector<RingElt> periods(const ModelSet& gen, const FieldElt& R,
                             const FieldElt& search_bound);

// Distinct consecutive differences, sorted by value.
std::vector<RingElt> gap_alphabet(const ModelSet& set);

// Finite-radius approximation of the limit quasicrystal of a series in the
// closure of m: window (-1 + x', 1 + x') from the certified conjugate value
// of s, half-open per the tail rule when x' is an exact O_K conjugate.
struct LimitPoint {
    enum class Status { In, Out, Ambiguous };
    RingElt point;
    Status status;
};

struct LimitSetResult {
    Window window;  // endpoints at the center value
    bool window_exact = false;
    std::vector<LimitPoint> points;
    size_t ambiguous = 0;

    std::vector<RingElt> in_points() const;
};

LimitSetResult series_limit_qc(const LaurentSeries& s,
                               const ThetaParams& params, const FieldElt& R,
                               long precision);

}  // namespace thetadic
