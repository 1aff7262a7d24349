#pragma once

#include "thetadic/series.hpp"

namespace thetadic {

// Multivalued sum and product on O_theta.
//
// For inputs with exact (Finite or Periodic) tails the conjugate value of
// the result is an exact element of K; when it lies in conj(O_K) the
// candidate members are the fiber of that value (at most three), pruned to
// the signs reachable by partial-sum combinations.  The canonical
// partial-sum stabilization machinery runs alongside: members it confirms
// carry a scheme-verified note, the rest are justified by the Cauchy-class
// bound.  Truncated inputs go through the machinery alone and come back
// annotated precision-limited.
MultiValue multi_add(const LaurentSeries& x, const LaurentSeries& y,
                     const ThetaParams& params, long precision = 64);
MultiValue multi_mul(const LaurentSeries& x, const LaurentSeries& y,
                     const ThetaParams& params, long precision = 64);

// Union of op applied member-wise to two multivalues (set semantics up to
// `depth` digits).
MultiValue multi_add(const MultiValue& xs, const MultiValue& ys,
                     const ThetaParams& params, long precision = 64);
MultiValue multi_mul(const MultiValue& xs, const MultiValue& ys,
                     const ThetaParams& params, long precision = 64);

bool multivalue_contains(const MultiValue& mv, const LaurentSeries& s,
                         long depth);
// a subset-of b, comparing digit streams through `depth`.
bool multivalue_subset(const MultiValue& a, const MultiValue& b, long depth);
bool multivalue_equal(const MultiValue& a, const MultiValue& b, long depth);

}  // namespace thetadic
