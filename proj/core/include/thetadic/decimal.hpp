#pragma once

#include <string>

#include "thetadic/fraction.hpp"
#include "thetadic/ring.hpp"

namespace thetadic {

struct DecimalPair {
    std::string value;      // correctly rounded to `digits` places
    std::string conjugate;  // same for the Galois conjugate
};

// Correctly rounded decimal rendering; all decisions in the library are made
// with exact arithmetic, this exists for display and diagnostics only.
std::string to_decimal(const FieldElt& x, int digits);
std::string to_decimal(const RingElt& x, int digits);
DecimalPair to_decimal_pair(const RingElt& x, int digits);

}  // namespace thetadic
