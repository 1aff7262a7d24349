#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thetadic {

// Parameters of the quadratic unit theta > 1 with theta^2 = a*theta + n,
// n in {+1, -1}.  The field norm of theta is -n.  All arithmetic in the
// library is relative to one such context; elements carry a context tag so
// that mixing contexts is caught at run time.
class ThetaParams {
public:
    ThetaParams(long a, int n) : a_(a), n_(n) {
        if (n != 1 && n != -1)
            throw std::invalid_argument("ThetaParams: n must be +1 or -1");
        if (n == 1 && a < 1)
            throw std::invalid_argument("ThetaParams: n=+1 requires a >= 1");
        if (n == -1 && a < 3)
            throw std::invalid_argument("ThetaParams: n=-1 requires a >= 3");
    }

    long a() const { return a_; }
    int n() const { return n_; }

    // Discriminant of x^2 - a x - n; positive and never a perfect square
    // under the constructor constraints.
    long discriminant() const { return a_ * a_ + 4 * n_; }

    // Largest admissible digit in a greedy word: a for n=+1, a-1 for n=-1.
    long max_digit() const { return n_ == 1 ? a_ : a_ - 1; }

    std::uint64_t id() const {
        return (static_cast<std::uint64_t>(a_) << 1) | (n_ == 1 ? 1u : 0u);
    }

    static ThetaParams from_id(std::uint64_t id) {
        return ThetaParams(static_cast<long>(id >> 1), (id & 1) ? 1 : -1);
    }

    bool operator==(const ThetaParams& o) const { return a_ == o.a_ && n_ == o.n_; }
    bool operator!=(const ThetaParams& o) const { return !(*this == o); }

    std::string describe() const {
        return "theta^2 = " + std::to_string(a_) + "*theta " +
               (n_ == 1 ? "+ 1" : "- 1");
    }

private:
    long a_;
    int n_;
};

inline ThetaParams new_params(long a, int n) { return ThetaParams(a, n); }

}  // namespace thetadic
