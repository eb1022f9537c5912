#pragma once

#include "wfk/errors.hpp"

namespace wfk {

/// Default evaluation tolerance for truncated series sums.
inline constexpr double kDefaultTol = 1e-10;

/// Largest admissible amplitude ratio. Values closer to 1 make the
/// truncation order blow up like ln(1/tol)/ln(1/a).
inline constexpr double kMaxAmplitudeRatio = 0.999;

/// Validated parameter pair (a, b) of the lacunary cosine series
/// sum_n a^n cos(b^n pi x): 0 < a <= 0.999, b integer >= 2, a*b >= 1.
///
/// Immutable once constructed; every derived quantity in the library is a
/// pure function of this pair.
class WeierstrassParams {
public:
    /// Validates and constructs; throws DomainError naming the violated
    /// constraint(s) otherwise.
    static WeierstrassParams make(double a, int b);

    double a() const noexcept { return a_; }
    int b() const noexcept { return b_; }

    friend bool operator==(const WeierstrassParams&, const WeierstrassParams&) = default;

private:
    WeierstrassParams(double a, int b) : a_(a), b_(b) {}
    double a_;
    int b_;
};

/// Free-function spelling of WeierstrassParams::make.
WeierstrassParams make_params(double a, int b);

/// Series order N together with the geometric tail bound a^N/(1-a).
struct TruncationPlan {
    int order;         // number of retained terms, >= 1
    double tail_bound; // a^order / (1 - a)
};

/// Minimal N >= 1 with a^N/(1-a) <= tol. Throws DomainError if tol <= 0.
TruncationPlan truncation_order(const WeierstrassParams& params, double tol);

} // namespace wfk
