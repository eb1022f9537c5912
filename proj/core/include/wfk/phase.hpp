#pragma once

#include <utility>
#include <vector>

namespace wfk {

/// Phase of the n-th series term, reduced modulo the cosine period:
/// value = b^n * x mod 2, held as an unevaluated double-double sum
/// hi + lo so that repeated multiplication by the integer base does not
/// shed low-order bits until roughly 2^-106 relative error accumulates.
struct Phase {
    double hi; // in [0, 2)
    double lo; // |lo| <= ulp(hi)
};

/// Walks p(0) = x mod 2, p(n+1) = b * p(n) mod 2 in double-double
/// arithmetic without materializing a table. Naively forming b^n * x
/// overflows and loses every phase bit long before the geometric tail
/// becomes negligible; the modular recursion keeps the value in [0, 2)
/// at every step.
class PhaseSequence {
public:
    PhaseSequence(double x, int b);
    Phase current() const noexcept { return p_; }
    void advance();

private:
    Phase p_;
    double b_;
};

/// First count phases of the recursion, as a table.
std::vector<Phase> phase_table(double x, int b, int count);

/// (cos(pi*p), sin(pi*p)) for a reduced phase. The quadrant is peeled off
/// exactly, so half-integer phases give exact 0 / +-1 trig values.
std::pair<double, double> cos_sin_pi(Phase p);

/// Per-term trig values of the series at x: cos_v[n] = cos(b^n pi x),
/// sin_v[n] = sin(b^n pi x).
struct TrigTable {
    std::vector<double> cos_v;
    std::vector<double> sin_v;
};

TrigTable trig_table(double x, int b, int count);

} // namespace wfk
