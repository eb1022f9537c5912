#include "wfk/phase.hpp"

#include <cmath>
#include <numbers>

namespace wfk {
namespace {

// Knuth two-sum: s + err == a + b exactly.
inline void two_sum(double a, double b, double& s, double& err) {
    s = a + b;
    const double bv = s - a;
    err = (a - (s - bv)) + (b - bv);
}

} // namespace

PhaseSequence::PhaseSequence(double x, int b) : b_(static_cast<double>(b)) {
    // x mod 2, exactly. fmod is exact; the shift into [0, 2) is captured
    // with a two-sum so nothing is lost for x just below a period boundary.
    double hi = std::fmod(x, 2.0);
    double lo = 0.0;
    if (hi < 0.0) {
        two_sum(hi, 2.0, hi, lo);
        if (hi >= 2.0) hi -= 2.0;
    }
    p_ = Phase{hi, lo};
}

void PhaseSequence::advance() {
    // (hi + lo) * b with the product error recovered via fma.
    const double p = p_.hi * b_;
    const double e1 = std::fma(p_.hi, b_, -p);
    const double lo2 = std::fma(p_.lo, b_, e1);
    // Subtract the even part. p - 2k is almost always exact; the two-sum
    // keeps the residue when a boundary case does round.
    const double k = std::floor(p * 0.5);
    double r, re;
    two_sum(p, -2.0 * k, r, re);
    double s, e;
    two_sum(r, re + lo2, s, e);
    if (s >= 2.0) s -= 2.0; // exact, s < 2 + ulp here
    // s may sit a few ulps below 0; the quadrant split in cos_sin_pi is
    // modulo-correct for that, so no wrap (and no rounding) is needed.
    p_ = Phase{s, e};
}

std::vector<Phase> phase_table(double x, int b, int count) {
    std::vector<Phase> out;
    if (count <= 0) return out;
    out.reserve(static_cast<std::size_t>(count));
    PhaseSequence seq(x, b);
    for (int n = 0; n < count; ++n) {
        out.push_back(seq.current());
        seq.advance();
    }
    return out;
}

std::pair<double, double> cos_sin_pi(Phase p) {
    const double m = std::nearbyint(2.0 * p.hi);
    const double r = (p.hi - 0.5 * m) + p.lo; // |r| <= 1/4 + ulp, hi - m/2 exact
    const double c = std::cos(std::numbers::pi * r);
    const double s = std::sin(std::numbers::pi * r);
    switch (static_cast<int>(m) & 3) {
        case 0: return {c, s};
        case 1: return {-s, c};
        case 2: return {-c, -s};
        default: return {s, -c};
    }
}

TrigTable trig_table(double x, int b, int count) {
    TrigTable t;
    if (count <= 0) return t;
    t.cos_v.reserve(static_cast<std::size_t>(count));
    t.sin_v.reserve(static_cast<std::size_t>(count));
    PhaseSequence seq(x, b);
    for (int n = 0; n < count; ++n) {
        auto [c, s] = cos_sin_pi(seq.current());
        t.cos_v.push_back(c);
        t.sin_v.push_back(s);
        seq.advance();
    }
    return t;
}

} // namespace wfk
