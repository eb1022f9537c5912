#pragma once

#include <cmath>

#include "wfk/rkhs.hpp"

namespace wfk {

/// Squared operator norm of the embedding into C([-1, 1]): 1/(1-a).
inline double embedding_norm_sq(const WeierstrassParams& params) {
    return 1.0 / (1.0 - params.a());
}

/// Tail operator norm mu_N = (a^N/(1-a))^{1/2}, N >= 0. mu_0 is the full
/// embedding norm.
inline double mu_tail(const WeierstrassParams& params, int order) {
    if (order < 0) throw DomainError("tail order must be >= 0");
    return std::sqrt(std::pow(params.a(), order) / (1.0 - params.a()));
}

/// Closed-form squared norms of the embedding composed with the
/// projections onto the first N basis frequencies and their complement.
struct ProjectionSplit {
    WeierstrassParams params;
    int order;           // N >= 1
    double head_norm_sq; // (1 - a^N)/(1 - a)
    double tail_norm_sq; // a^N/(1 - a)
    double mu;           // sqrt(tail_norm_sq)
};

inline ProjectionSplit projection_split(const WeierstrassParams& params, int order) {
    if (order < 1) throw DomainError("projection order must be >= 1");
    const double a = params.a();
    const double an = std::pow(a, order);
    return ProjectionSplit{params, order, (1.0 - an) / (1.0 - a), an / (1.0 - a),
                           std::sqrt(an / (1.0 - a))};
}

/// Keeps coefficients with index < N, drops the rest. Identity whenever N
/// already covers the whole table.
inline RkhsFunction apply_head_projection(const RkhsFunction& f, int order) {
    if (order < 1) throw DomainError("projection order must be >= 1");
    const auto keep = std::min<std::size_t>(static_cast<std::size_t>(order), f.cos_coeffs.size());
    return RkhsFunction(
        f.params, std::vector<double>(f.cos_coeffs.begin(), f.cos_coeffs.begin() + keep),
        std::vector<double>(f.sin_coeffs.begin(), f.sin_coeffs.begin() + keep));
}

/// Complement of apply_head_projection: zeroes coefficients with index < N.
inline RkhsFunction apply_tail_projection(const RkhsFunction& f, int order) {
    if (order < 1) throw DomainError("projection order must be >= 1");
    std::vector<double> c = f.cos_coeffs;
    std::vector<double> s = f.sin_coeffs;
    const auto zero = std::min<std::size_t>(static_cast<std::size_t>(order), c.size());
    std::fill(c.begin(), c.begin() + zero, 0.0);
    std::fill(s.begin(), s.begin() + zero, 0.0);
    return RkhsFunction(f.params, std::move(c), std::move(s));
}

} // namespace wfk
