#include "wfk/kernel.hpp"

#include <cmath>

#include "wfk/phase.hpp"

namespace wfk {

double partial_sum(const WeierstrassParams& params, double x, int order) {
    if (order < 1) throw DomainError("partial sum order must be >= 1");
    // |x| keeps the evaluation even in x term by term (cosine is even).
    PhaseSequence seq(std::fabs(x), params.b());
    double sum = 0.0;
    double amp = 1.0;
    for (int n = 0; n < order; ++n) {
        sum += amp * cos_sin_pi(seq.current()).first;
        amp *= params.a();
        seq.advance();
    }
    return sum;
}

double eval_weierstrass(const WeierstrassParams& params, double x, double tol) {
    return partial_sum(params, x, truncation_order(params, tol).order);
}

double eval_kernel(const WeierstrassParams& params, double x, double y, double tol) {
    if (std::fabs(x) > 1.0 || std::fabs(y) > 1.0) {
        throw DomainError("kernel arguments must lie in [-1, 1]");
    }
    return eval_weierstrass(params, x - y, tol);
}

Eigen::MatrixXd gram_matrix(const WeierstrassParams& params, std::span<const double> points,
                            double tol) {
    const auto n = static_cast<Eigen::Index>(points.size());
    const int order = truncation_order(params, tol).order;
    Eigen::MatrixXd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::fabs(points[static_cast<std::size_t>(i)]) > 1.0) {
            throw DomainError("kernel arguments must lie in [-1, 1]");
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double v = partial_sum(
                params, points[static_cast<std::size_t>(i)] - points[static_cast<std::size_t>(j)],
                order);
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    return g;
}

} // namespace wfk
