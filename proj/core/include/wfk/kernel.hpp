#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "wfk/params.hpp"

namespace wfk {

/// Partial sum sum_{n < order} a^n cos(b^n pi x). Defined for every real x.
double partial_sum(const WeierstrassParams& params, double x, int order);

/// Series value at x to within tol of the exact sum: the truncation order
/// is the minimal N with geometric tail a^N/(1-a) <= tol.
/// Even in x exactly, term by term. Throws DomainError if tol <= 0.
double eval_weierstrass(const WeierstrassParams& params, double x, double tol = kDefaultTol);

/// Translation-invariant kernel W(x, y) = w(x - y) on [-1, 1]^2.
/// Throws DomainError if x or y lies outside [-1, 1].
double eval_kernel(const WeierstrassParams& params, double x, double y, double tol = kDefaultTol);

/// Gram matrix G(i, j) = W(points[i], points[j]). Symmetric by
/// construction (the upper triangle is mirrored). Duplicate points are
/// allowed; the result is then singular but still positive semidefinite.
Eigen::MatrixXd gram_matrix(const WeierstrassParams& params, std::span<const double> points,
                            double tol = kDefaultTol);

} // namespace wfk
