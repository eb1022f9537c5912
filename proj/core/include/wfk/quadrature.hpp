#pragma once

#include <functional>

#include "wfk/rkhs.hpp"

namespace wfk {

/// Integrates f over [lo, hi] to absolute tolerance abs_tol with composite
/// 10-point Gauss-Legendre panels, doubling the panel count until two
/// successive estimates agree within abs_tol. min_panels seeds the first
/// pass; oscillatory integrands need several panels per period before the
/// agreement test means anything.
double integrate(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                 int min_panels = 8);

/// Independent route to the L2 inner product: pointwise quadrature of
/// f(x) g(x) over [-1, 1], seeded against the highest frequency present.
/// Used to cross-check the closed-form l2_inner.
double l2_inner_quadrature(const RkhsFunction& f, const RkhsFunction& g, double abs_tol = 1e-10);

} // namespace wfk
