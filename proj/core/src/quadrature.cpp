#include "wfk/quadrature.hpp"

#include <array>
#include <cmath>

namespace wfk {
namespace {

// 10-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<double, 5> kGlNode = {
    0.14887433898163121, 0.43339539412924719, 0.67940956829902441, 0.86506336668898451,
    0.97390652851717172};
constexpr std::array<double, 5> kGlWeight = {
    0.29552422471475287, 0.26926671930999635, 0.21908636251598204, 0.14945134915058059,
    0.066671344308688138};

double gl_composite(const std::function<double(double)>& f, double lo, double hi, int panels) {
    const double h = (hi - lo) / panels;
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double c = lo + (i + 0.5) * h;
        const double r = 0.5 * h;
        double acc = 0.0;
        for (std::size_t k = 0; k < kGlNode.size(); ++k) {
            acc += kGlWeight[k] * (f(c - r * kGlNode[k]) + f(c + r * kGlNode[k]));
        }
        total += acc * r;
    }
    return total;
}

} // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                 int min_panels) {
    if (!(abs_tol > 0.0)) throw DomainError("quadrature tolerance must be > 0");
    int panels = std::max(1, min_panels);
    double prev = gl_composite(f, lo, hi, panels);
    for (int round = 0; round < 6; ++round) {
        panels *= 2;
        const double next = gl_composite(f, lo, hi, panels);
        if (std::fabs(next - prev) <= abs_tol) return next;
        prev = next;
    }
    return prev;
}

double l2_inner_quadrature(const RkhsFunction& f, const RkhsFunction& g, double abs_tol) {
    if (!(f.params == g.params)) {
        throw ParamMismatchError("functions were built over different (a, b) parameters");
    }
    // The product oscillates at up to 2 b^{N-1} pi; six panels per period
    // of the fastest term puts the first Gauss pass well inside its
    // rapid-convergence regime.
    const int top = std::max(f.length(), g.length()) - 1;
    const double periods = std::pow(static_cast<double>(f.params.b()), top);
    const auto seed = static_cast<int>(std::min(2.0e5, 6.0 * periods)) + 6;
    const auto prod = [&](double x) { return evaluate(f, x) * evaluate(g, x); };
    return integrate(prod, -1.0, 1.0, abs_tol, seed);
}

} // namespace wfk
