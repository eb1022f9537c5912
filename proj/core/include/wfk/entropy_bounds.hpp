#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wfk/params.hpp"

namespace wfk {

/// The unique N >= 1 with mu_N <= eps/2 < mu_{N-1}, where mu_N is the tail
/// operator norm (a^N/(1-a))^{1/2}. Throws DomainError when eps is too
/// large for the sandwich to have a solution (eps >= 2 mu_0); the covering
/// number is then trivially 1.
int choose_truncation(const WeierstrassParams& params, double eps);

/// Log of the finite-eps upper covering bound, in nats:
/// 2 N ln(1 + (4/eps) (1/(1-a))^{1/2}) with N from choose_truncation.
/// With tight = true the head norm ((1-a^N)/(1-a))^{1/2} replaces the
/// relaxed constant; both variants are valid bounds and the flag exposes
/// the (small) gap between them.
double upper_ln_cover(const WeierstrassParams& params, double eps, bool tight = false);

struct LowerBound {
    double value; // nats
    int n_star;   // optimizing dimension
};

/// Log of the finite-eps lower covering bound, in nats: the maximum over a
/// small integer window around ceil(beta), beta = 2 ln(sqrt(2) eps)/ln a,
/// of g(n) = (n^2/2) ln a - n ln(2 eps^2). g is concave in n, so the
/// window always contains the true integer maximizer. Throws
/// DegenerateError when the maximum is <= 0 (the certificate would be
/// vacuous).
LowerBound lower_ln_cover(const WeierstrassParams& params, double eps);

struct GramDetCertificate {
    double analytic; // a^{n(n-1)}
    double numeric;  // det of the 2n x 2n L2 Gram of the first basis elements
};

/// Determinant certificate for the first 2n basis elements. The numeric
/// determinant uses the closed-form L2 inner products by default; with
/// quadrature_cross_check every entry is recomputed by quadrature, making
/// the route fully independent of the coefficient algebra.
GramDetCertificate gram_det_certificate(const WeierstrassParams& params, int n,
                                        bool quadrature_cross_check = false);

struct Envelope {
    double low;  // 2/ln(1/a)
    double high; // 4/ln(1/a)
};

/// Asymptotic envelope for ln C(eps) / [ln(1/eps)]^2.
Envelope envelope(const WeierstrassParams& params);

/// Everything the bounds machinery knows about one eps.
struct BoundReport {
    double eps = 0.0;
    int n_eps = 0;
    double upper_ln_cover = 0.0;
    std::optional<double> lower_ln_cover; // absent when degenerate
    std::optional<int> n_star;
    double envelope_low = 0.0;
    double envelope_high = 0.0;
    double phi = 0.0;                     // [ln(1/eps)]^2
    std::optional<double> upper_ratio;    // absent when phi == 0 (eps == 1)
    std::optional<double> lower_ratio;
};

/// Builds the per-eps record; a degenerate lower bound leaves the optional
/// fields empty instead of failing the row.
BoundReport make_bound_report(const WeierstrassParams& params, double eps, bool tight = false);

std::vector<BoundReport> bound_table(const WeierstrassParams& params, std::span<const double> eps,
                                     bool tight = false);

/// CSV serialization: '.' decimal, comma separator, 17 significant digits.
std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& report);
nlohmann::json bound_to_json(const BoundReport& report);

} // namespace wfk
