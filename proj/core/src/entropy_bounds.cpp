#include "wfk/entropy_bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "wfk/projections.hpp"
#include "wfk/quadrature.hpp"
#include "wfk/text.hpp"

namespace wfk {

int choose_truncation(const WeierstrassParams& params, double eps) {
    if (!(eps > 0.0)) throw DomainError("eps must be > 0");
    const double half = 0.5 * eps;
    if (!(half < mu_tail(params, 0))) {
        throw DomainError("eps too large for the truncation sandwich; the covering is trivially 1");
    }
    // Log-domain guess (half^2 itself may underflow for tiny eps), then a
    // local fixup against the exact mu values so the boundary cases
    // (mu_N == eps/2) land on the right side.
    const double a = params.a();
    int n = static_cast<int>(
        std::ceil((2.0 * std::log(half) + std::log1p(-a)) / std::log(a)));
    if (n < 1) n = 1;
    while (n > 1 && mu_tail(params, n - 1) <= half) --n;
    while (mu_tail(params, n) > half) ++n;
    return n;
}

double upper_ln_cover(const WeierstrassParams& params, double eps, bool tight) {
    const int n = choose_truncation(params, eps);
    const double head = tight ? std::sqrt(projection_split(params, n).head_norm_sq)
                              : std::sqrt(embedding_norm_sq(params));
    return 2.0 * n * std::log1p(4.0 / eps * head);
}

LowerBound lower_ln_cover(const WeierstrassParams& params, double eps) {
    if (!(eps > 0.0)) throw DomainError("eps must be > 0");
    const double ln_a = std::log(params.a());
    const double ln_2eps_sq = std::log(2.0 * eps * eps);
    const double beta = 2.0 * std::log(std::sqrt(2.0) * eps) / ln_a;
    const int pivot = static_cast<int>(std::ceil(beta));
    const int lo = std::max(1, pivot - 2);
    const int hi = std::max(1, pivot + 2);
    double best = -std::numeric_limits<double>::infinity();
    int best_n = lo;
    for (int n = lo; n <= hi; ++n) {
        const double g = 0.5 * n * n * ln_a - n * ln_2eps_sq;
        if (g > best) {
            best = g;
            best_n = n;
        }
    }
    if (!(best > 0.0)) {
        std::ostringstream msg;
        msg << "lower covering bound degenerates to " << best << " nats at eps = " << eps;
        throw DegenerateError(msg.str());
    }
    return LowerBound{best, best_n};
}

GramDetCertificate gram_det_certificate(const WeierstrassParams& params, int n,
                                        bool quadrature_cross_check) {
    if (n < 1) throw DomainError("certificate dimension must be >= 1");
    const double analytic = std::pow(params.a(), static_cast<double>(n) * (n - 1));
    const auto dim = static_cast<Eigen::Index>(2 * n);
    Eigen::MatrixXd m(dim, dim);
    std::vector<RkhsFunction> basis;
    basis.reserve(static_cast<std::size_t>(dim));
    for (int j = 0; j < 2 * n; ++j) basis.push_back(basis_function(params, j));
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index l = j; l < dim; ++l) {
            const auto& fj = basis[static_cast<std::size_t>(j)];
            const auto& fl = basis[static_cast<std::size_t>(l)];
            const double v =
                quadrature_cross_check ? l2_inner_quadrature(fj, fl, 1e-11) : l2_inner(fj, fl);
            m(j, l) = v;
            m(l, j) = v;
        }
    }
    return GramDetCertificate{analytic, m.determinant()};
}

Envelope envelope(const WeierstrassParams& params) {
    const double ln_inv_a = std::log(1.0 / params.a());
    return Envelope{2.0 / ln_inv_a, 4.0 / ln_inv_a};
}

BoundReport make_bound_report(const WeierstrassParams& params, double eps, bool tight) {
    BoundReport r;
    r.eps = eps;
    r.n_eps = choose_truncation(params, eps);
    r.upper_ln_cover = upper_ln_cover(params, eps, tight);
    const Envelope env = envelope(params);
    r.envelope_low = env.low;
    r.envelope_high = env.high;
    const double ln_inv_eps = std::log(1.0 / eps);
    r.phi = ln_inv_eps * ln_inv_eps;
    if (r.phi > 0.0) r.upper_ratio = r.upper_ln_cover / r.phi;
    try {
        const LowerBound lb = lower_ln_cover(params, eps);
        r.lower_ln_cover = lb.value;
        r.n_star = lb.n_star;
        if (r.phi > 0.0) r.lower_ratio = lb.value / r.phi;
    } catch (const DegenerateError&) {
        // reported as empty cells
    }
    return r;
}

std::vector<BoundReport> bound_table(const WeierstrassParams& params, std::span<const double> eps,
                                     bool tight) {
    std::vector<BoundReport> rows;
    rows.reserve(eps.size());
    for (double e : eps) rows.push_back(make_bound_report(params, e, tight));
    return rows;
}

std::string bound_csv_header() {
    return "eps,N_eps,upper_ln_cover,lower_ln_cover,n_star,envelope_low,envelope_high,phi,"
           "upper_ratio,lower_ratio";
}

std::string bound_csv_row(const BoundReport& r) {
    std::string row = format_real(r.eps);
    row += ',';
    row += std::to_string(r.n_eps);
    row += ',';
    row += format_real(r.upper_ln_cover);
    row += ',';
    if (r.lower_ln_cover) row += format_real(*r.lower_ln_cover);
    row += ',';
    if (r.n_star) row += std::to_string(*r.n_star);
    row += ',';
    row += format_real(r.envelope_low);
    row += ',';
    row += format_real(r.envelope_high);
    row += ',';
    row += format_real(r.phi);
    row += ',';
    if (r.upper_ratio) row += format_real(*r.upper_ratio);
    row += ',';
    if (r.lower_ratio) row += format_real(*r.lower_ratio);
    return row;
}

nlohmann::json bound_to_json(const BoundReport& r) {
    nlohmann::json j{{"eps", r.eps},
                     {"N_eps", r.n_eps},
                     {"upper_ln_cover", r.upper_ln_cover},
                     {"lower_ln_cover", nullptr},
                     {"n_star", nullptr},
                     {"envelope_low", r.envelope_low},
                     {"envelope_high", r.envelope_high},
                     {"phi", r.phi},
                     {"upper_ratio", nullptr},
                     {"lower_ratio", nullptr}};
    if (r.lower_ln_cover) j["lower_ln_cover"] = *r.lower_ln_cover;
    if (r.n_star) j["n_star"] = *r.n_star;
    if (r.upper_ratio) j["upper_ratio"] = *r.upper_ratio;
    if (r.lower_ratio) j["lower_ratio"] = *r.lower_ratio;
    return j;
}

} // namespace wfk
