#include "wfk/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include <Eigen/Dense>

#include "wfk/entropy_bounds.hpp"
#include "wfk/entropy_empirical.hpp"
#include "wfk/kernel.hpp"
#include "wfk/projections.hpp"
#include "wfk/quadrature.hpp"
#include "wfk/random.hpp"
#include "wfk/rkhs.hpp"

namespace wfk {
namespace {

/// Collects the first failure of a suite; the what() of a stray exception
/// counts as a failure too.
class Check {
public:
    void require(bool ok, const std::string& what) {
        if (!ok && detail_.empty()) detail_ = what;
    }

    template <typename T>
    void close(T got, T want, double tol, const std::string& what) {
        const double diff = std::fabs(static_cast<double>(got) - static_cast<double>(want));
        if (!(diff <= tol) && detail_.empty()) {
            std::ostringstream msg;
            msg.precision(17);
            msg << what << ": got " << got << ", want " << want << " (diff " << diff << ")";
            detail_ = msg.str();
        }
    }

    bool passed() const { return detail_.empty(); }
    const std::string& detail() const { return detail_; }

private:
    std::string detail_;
};

SuiteResult run_suite(const std::string& name, const std::function<void(Check&)>& body) {
    Check check;
    try {
        body(check);
    } catch (const std::exception& e) {
        check.require(false, std::string("unexpected exception: ") + e.what());
    }
    return SuiteResult{name, check.passed(), check.detail()};
}

void suite_params(const VerifyOptions& o, Check& c) {
    bool threw = false;
    try {
        make_params(0.5, 1);
    } catch (const DomainError&) {
        threw = true;
    }
    c.require(threw, "make_params(0.5, 1) must reject a*b < 1");
    threw = false;
    try {
        make_params(1.0, 3);
    } catch (const DomainError&) {
        threw = true;
    }
    c.require(threw, "make_params(1.0, 3) must reject a >= 1");

    const double a = o.params.a();
    const TruncationPlan plan = truncation_order(o.params, o.tol);
    c.require(plan.order >= 1, "truncation order must be >= 1");
    c.close(plan.tail_bound, std::pow(a, plan.order) / (1.0 - a), 0.0, "tail bound identity");
    c.require(plan.tail_bound <= o.tol, "tail bound must meet the tolerance");
    if (plan.order > 1) {
        c.require(std::pow(a, plan.order - 1) / (1.0 - a) > o.tol,
                  "truncation order must be minimal");
    }
}

void suite_series(const VerifyOptions& o, Check& c) {
    Rng rng(o.seed);
    const double bound = 1.0 / (1.0 - o.params.a()) + o.tol;
    for (int i = 0; i < 200; ++i) {
        const double x = 4.0 * rng.uniform01() - 2.0;
        const double v = eval_weierstrass(o.params, x, o.tol);
        c.require(v == eval_weierstrass(o.params, -x, o.tol), "series must be even in x, exactly");
        c.require(std::fabs(v) <= bound, "series must respect the geometric bound");
    }
    // Largest order whose geometric tail still clears the rounding noise of
    // the partial sums themselves; past it the inequality is below 1 ulp.
    const int n_cap = std::max(
        1, std::min(30, static_cast<int>(std::log(1e-11 * (1.0 - o.params.a())) /
                                         std::log(o.params.a()))));
    for (int i = 0; i < 200; ++i) {
        const double x = 2.0 * rng.uniform01() - 1.0;
        const int n = 1 + static_cast<int>(rng.uniform01() * (n_cap - 1));
        const int m = n + 1 + static_cast<int>(rng.uniform01() * 30.0);
        const double gap = std::fabs(partial_sum(o.params, x, n) - partial_sum(o.params, x, m));
        c.require(gap <= std::pow(o.params.a(), n) / (1.0 - o.params.a()),
                  "partial sums must stay within the geometric tail");
    }
}

void suite_gram_psd(const VerifyOptions& o, Check& c) {
    Rng rng(o.seed + 1);
    for (int round = 0; round < 5; ++round) {
        std::vector<double> pts(20);
        for (double& p : pts) p = 2.0 * rng.uniform01() - 1.0;
        Eigen::MatrixXd g = gram_matrix(o.params, pts, o.tol);
        if (o.inject_gram_sign_flip) {
            g(0, 1) = -g(0, 1);
            g(1, 0) = -g(1, 0);
        }
        c.require((g - g.transpose()).norm() == 0.0, "Gram matrix must be exactly symmetric");
        const double ridge = 1e-8 * g.diagonal().maxCoeff();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
        c.require(es.eigenvalues().minCoeff() >= -ridge,
                  "Gram matrix must be positive semidefinite up to the ridge");
    }
}

void suite_rkhs_axioms(const VerifyOptions& o, Check& c) {
    for (int j = 0; j <= 9; ++j) {
        const RkhsFunction psi = basis_function(o.params, j);
        c.close(rkhs_norm(psi), 1.0, 0.0, "basis elements must have unit native norm");
        for (int l = 0; l < j; ++l) {
            c.close(rkhs_inner(psi, basis_function(o.params, l)), 0.0, 0.0,
                    "distinct basis elements must be orthogonal");
        }
    }
    Rng rng(o.seed + 2);
    auto random_table = [&](int n) {
        std::vector<double> cs(static_cast<std::size_t>(n)), sn(static_cast<std::size_t>(n));
        for (double& v : cs) v = 2.0 * rng.uniform01() - 1.0;
        for (double& v : sn) v = 2.0 * rng.uniform01() - 1.0;
        return RkhsFunction(o.params, cs, sn);
    };
    for (int round = 0; round < 20; ++round) {
        const RkhsFunction f = random_table(8);
        const RkhsFunction g = random_table(5);
        const RkhsFunction h = random_table(8);
        // bilinearity of <2f+g, h>
        RkhsFunction fg = f;
        for (int k = 0; k < fg.length(); ++k) {
            fg.cos_coeffs[static_cast<std::size_t>(k)] =
                2.0 * f.cos_coeffs[static_cast<std::size_t>(k)] +
                (k < g.length() ? g.cos_coeffs[static_cast<std::size_t>(k)] : 0.0);
            fg.sin_coeffs[static_cast<std::size_t>(k)] =
                2.0 * f.sin_coeffs[static_cast<std::size_t>(k)] +
                (k < g.length() ? g.sin_coeffs[static_cast<std::size_t>(k)] : 0.0);
        }
        c.close(rkhs_inner(fg, h), 2.0 * rkhs_inner(f, h) + rkhs_inner(g, h), 1e-12,
                "native inner product must be bilinear");
        // Parseval: the norm recovers the basis expansion coefficients
        double parseval = 0.0;
        for (int j = 0; j < 2 * f.length(); ++j) {
            const double coeff = rkhs_inner(f, basis_function(o.params, j));
            parseval += coeff * coeff;
        }
        c.close(parseval, rkhs_norm_sq(f), 1e-12, "Parseval identity over the basis");
    }
    const RkhsFunction zero(o.params, {0.0, 0.0}, {0.0, 0.0});
    c.close(rkhs_norm_sq(zero), 0.0, 0.0, "zero table must have zero norm");
}

void suite_reproduction(const VerifyOptions& o, Check& c) {
    Rng rng(o.seed + 3);
    const int table_len = 12;
    for (int round = 0; round < 25; ++round) {
        std::vector<double> cs(table_len), sn(table_len);
        for (double& v : cs) v = 2.0 * rng.uniform01() - 1.0;
        for (double& v : sn) v = 2.0 * rng.uniform01() - 1.0;
        const RkhsFunction f(o.params, cs, sn);
        for (int g = 0; g <= 100; ++g) {
            const double x = -1.0 + 0.02 * g;
            const double direct = evaluate(f, x);
            const double reproduced = rkhs_inner(f, kernel_section(o.params, x, table_len));
            c.require(std::fabs(direct - reproduced) <= 1e-12,
                      "reproducing identity must hold to 1e-12");
        }
    }
    // Cauchy-Schwarz consequence: |f(x)| <= ||f|| * embedding norm
    const double emb = std::sqrt(embedding_norm_sq(o.params));
    for (int round = 0; round < 25; ++round) {
        std::vector<double> cs(6), sn(6);
        for (double& v : cs) v = 2.0 * rng.uniform01() - 1.0;
        for (double& v : sn) v = 2.0 * rng.uniform01() - 1.0;
        const RkhsFunction f(o.params, cs, sn);
        const double x = 2.0 * rng.uniform01() - 1.0;
        c.require(std::fabs(evaluate(f, x)) <= rkhs_norm(f) * emb * (1.0 + 1e-12),
                  "point evaluation must respect the embedding norm");
    }
}

void suite_l2(const VerifyOptions& o, Check& c) {
    Rng rng(o.seed + 4);
    for (int round = 0; round < 10; ++round) {
        std::vector<double> c1(4), s1(4), c2(4), s2(4);
        for (double& v : c1) v = 2.0 * rng.uniform01() - 1.0;
        for (double& v : s1) v = 2.0 * rng.uniform01() - 1.0;
        for (double& v : c2) v = 2.0 * rng.uniform01() - 1.0;
        for (double& v : s2) v = 2.0 * rng.uniform01() - 1.0;
        const RkhsFunction f(o.params, c1, s1);
        const RkhsFunction g(o.params, c2, s2);
        const double closed = l2_inner(f, g);
        c.require(closed * closed <= l2_inner(f, f) * l2_inner(g, g) * (1.0 + 1e-12),
                  "L2 Cauchy-Schwarz");
        c.close(closed, l2_inner_quadrature(f, g, 1e-10), 1e-8,
                "closed-form L2 inner product must match quadrature");
    }
}

void suite_sup_bracket(const VerifyOptions& o, Check& c) {
    const RkhsFunction psi0 = basis_function(o.params, 0);
    const SupNormBracket b = sup_norm_bracket(psi0, o.grid_count);
    c.require(b.lower <= b.upper, "bracket must be ordered");
    c.close(b.lower, 1.0, 1e-6, "sup norm of the first basis cosine");
    Rng rng(o.seed + 5);
    for (int round = 0; round < 10; ++round) {
        std::vector<double> cs(4), sn(4);
        for (double& v : cs) v = 2.0 * rng.uniform01() - 1.0;
        for (double& v : sn) v = 2.0 * rng.uniform01() - 1.0;
        const RkhsFunction f(o.params, cs, sn);
        const SupNormBracket coarse = sup_norm_bracket(f, 501);
        const SupNormBracket fine = sup_norm_bracket(f, 1001); // nested grid
        c.require(coarse.lower <= fine.lower && fine.lower <= coarse.upper,
                  "finer grid max must stay inside the coarse bracket");
        c.require(fine.upper <= coarse.upper, "bracket must tighten under refinement");
    }
    const RkhsFunction zero(o.params, {0.0}, {0.0});
    const SupNormBracket zb = sup_norm_bracket(zero, 11);
    c.require(zb.lower == 0.0 && zb.upper == 0.0, "zero table must bracket to (0, 0)");
}

void suite_projections(const VerifyOptions& o, Check& c) {
    const double a = o.params.a();
    const double total = embedding_norm_sq(o.params);
    double prev_mu = mu_tail(o.params, 0);
    for (int n = 1; n <= 12; ++n) {
        const ProjectionSplit split = projection_split(o.params, n);
        c.close(split.head_norm_sq + split.tail_norm_sq, total, 1e-14 * total,
                "head + tail norms must sum to the embedding norm");
        c.close(split.mu * split.mu, split.tail_norm_sq, 1e-14 * (1.0 + split.tail_norm_sq),
                "mu^2 identity");
        c.require(split.mu < prev_mu, "mu must decrease strictly");
        prev_mu = split.mu;
    }
    Rng rng(o.seed + 6);
    for (int round = 0; round < 20; ++round) {
        std::vector<double> cs(10), sn(10);
        for (double& v : cs) v = 2.0 * rng.uniform01() - 1.0;
        for (double& v : sn) v = 2.0 * rng.uniform01() - 1.0;
        const RkhsFunction f(o.params, cs, sn);
        const int n = 1 + static_cast<int>(rng.uniform01() * 9.0);
        const RkhsFunction head = apply_head_projection(f, n);
        const RkhsFunction tail = apply_tail_projection(f, n);
        c.close(rkhs_norm_sq(head) + rkhs_norm_sq(tail), rkhs_norm_sq(f), 1e-12,
                "head/tail Pythagoras");
        c.close(rkhs_inner(head, tail), 0.0, 1e-14, "head and tail must be orthogonal");
        const RkhsFunction twice = apply_head_projection(head, n);
        c.close(rkhs_norm_sq(twice), rkhs_norm_sq(head), 0.0, "head projection idempotence");
    }
    // Numeric attainment: the extremal directions are maximized at x = 0,
    // which the (odd) evaluation grid contains.
    const int order = std::max(2, o.trunc_order);
    const ProjectionSplit split = projection_split(o.params, order);
    const double root_a = std::sqrt(a);
    std::vector<double> head_c(static_cast<std::size_t>(order));
    double w = 1.0;
    for (int n = 0; n < order; ++n) {
        head_c[static_cast<std::size_t>(n)] = w;
        w *= root_a;
    }
    RkhsFunction head_dir(o.params, head_c, std::vector<double>(head_c.size(), 0.0));
    const double head_scale = 1.0 / rkhs_norm(head_dir);
    for (double& v : head_dir.cos_coeffs) v *= head_scale;
    const int grid = o.grid_count | 1; // force a grid containing x = 0
    c.close(sup_norm_bracket(head_dir, grid).lower, std::sqrt(split.head_norm_sq), 1e-3,
            "head extremal function must attain the head norm");

    const int tail_terms = truncation_order(o.params, 1e-10).order;
    std::vector<double> tail_c(static_cast<std::size_t>(order + tail_terms), 0.0);
    w = std::pow(root_a, order);
    for (int n = order; n < order + tail_terms; ++n) {
        tail_c[static_cast<std::size_t>(n)] = w;
        w *= root_a;
    }
    RkhsFunction tail_dir(o.params, tail_c, std::vector<double>(tail_c.size(), 0.0));
    const double tail_scale = 1.0 / rkhs_norm(tail_dir);
    for (double& v : tail_dir.cos_coeffs) v *= tail_scale;
    c.close(sup_norm_bracket(tail_dir, grid).lower, split.mu, 1e-3,
            "tail extremal function must attain mu");
}

void suite_bounds_sandwich(const VerifyOptions& o, Check& c) {
    Rng rng(o.seed + 7);
    const double top = 2.0 * mu_tail(o.params, 0);
    for (int round = 0; round < 100; ++round) {
        const double eps = top * std::pow(10.0, -6.0 * rng.uniform01()) * 0.999;
        const int n = choose_truncation(o.params, eps);
        c.require(mu_tail(o.params, n) <= 0.5 * eps, "sandwich upper side");
        c.require(mu_tail(o.params, n - 1) > 0.5 * eps, "sandwich lower side");
    }
    const double eps_small = 1e-10;
    const double ratio = choose_truncation(o.params, eps_small) * std::log(1.0 / o.params.a()) /
                         (2.0 * std::log(1.0 / eps_small));
    c.require(ratio >= 0.95 && ratio <= 1.30,
              "truncation order must track 2 ln(1/eps)/ln(1/a)");
    bool threw = false;
    try {
        choose_truncation(o.params, top * 1.01);
    } catch (const DomainError&) {
        threw = true;
    }
    c.require(threw, "oversized eps must be rejected");
}

void suite_bounds_envelope(const VerifyOptions& o, Check& c) {
    const Envelope env = envelope(o.params);
    c.require(env.low < env.high, "envelope must be ordered");
    c.close(2.0 * env.low, env.high, 1e-15, "envelope constants ratio");
    for (int k = 2; k <= 8; ++k) {
        const BoundReport r = make_bound_report(o.params, std::pow(10.0, -k));
        if (r.lower_ln_cover) {
            c.require(*r.lower_ln_cover <= r.upper_ln_cover,
                      "lower bound must not exceed upper bound");
            // The finite-eps lower ratio sits below the envelope and the
            // finite-eps upper ratio above it; the pair straddles the limit.
            c.require(*r.lower_ratio <= env.low * (1.0 + 1e-12), "lower ratio must straddle");
        }
        c.require(r.upper_ratio && *r.upper_ratio >= env.high * (1.0 - 1e-12),
                  "upper ratio must straddle");
    }
    const double eps8 = 1e-8;
    const double len = std::log(1.0 / eps8);
    const BoundReport r8 = make_bound_report(o.params, eps8);
    c.require(r8.lower_ratio.has_value(), "lower bound must be alive at eps = 1e-8");
    c.require(*r8.lower_ratio >= 0.9 * env.low, "lower ratio approach at eps = 1e-8");
    // First-principles cap on the finite-eps inflation of the upper ratio:
    // N <= (2 ln(1/eps) + ln(4/(1-a)))/ln(1/a) + 1 and the log factor gains
    // ln(4 (1/(1-a))^{1/2}) over ln(1/eps).
    const double a = o.params.a();
    const double inflate = (1.0 + (std::log(4.0 / (1.0 - a)) + std::log(1.0 / a)) / (2.0 * len)) *
                           (1.0 + (std::log(4.0 / std::sqrt(1.0 - a)) + 0.01) / len);
    c.require(r8.upper_ratio && *r8.upper_ratio <= env.high * inflate * (1.0 + 1e-12),
              "upper ratio approach at eps = 1e-8");
}

void suite_lower_window(const VerifyOptions& o, Check& c) {
    Rng rng(o.seed + 8);
    const double ln_a = std::log(o.params.a());
    for (int round = 0; round < 100; ++round) {
        const double eps = std::pow(10.0, -8.0 * rng.uniform01() - 0.5);
        LowerBound lb{0.0, 0};
        try {
            lb = lower_ln_cover(o.params, eps);
        } catch (const DegenerateError&) {
            continue;
        }
        const double beta = 2.0 * std::log(std::sqrt(2.0) * eps) / ln_a;
        const int pivot = static_cast<int>(std::ceil(beta));
        double widest = lb.value;
        for (int n = std::max(1, pivot - 12); n <= std::max(1, pivot + 12); ++n) {
            widest = std::max(widest, 0.5 * n * n * ln_a - n * std::log(2.0 * eps * eps));
        }
        c.require(widest <= lb.value * (1.0 + 1e-12) + 1e-12,
                  "widening the search window must not improve the maximum");
    }
}

void suite_gram_certificate(const VerifyOptions& o, Check& c) {
    for (int n = 1; n <= 6; ++n) {
        const GramDetCertificate cert = gram_det_certificate(o.params, n);
        c.close(cert.numeric, cert.analytic, 1e-12 * cert.analytic,
                "closed-form route must reproduce the determinant");
    }
    for (int n = 2; n <= 3; ++n) {
        const GramDetCertificate cert = gram_det_certificate(o.params, n, true);
        c.require(std::fabs(cert.numeric - cert.analytic) <= 1e-8 * cert.analytic,
                  "quadrature route must reproduce the determinant to 1e-8");
    }
}

void suite_sampling(const VerifyOptions& o, Check& c) {
    const int order = std::min(o.trunc_order, 6);
    const auto first = sample_unit_ball(o.params, order, 200, o.seed);
    const auto second = sample_unit_ball(o.params, order, 200, o.seed);
    for (std::size_t i = 0; i < first.size(); ++i) {
        c.require(first[i].cos_coeffs == second[i].cos_coeffs &&
                      first[i].sin_coeffs == second[i].sin_coeffs,
                  "sampling must be deterministic per seed");
    }
    const int count = 4000;
    const auto pool = sample_unit_ball(o.params, order, count, o.seed + 9);
    double mean_sq = 0.0;
    for (const auto& f : pool) {
        const double nsq = rkhs_norm_sq(f);
        c.require(nsq <= 1.0 + 1e-12, "samples must stay inside the unit ball");
        mean_sq += nsq;
    }
    mean_sq /= count;
    const double d = 2.0 * order;
    const double want = d / (d + 2.0);
    const double var = d / (d + 4.0) - want * want;
    c.close(mean_sq, want, 3.0 * std::sqrt(var / count),
            "mean squared radius of the uniform ball draw");
}

void suite_packing_cover(const VerifyOptions& o, Check& c) {
    const int order = std::min(o.trunc_order, 6);
    const int samples = std::min(o.samples, 300);
    const auto pool = sample_unit_ball(o.params, order, samples, o.seed);
    const auto dist = pairwise_sup_distances(pool, 2001, o.workers);
    c.require(dist.lower.diagonal().maxCoeff() == 0.0, "self distance must bracket to zero");
    int prev = samples + 1;
    for (double eps : {0.05, 0.1, 0.2, 0.4, 0.8}) {
        const PackingResult pack = greedy_packing(dist.lower, eps);
        c.require(pack.cardinality <= prev, "packing cardinality must be non-increasing in eps");
        prev = pack.cardinality;
        double upper = 0.0;
        try {
            upper = upper_ln_cover(o.params, eps);
        } catch (const DomainError&) {
            continue; // eps beyond the sandwich range for these params
        }
        c.require(std::log(static_cast<double>(pack.cardinality)) <= upper,
                  "packing log-cardinality must stay below the analytic upper bound");
    }
    for (int n = 1; n <= 2; ++n) {
        for (double eps : {0.5, 0.2}) {
            const CoverDescription cover = head_cover(o.params, n, eps);
            const double head = std::sqrt(projection_split(o.params, n).head_norm_sq);
            const double budget = 2.0 * n * std::log1p(2.0 * head / cover.net_spacing);
            c.require(cover.cover_size_ln <= budget, "cover must stay within the rank budget");
            // Bracket slack scales with the top frequency, so the check
            // grid does too.
            const int check_grid = std::max(801, 32 * o.params.b() + 1);
            const CoverageCheck cc =
                cover_coverage_check(o.params, n, eps, 2000, o.seed + 10, check_grid);
            c.require(cc.covered == cc.samples, "cover must catch every sampled function");
        }
    }
    const double full_norm = mu_tail(o.params, 0);
    const CoverDescription trivial = constructive_cover(o.params, full_norm * 1.5);
    c.require(trivial.cover_size_ln == 0.0 && trivial.dimension == 0,
              "oversized eps must give the single-ball cover");
    // Determinism of the full pipeline rows.
    const double eps_list[] = {0.8, 0.4};
    const auto rows1 = empirical_report(o.params, eps_list, order, samples, 1001, o.seed, o.workers);
    const auto rows2 = empirical_report(o.params, eps_list, order, samples, 1001, o.seed, o.workers);
    for (std::size_t i = 0; i < rows1.size(); ++i) {
        c.require(empirical_csv_row(rows1[i]) == empirical_csv_row(rows2[i]),
                  "pipeline rows must be bit-reproducible");
    }
}

} // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& o) {
    std::vector<SuiteResult> results;
    const auto add = [&](const std::string& name, const std::function<void(Check&)>& body) {
        results.push_back(run_suite(name, body));
    };
    add("params_and_truncation", [&](Check& c) { suite_params(o, c); });
    add("series_evaluation", [&](Check& c) { suite_series(o, c); });
    add("gram_psd", [&](Check& c) { suite_gram_psd(o, c); });
    add("rkhs_axioms", [&](Check& c) { suite_rkhs_axioms(o, c); });
    add("reproduction", [&](Check& c) { suite_reproduction(o, c); });
    add("l2_geometry", [&](Check& c) { suite_l2(o, c); });
    add("sup_norm_bracket", [&](Check& c) { suite_sup_bracket(o, c); });
    add("projections", [&](Check& c) { suite_projections(o, c); });
    add("bounds_sandwich", [&](Check& c) { suite_bounds_sandwich(o, c); });
    add("bounds_envelope", [&](Check& c) { suite_bounds_envelope(o, c); });
    add("lower_bound_window", [&](Check& c) { suite_lower_window(o, c); });
    add("gram_certificate", [&](Check& c) { suite_gram_certificate(o, c); });
    add("unit_ball_sampling", [&](Check& c) { suite_sampling(o, c); });
    add("packing_and_cover", [&](Check& c) { suite_packing_cover(o, c); });
    return results;
}

} // namespace wfk
