#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wfk/projections.hpp"

using wfk::apply_head_projection;
using wfk::apply_tail_projection;
using wfk::basis_function;
using wfk::DomainError;
using wfk::embedding_norm_sq;
using wfk::make_params;
using wfk::mu_tail;
using wfk::projection_split;
using wfk::rkhs_inner;
using wfk::rkhs_norm_sq;
using wfk::RkhsFunction;

TEST_CASE("closed forms across parameter regimes") {
    for (double a : {0.25, 0.5, 0.9}) {
        const auto p = make_params(a, a < 0.5 ? 4 : 2);
        const double total = 1.0 / (1.0 - a);
        CHECK(embedding_norm_sq(p) == total);
        for (int n : {1, 3, 10}) {
            const auto split = projection_split(p, n);
            const double an = std::pow(a, n);
            CHECK(std::fabs(split.head_norm_sq - (1.0 - an) / (1.0 - a)) <=
                  1e-14 * split.head_norm_sq);
            CHECK(std::fabs(split.tail_norm_sq - an / (1.0 - a)) <= 1e-14 * split.tail_norm_sq);
            CHECK(std::fabs(split.head_norm_sq + split.tail_norm_sq - total) <= 1e-14 * total);
            CHECK(std::fabs(split.mu * split.mu - split.tail_norm_sq) <=
                  1e-14 * (1.0 + split.tail_norm_sq));
        }
    }
    const auto p = make_params(0.5, 3);
    CHECK(embedding_norm_sq(p) == 2.0);
    const auto s3 = projection_split(p, 3);
    CHECK(s3.head_norm_sq == 1.75);
    CHECK(s3.tail_norm_sq == 0.25);
    CHECK(s3.mu == 0.5);
    const auto s1 = projection_split(p, 1);
    CHECK(s1.head_norm_sq == 1.0);
    CHECK(s1.tail_norm_sq == 1.0);
    CHECK_THROWS_AS(projection_split(p, 0), DomainError);
}

TEST_CASE("mu decreases to zero") {
    const auto p = make_params(0.9, 2);
    double prev = mu_tail(p, 0);
    CHECK(prev == std::sqrt(10.0));
    for (int n = 1; n <= 200; ++n) {
        const double mu = mu_tail(p, n);
        CHECK(mu < prev);
        prev = mu;
    }
    CHECK(prev < 1e-4);
}

TEST_CASE("head projection on basis elements") {
    const auto p = make_params(0.5, 3);
    const auto psi2 = basis_function(p, 2); // lives at index 1
    const auto head = apply_head_projection(psi2, 1);
    CHECK(rkhs_norm_sq(head) == 0.0);
    const auto untouched = apply_head_projection(psi2, 5);
    CHECK(rkhs_norm_sq(untouched) == 1.0);
}

TEST_CASE("projection pythagoras on random tables") {
    const auto p = make_params(0.5, 3);
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int round = 0; round < 50; ++round) {
        std::vector<double> c(10), s(10);
        for (double& v : c) v = d(rng);
        for (double& v : s) v = d(rng);
        const RkhsFunction f(p, c, s);
        const int n = 1 + static_cast<int>(rng() % 9);
        const auto head = apply_head_projection(f, n);
        const auto tail = apply_tail_projection(f, n);
        CHECK(rkhs_inner(head, tail) == 0.0);
        CHECK(rkhs_norm_sq(head) + rkhs_norm_sq(tail) ==
              doctest::Approx(rkhs_norm_sq(f)).epsilon(1e-13));
        // idempotence
        CHECK(rkhs_norm_sq(apply_head_projection(head, n)) == rkhs_norm_sq(head));
    }
}

TEST_CASE("numeric attainment of the operator norms") {
    // The extremal directions from the closed-form proofs peak at x = 0;
    // an odd grid contains that point, so the grid max matches the norm.
    for (const auto& [a, b] : {std::pair{0.5, 3}, std::pair{0.9, 2}}) {
        const auto p = make_params(a, b);
        const int order = 5;
        const auto split = projection_split(p, order);
        const double root_a = std::sqrt(a);

        std::vector<double> head_c(order);
        double w = 1.0;
        for (int n = 0; n < order; ++n) {
            head_c[static_cast<std::size_t>(n)] = w;
            w *= root_a;
        }
        RkhsFunction head_dir(p, head_c, std::vector<double>(head_c.size(), 0.0));
        const double hs = 1.0 / std::sqrt(rkhs_norm_sq(head_dir));
        for (double& v : head_dir.cos_coeffs) v *= hs;
        CHECK(std::fabs(wfk::sup_norm_bracket(head_dir, 4001).lower -
                        std::sqrt(split.head_norm_sq)) <= 1e-3);

        const int tail_terms = wfk::truncation_order(p, 1e-10).order;
        std::vector<double> tail_c(static_cast<std::size_t>(order + tail_terms), 0.0);
        w = std::pow(root_a, order);
        for (int n = order; n < order + tail_terms; ++n) {
            tail_c[static_cast<std::size_t>(n)] = w;
            w *= root_a;
        }
        RkhsFunction tail_dir(p, tail_c, std::vector<double>(tail_c.size(), 0.0));
        const double ts = 1.0 / std::sqrt(rkhs_norm_sq(tail_dir));
        for (double& v : tail_dir.cos_coeffs) v *= ts;
        CHECK(std::fabs(wfk::sup_norm_bracket(tail_dir, 4001).lower - split.mu) <= 1e-3);
    }
}

TEST_CASE("embedding norm is attained by normalized kernel sections") {
    const auto p = make_params(0.5, 3);
    double prev = 0.0;
    for (int n : {2, 5, 10, 20, 40}) {
        const auto sec = wfk::kernel_section(p, 0.0, n);
        const double val = wfk::evaluate(sec, 0.0) / std::sqrt(rkhs_norm_sq(sec));
        const double attained = val * val;
        CHECK(attained >= prev);
        prev = attained;
    }
    CHECK(std::fabs(prev - embedding_norm_sq(p)) <= 1e-11);
}
