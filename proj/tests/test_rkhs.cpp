#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "wfk/quadrature.hpp"
#include "wfk/rkhs.hpp"

using wfk::basis_function;
using wfk::DomainError;
using wfk::evaluate;
using wfk::kernel_section;
using wfk::l2_inner;
using wfk::l2_inner_quadrature;
using wfk::make_params;
using wfk::ParamMismatchError;
using wfk::rkhs_inner;
using wfk::rkhs_norm;
using wfk::rkhs_norm_sq;
using wfk::RkhsFunction;
using wfk::sup_norm_bracket;

namespace {

RkhsFunction random_table(const wfk::WeierstrassParams& p, int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> c(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n));
    for (double& v : c) v = d(rng);
    for (double& v : s) v = d(rng);
    return RkhsFunction(p, std::move(c), std::move(s));
}

} // namespace

TEST_CASE("basis functions") {
    const auto p = make_params(0.5, 3);
    const auto psi0 = basis_function(p, 0);
    CHECK(psi0.cos_coeffs == std::vector<double>{1.0});
    CHECK(psi0.sin_coeffs == std::vector<double>{0.0});
    CHECK(evaluate(psi0, 0.0) == 1.0);
    CHECK(evaluate(psi0, 0.5) == 0.0); // cos(pi/2)

    // psi_4 is a * cos(b^2 pi x); the weight a^{k/2} lives in evaluation
    const auto psi4 = basis_function(p, 4);
    CHECK(psi4.cos_coeffs == std::vector<double>{0.0, 0.0, 1.0});
    CHECK(std::fabs(evaluate(psi4, 0.0) - 0.5) <= 1e-15);

    for (int j = 0; j <= 9; ++j) {
        CHECK(rkhs_norm(basis_function(p, j)) == 1.0);
        for (int l = 0; l < j; ++l) {
            CHECK(rkhs_inner(basis_function(p, j), basis_function(p, l)) == 0.0);
        }
    }
    CHECK_THROWS_AS(basis_function(p, -1), DomainError);
}

TEST_CASE("kernel sections") {
    const auto p = make_params(0.5, 3);
    const auto sec = kernel_section(p, 0.0, 3);
    REQUIRE(sec.length() == 3);
    CHECK(sec.cos_coeffs[0] == 1.0);
    CHECK(sec.cos_coeffs[1] == std::sqrt(0.5));
    CHECK(std::fabs(sec.cos_coeffs[2] - 0.5) <= 1e-15);
    CHECK(sec.sin_coeffs == std::vector<double>{0.0, 0.0, 0.0});

    for (int n : {1, 5, 20, 40}) {
        const auto s = kernel_section(p, 0.37, n);
        const double want = (1.0 - std::pow(0.5, n)) / 0.5;
        CHECK(rkhs_norm_sq(s) == doctest::Approx(want).epsilon(1e-13));
    }
    // tends to the embedding norm 1/(1-a)
    CHECK(rkhs_norm_sq(kernel_section(p, -0.2, 60)) == doctest::Approx(2.0).epsilon(1e-14));

    CHECK_THROWS_AS(kernel_section(p, 1.2, 3), DomainError);
    CHECK_THROWS_AS(kernel_section(p, 0.0, 0), DomainError);
}

TEST_CASE("reproducing identity") {
    std::mt19937_64 rng(21);
    for (const auto& [a, b] : {std::pair{0.5, 3}, std::pair{0.9, 2}}) {
        const auto p = make_params(a, b);
        for (int round = 0; round < 20; ++round) {
            const auto f = random_table(p, 12, rng);
            for (int g = 0; g <= 24; ++g) {
                const double x = -1.0 + g / 12.0;
                const double lhs = evaluate(f, x);
                const double rhs = rkhs_inner(f, kernel_section(p, x, 12));
                CHECK(std::fabs(lhs - rhs) <= 1e-12);
            }
        }
    }
}

TEST_CASE("native inner product is bilinear and definite") {
    const auto p = make_params(0.5, 3);
    std::mt19937_64 rng(22);
    for (int round = 0; round < 50; ++round) {
        const auto f = random_table(p, 7, rng);
        const auto g = random_table(p, 4, rng); // shorter: zero padding path
        const auto h = random_table(p, 7, rng);
        RkhsFunction fg(p, f.cos_coeffs, f.sin_coeffs);
        for (int k = 0; k < fg.length(); ++k) {
            const auto u = static_cast<std::size_t>(k);
            fg.cos_coeffs[u] = 2.0 * f.cos_coeffs[u] + (k < g.length() ? g.cos_coeffs[u] : 0.0);
            fg.sin_coeffs[u] = 2.0 * f.sin_coeffs[u] + (k < g.length() ? g.sin_coeffs[u] : 0.0);
        }
        CHECK(rkhs_inner(fg, h) ==
              doctest::Approx(2.0 * rkhs_inner(f, h) + rkhs_inner(g, h)).epsilon(1e-12));
    }
    const RkhsFunction zero(p, {0.0, 0.0, 0.0}, {});
    CHECK(rkhs_norm_sq(zero) == 0.0);
    CHECK(zero.length() == 3); // padded

    const auto q = make_params(0.5, 2);
    CHECK_THROWS_AS(rkhs_inner(basis_function(p, 0), basis_function(q, 0)), ParamMismatchError);
}

TEST_CASE("closed-form L2 inner product") {
    const auto p = make_params(0.5, 3);
    CHECK(l2_inner(basis_function(p, 4), basis_function(p, 4)) == 0.25); // a^k, k = 2
    CHECK(l2_inner(basis_function(p, 0), basis_function(p, 2)) == 0.0);
    CHECK(std::fabs(l2_inner_quadrature(basis_function(p, 0), basis_function(p, 2), 1e-11)) <=
          1e-9);

    std::mt19937_64 rng(23);
    for (int round = 0; round < 15; ++round) {
        const auto f = random_table(p, 4, rng);
        const auto g = random_table(p, 4, rng);
        const double closed = l2_inner(f, g);
        CHECK(std::fabs(closed - l2_inner_quadrature(f, g, 1e-10)) <= 1e-8);
        CHECK(closed * closed <= l2_inner(f, f) * l2_inner(g, g) * (1.0 + 1e-12));
    }
    const auto q = make_params(0.5, 2);
    CHECK_THROWS_AS(l2_inner(basis_function(p, 0), basis_function(q, 0)), ParamMismatchError);
}

TEST_CASE("sup norm brackets") {
    const auto p = make_params(0.5, 3);
    const auto psi0 = basis_function(p, 0);
    CHECK(wfk::derivative_bound(psi0) == doctest::Approx(3.14159265358979324).epsilon(1e-15));

    const auto b = sup_norm_bracket(psi0, 10001);
    CHECK(b.lower == 1.0); // attained at the grid endpoints
    CHECK(b.upper - b.lower <= 3.1415927e-4 * 2.0);
    CHECK(b.lower <= b.upper);

    const RkhsFunction zero(p, {0.0}, {0.0});
    const auto zb = sup_norm_bracket(zero, 11);
    CHECK(zb.lower == 0.0);
    CHECK(zb.upper == 0.0);

    CHECK_THROWS_AS(sup_norm_bracket(psi0, 1), DomainError);

    // nested refinement: the finer bracket sits inside the coarser one and
    // the certified width L*h/2 halves exactly with the grid step
    std::mt19937_64 rng(24);
    for (int round = 0; round < 10; ++round) {
        const auto f = random_table(p, 4, rng);
        int g = 201;
        auto coarse = sup_norm_bracket(f, g);
        for (int level = 0; level < 3; ++level) {
            g = 2 * g - 1;
            const auto fine = sup_norm_bracket(f, g);
            CHECK(fine.lower >= coarse.lower);
            CHECK(fine.upper <= coarse.upper);
            CHECK(fine.lower <= coarse.upper);
            CHECK(fine.upper - fine.lower ==
                  doctest::Approx(0.5 * (coarse.upper - coarse.lower)).epsilon(1e-12));
            coarse = fine;
        }
    }
}

TEST_CASE("evaluation respects the domain") {
    const auto p = make_params(0.5, 3);
    CHECK_THROWS_AS(evaluate(basis_function(p, 0), 1.01), DomainError);
}

TEST_CASE("point evaluation is controlled by the embedding norm") {
    const auto p = make_params(0.5, 3);
    std::mt19937_64 rng(26);
    std::uniform_real_distribution<double> xd(-1.0, 1.0);
    const double emb = std::sqrt(2.0); // (1/(1-a))^{1/2}
    for (int round = 0; round < 100; ++round) {
        const auto f = random_table(p, 8, rng);
        const double x = xd(rng);
        CHECK(std::fabs(evaluate(f, x)) <= rkhs_norm(f) * emb * (1.0 + 1e-12));
    }
}

TEST_CASE("json round trip") {
    const auto p = make_params(0.9, 2);
    std::mt19937_64 rng(25);
    for (int round = 0; round < 20; ++round) {
        const auto f = random_table(p, 6, rng);
        const auto back = wfk::rkhs_from_json_string(wfk::to_json_string(f));
        CHECK(back.params == f.params);
        CHECK(back.cos_coeffs == f.cos_coeffs);
        CHECK(back.sin_coeffs == f.sin_coeffs);
    }
    const auto j = wfk::to_json(basis_function(p, 1));
    CHECK(j.at("a") == 0.9);
    CHECK(j.at("b") == 2);
    CHECK(j.at("sin_coeffs") == std::vector<double>{1.0});
}
