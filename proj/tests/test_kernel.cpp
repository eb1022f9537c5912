#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "wfk/kernel.hpp"
#include "wfk/phase.hpp"

using wfk::DomainError;
using wfk::eval_kernel;
using wfk::eval_weierstrass;
using wfk::gram_matrix;
using wfk::make_params;
using wfk::partial_sum;

namespace {

// Exact phase oracle for dyadic x = num/2^m: b^n x mod 2 equals
// ((b^n mod 2^{m+1}) * num mod 2^{m+1}) / 2^m, all computed in integers.
double exact_dyadic_phase(std::uint64_t num, int m, int b, int n) {
    const auto mod = static_cast<unsigned __int128>(1) << (m + 1);
    unsigned __int128 pow_b = 1;
    for (int i = 0; i < n; ++i) pow_b = (pow_b * static_cast<unsigned>(b)) % mod;
    const auto phase_num = static_cast<std::uint64_t>((pow_b * num) % mod);
    return std::ldexp(static_cast<double>(phase_num), -m);
}

double wrap_gap(double u, double v) {
    double d = std::fabs(u - v);
    return std::min(d, std::fabs(d - 2.0));
}

} // namespace

TEST_CASE("phase recursion matches the exact dyadic oracle, b = 3") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        const int m = 1 + static_cast<int>(rng() % 40);
        const std::uint64_t num = rng() % (static_cast<std::uint64_t>(1) << (m + 1));
        const double x = std::ldexp(static_cast<double>(num), -m);
        const auto phases = wfk::phase_table(x, 3, 41);
        for (int n = 0; n <= 40; ++n) {
            const double exact = exact_dyadic_phase(num, m, 3, n);
            const double got = phases[static_cast<std::size_t>(n)].hi +
                               phases[static_cast<std::size_t>(n)].lo;
            // double-double drift is ~3^n * 2^-106
            const double slack = 1e-15 + std::pow(3.0, n) * 0x1.0p-100;
            CHECK(wrap_gap(got, exact) <= slack);
        }
    }
}

TEST_CASE("phase recursion is exact for b = 2") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 30; ++round) {
        const int m = 1 + static_cast<int>(rng() % 50);
        const std::uint64_t num = rng() % (static_cast<std::uint64_t>(1) << (m + 1));
        const double x = std::ldexp(static_cast<double>(num), -m);
        const auto phases = wfk::phase_table(x, 2, 200);
        for (int n = 0; n < 200; ++n) {
            const double exact = exact_dyadic_phase(num, m, 2, n);
            CHECK(phases[static_cast<std::size_t>(n)].hi +
                      phases[static_cast<std::size_t>(n)].lo ==
                  exact);
        }
    }
}

TEST_CASE("half-integer phases give exact trig values") {
    auto cs = wfk::cos_sin_pi(wfk::Phase{0.5, 0.0});
    CHECK(cs.first == 0.0);
    CHECK(cs.second == 1.0);
    cs = wfk::cos_sin_pi(wfk::Phase{1.0, 0.0});
    CHECK(cs.first == -1.0);
    cs = wfk::cos_sin_pi(wfk::Phase{1.5, 0.0});
    CHECK(cs.first == 0.0);
    CHECK(cs.second == -1.0);
    cs = wfk::cos_sin_pi(wfk::Phase{0.0, 0.0});
    CHECK(cs.first == 1.0);
    CHECK(cs.second == 0.0);
}

TEST_CASE("series values at rational points") {
    const auto p = make_params(0.5, 3);
    const double tol = 1e-10;
    CHECK(std::fabs(eval_weierstrass(p, 0.0, tol) - 2.0) <= tol);
    // 3^n is odd, so every cosine at x = 1 is -1
    CHECK(std::fabs(eval_weierstrass(p, 1.0, tol) + 2.0) <= tol);
    // 3^n / 2 is an odd multiple of 1/2, so every cosine at x = 1/2 vanishes
    CHECK(eval_weierstrass(p, 0.5, tol) == 0.0);
    CHECK_THROWS_AS(eval_weierstrass(p, 0.0, 0.0), DomainError);
}

TEST_CASE("series is even and bounded") {
    const auto p = make_params(0.5, 3);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 300; ++i) {
        const double x = dist(rng);
        const double v = eval_weierstrass(p, x);
        CHECK(v == eval_weierstrass(p, -x)); // exact, term by term
        CHECK(std::fabs(v) <= 2.0 + 1e-10);
    }
}

TEST_CASE("partial sums stay within the geometric tail") {
    const auto p = make_params(0.5, 3);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> xd(-1.0, 1.0);
    std::uniform_int_distribution<int> nd(1, 30);
    for (int i = 0; i < 500; ++i) {
        const double x = xd(rng);
        const int n = nd(rng);
        const int m = n + 1 + nd(rng);
        CHECK(std::fabs(partial_sum(p, x, n) - partial_sum(p, x, m)) <=
              std::pow(0.5, n) / 0.5);
    }
}

TEST_CASE("kernel examples and domain checks") {
    const auto p = make_params(0.5, 3);
    CHECK(std::fabs(eval_kernel(p, 0.7, 0.7) - 2.0) <= 1e-10);
    CHECK(eval_kernel(p, 0.25, -0.25) == 0.0); // reduces to w(1/2)
    CHECK_THROWS_AS(eval_kernel(p, 1.5, 0.0), DomainError);
    CHECK_THROWS_AS(eval_kernel(p, 0.0, -1.0001), DomainError);

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> xd(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double x = xd(rng);
        const double y = xd(rng);
        CHECK(eval_kernel(p, x, y) == eval_kernel(p, y, x)); // exact symmetry
    }
}

TEST_CASE("gram matrix examples") {
    const auto p = make_params(0.5, 3);
    const double pts1[] = {0.0};
    const Eigen::MatrixXd g1 = gram_matrix(p, pts1);
    CHECK(g1.rows() == 1);
    CHECK(std::fabs(g1(0, 0) - 2.0) <= 1e-10);

    const double pts2[] = {0.25, -0.25};
    const Eigen::MatrixXd g2 = gram_matrix(p, pts2);
    CHECK(std::fabs(g2(0, 0) - 2.0) <= 1e-10);
    CHECK(std::fabs(g2(1, 1) - 2.0) <= 1e-10);
    CHECK(g2(0, 1) == 0.0);
    CHECK(g2(1, 0) == 0.0);
}

TEST_CASE("gram matrices are positive semidefinite") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> xd(-1.0, 1.0);
    for (const auto& [a, b] : {std::pair{0.5, 3}, std::pair{0.9, 2}}) {
        const auto p = make_params(a, b);
        std::vector<double> pts(20);
        for (double& v : pts) v = xd(rng);
        const Eigen::MatrixXd g = gram_matrix(p, pts);
        CHECK((g - g.transpose()).norm() == 0.0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() >= -1e-8 * g.diagonal().maxCoeff());
    }
}

TEST_CASE("duplicate points keep the gram matrix singular but PSD") {
    const auto p = make_params(0.5, 3);
    const double pts[] = {0.3, 0.3, -0.6};
    const Eigen::MatrixXd g = gram_matrix(p, pts);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= -1e-8 * g.diagonal().maxCoeff());
    CHECK(std::fabs(g.determinant()) <= 1e-9);
}
