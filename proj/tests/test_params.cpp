#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wfk/params.hpp"

using wfk::DomainError;
using wfk::make_params;
using wfk::truncation_order;

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(make_params(0.5, 3));
    CHECK_NOTHROW(make_params(0.5, 2)); // a*b == 1 is allowed
    CHECK_THROWS_AS(make_params(0.5, 1), DomainError);
    CHECK_THROWS_AS(make_params(1.0, 3), DomainError);
    CHECK_THROWS_AS(make_params(0.0, 3), DomainError);
    CHECK_THROWS_AS(make_params(-0.2, 3), DomainError);
    CHECK_THROWS_AS(make_params(0.3, 3), DomainError);   // a*b = 0.9 < 1
    CHECK_THROWS_AS(make_params(0.9995, 2), DomainError); // above the amplitude cap

    const auto p = make_params(0.25, 4);
    CHECK(p.a() == 0.25);
    CHECK(p.b() == 4);
}

TEST_CASE("validation names the violated constraints") {
    try {
        make_params(0.5, 1);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        const std::string what = e.what();
        CHECK(what.find("b >= 2") != std::string::npos);
        CHECK(what.find("a*b >= 1") != std::string::npos);
    }
}

TEST_CASE("truncation order examples") {
    const auto p = make_params(0.5, 3);
    const auto plan = truncation_order(p, 1e-6);
    CHECK(plan.order == 21);
    CHECK(plan.tail_bound == doctest::Approx(9.5367431640625e-07).epsilon(1e-15));

    CHECK(truncation_order(p, 2.0).order == 1); // minimum order, tail a/(1-a) = 1 <= 2
    CHECK(truncation_order(p, 0.9).order == 2);

    CHECK_THROWS_AS(truncation_order(p, 0.0), DomainError);
    CHECK_THROWS_AS(truncation_order(p, -1.0), DomainError);
}

TEST_CASE("truncation order matches a linear scan") {
    // Independent oracle: smallest N >= 1 with a^N/(1-a) <= tol by direct
    // iteration.
    for (double a : {0.25, 0.5, 0.9}) {
        const auto p = make_params(a, a < 0.5 ? 4 : 2);
        for (double tol : {1e-1, 1e-3, 1e-6, 1e-10, 2.0}) {
            int n = 1;
            while (std::pow(a, n) / (1.0 - a) > tol) ++n;
            const auto plan = truncation_order(p, tol);
            CHECK(plan.order == n);
            CHECK(plan.tail_bound == std::pow(a, plan.order) / (1.0 - a));
            CHECK(plan.tail_bound <= tol);
        }
    }
}
