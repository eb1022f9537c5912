#include "wfk/rkhs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "wfk/phase.hpp"

namespace wfk {

RkhsFunction::RkhsFunction(WeierstrassParams p, std::vector<double> cos_c,
                           std::vector<double> sin_c)
    : params(p), cos_coeffs(std::move(cos_c)), sin_coeffs(std::move(sin_c)) {
    const std::size_t n = std::max<std::size_t>(1, std::max(cos_coeffs.size(), sin_coeffs.size()));
    cos_coeffs.resize(n, 0.0);
    sin_coeffs.resize(n, 0.0);
}

RkhsFunction basis_function(const WeierstrassParams& params, int j) {
    if (j < 0) throw DomainError("basis index must be >= 0");
    const int k = j / 2;
    std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
    std::vector<double> s(static_cast<std::size_t>(k) + 1, 0.0);
    if (j % 2 == 0) {
        c[static_cast<std::size_t>(k)] = 1.0;
    } else {
        s[static_cast<std::size_t>(k)] = 1.0;
    }
    return RkhsFunction(params, std::move(c), std::move(s));
}

RkhsFunction kernel_section(const WeierstrassParams& params, double x, int order) {
    if (std::fabs(x) > 1.0) throw DomainError("kernel section point must lie in [-1, 1]");
    if (order < 1) throw DomainError("kernel section order must be >= 1");
    const TrigTable t = trig_table(x, params.b(), order);
    std::vector<double> c(static_cast<std::size_t>(order));
    std::vector<double> s(static_cast<std::size_t>(order));
    const double root_a = std::sqrt(params.a());
    double w = 1.0; // a^{n/2}
    for (int n = 0; n < order; ++n) {
        c[static_cast<std::size_t>(n)] = w * t.cos_v[static_cast<std::size_t>(n)];
        s[static_cast<std::size_t>(n)] = w * t.sin_v[static_cast<std::size_t>(n)];
        w *= root_a;
    }
    return RkhsFunction(params, std::move(c), std::move(s));
}

namespace {

void require_same_params(const RkhsFunction& f, const RkhsFunction& g) {
    if (!(f.params == g.params)) {
        throw ParamMismatchError("functions were built over different (a, b) parameters");
    }
}

} // namespace

double rkhs_inner(const RkhsFunction& f, const RkhsFunction& g) {
    require_same_params(f, g);
    const int n = std::min(f.length(), g.length());
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        acc += f.cos_coeffs[u] * g.cos_coeffs[u] + f.sin_coeffs[u] * g.sin_coeffs[u];
    }
    return acc;
}

double rkhs_norm_sq(const RkhsFunction& f) { return rkhs_inner(f, f); }

double rkhs_norm(const RkhsFunction& f) { return std::sqrt(rkhs_norm_sq(f)); }

double evaluate(const RkhsFunction& f, double x) {
    if (std::fabs(x) > 1.0) throw DomainError("evaluation point must lie in [-1, 1]");
    const int n = f.length();
    PhaseSequence seq(x, f.params.b());
    const double root_a = std::sqrt(f.params.a());
    double acc = 0.0;
    double w = 1.0;
    for (int i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        const auto [cv, sv] = cos_sin_pi(seq.current());
        acc += w * (f.cos_coeffs[u] * cv + f.sin_coeffs[u] * sv);
        w *= root_a;
        seq.advance();
    }
    return acc;
}

double l2_inner(const RkhsFunction& f, const RkhsFunction& g) {
    require_same_params(f, g);
    const int n = std::min(f.length(), g.length());
    double acc = 0.0;
    double an = 1.0;
    for (int i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        acc += an * (f.cos_coeffs[u] * g.cos_coeffs[u] + f.sin_coeffs[u] * g.sin_coeffs[u]);
        an *= f.params.a();
    }
    return acc;
}

double derivative_bound(const RkhsFunction& f) {
    const int n = f.length();
    double acc = 0.0;
    double w = 1.0;  // a^{n/2}
    double bn = 1.0; // b^n
    const double root_a = std::sqrt(f.params.a());
    for (int i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        acc += w * bn * (std::fabs(f.cos_coeffs[u]) + std::fabs(f.sin_coeffs[u]));
        w *= root_a;
        bn *= static_cast<double>(f.params.b());
    }
    return std::numbers::pi * acc;
}

SupNormBracket sup_norm_bracket(const RkhsFunction& f, int grid_count) {
    if (grid_count < 2) throw DomainError("sup norm bracket needs at least 2 grid points");
    const double h = 2.0 / (grid_count - 1);
    double best = 0.0;
    for (int i = 0; i < grid_count; ++i) {
        const double x = (i == grid_count - 1) ? 1.0 : -1.0 + h * i;
        best = std::max(best, std::fabs(evaluate(f, x)));
    }
    return SupNormBracket{best, best + derivative_bound(f) * h * 0.5};
}

nlohmann::json to_json(const RkhsFunction& f) {
    return nlohmann::json{{"a", f.params.a()},
                          {"b", f.params.b()},
                          {"cos_coeffs", f.cos_coeffs},
                          {"sin_coeffs", f.sin_coeffs}};
}

RkhsFunction rkhs_from_json(const nlohmann::json& j) {
    const auto params = make_params(j.at("a").get<double>(), j.at("b").get<int>());
    return RkhsFunction(params, j.at("cos_coeffs").get<std::vector<double>>(),
                        j.at("sin_coeffs").get<std::vector<double>>());
}

std::string to_json_string(const RkhsFunction& f) { return to_json(f).dump(); }

RkhsFunction rkhs_from_json_string(const std::string& text) {
    return rkhs_from_json(nlohmann::json::parse(text));
}

} // namespace wfk
