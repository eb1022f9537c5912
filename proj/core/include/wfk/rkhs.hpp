#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wfk/params.hpp"

namespace wfk {

/// Element of the kernel's Hilbert space as a finite coefficient table
/// against the orthonormal basis {a^{n/2} cos(b^n pi .), a^{n/2} sin(b^n pi .)}:
///
///   f(x) = sum_{n < N} a^{n/2} [ cos_coeffs[n] cos(b^n pi x)
///                              + sin_coeffs[n] sin(b^n pi x) ].
///
/// The a^{n/2} basis weight is applied at evaluation time, never stored, so
/// the native norm of f is the plain Euclidean norm of the table. Tables of
/// different lengths combine by zero-padding the shorter one.
struct RkhsFunction {
    WeierstrassParams params;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;

    /// Pads the shorter table with zeros so both always have equal length >= 1.
    RkhsFunction(WeierstrassParams p, std::vector<double> cos_c, std::vector<double> sin_c);

    int length() const noexcept { return static_cast<int>(cos_coeffs.size()); }
};

/// j-th orthonormal basis element: a unit coefficient at position k = j/2,
/// cosine side for even j, sine side for odd j.
RkhsFunction basis_function(const WeierstrassParams& params, int j);

/// Coefficient table of the kernel section W(x, .) truncated at N terms:
/// cos_coeffs[n] = a^{n/2} cos(b^n pi x), sin_coeffs[n] = a^{n/2} sin(b^n pi x).
/// Throws DomainError if x is outside [-1, 1] or N < 1.
RkhsFunction kernel_section(const WeierstrassParams& params, double x, int order);

/// Native inner product: plain dot product of the coefficient tables
/// (shorter table zero-padded). Throws ParamMismatchError if (a, b) differ.
double rkhs_inner(const RkhsFunction& f, const RkhsFunction& g);

double rkhs_norm_sq(const RkhsFunction& f);
double rkhs_norm(const RkhsFunction& f);

/// Pointwise value of f at x in [-1, 1]. Throws DomainError outside.
double evaluate(const RkhsFunction& f, double x);

/// L2([-1, 1], dx) inner product in closed form. Distinct frequencies b^n
/// are orthogonal on [-1, 1] and each squared basis-term integral is 1, so
/// the value is sum_n a^n (c_n e_n + d_n f_n). Throws ParamMismatchError.
double l2_inner(const RkhsFunction& f, const RkhsFunction& g);

/// Lipschitz bound for the truncated series:
/// L = pi * sum_n a^{n/2} b^n (|c_n| + |d_n|) >= sup |f'|.
double derivative_bound(const RkhsFunction& f);

struct SupNormBracket {
    double lower; // max |f| over the sample grid
    double upper; // lower + L*h/2, a certified bound on the true sup norm
};

/// Two-sided bracket of the sup norm of f on [-1, 1] from a uniform grid of
/// grid_count points (endpoints included, spacing h = 2/(grid_count - 1)).
/// Throws DomainError if grid_count < 2.
SupNormBracket sup_norm_bracket(const RkhsFunction& f, int grid_count);

/// JSON round-trip as {"a": ..., "b": ..., "cos_coeffs": [...], "sin_coeffs": [...]}.
nlohmann::json to_json(const RkhsFunction& f);
RkhsFunction rkhs_from_json(const nlohmann::json& j);
std::string to_json_string(const RkhsFunction& f);
RkhsFunction rkhs_from_json_string(const std::string& text);

} // namespace wfk
