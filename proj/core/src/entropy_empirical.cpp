#include "wfk/entropy_empirical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "wfk/parallel.hpp"
#include "wfk/phase.hpp"
#include "wfk/projections.hpp"
#include "wfk/random.hpp"
#include "wfk/text.hpp"

namespace wfk {
namespace {

// Grid convention shared with sup_norm_bracket: endpoints included,
// x_g = -1 + g h with the last point pinned to 1 exactly.
double grid_point(int g, int grid_count, double h) {
    return (g == grid_count - 1) ? 1.0 : -1.0 + h * g;
}

// cos/sin basis rows scaled by a^{k/2}, stored grid-major so the inner
// evaluation loop runs over contiguous memory.
struct BasisGrid {
    int order;
    int grid_count;
    double h;
    std::vector<double> cos_v; // [g * order + k]
    std::vector<double> sin_v;
};

BasisGrid basis_grid(const WeierstrassParams& params, int order, int grid_count) {
    BasisGrid b;
    b.order = order;
    b.grid_count = grid_count;
    b.h = 2.0 / (grid_count - 1);
    b.cos_v.resize(static_cast<std::size_t>(order) * grid_count);
    b.sin_v.resize(static_cast<std::size_t>(order) * grid_count);
    const double root_a = std::sqrt(params.a());
    for (int g = 0; g < grid_count; ++g) {
        PhaseSequence seq(grid_point(g, grid_count, b.h), params.b());
        double w = 1.0;
        for (int k = 0; k < order; ++k) {
            auto [cv, sv] = cos_sin_pi(seq.current());
            b.cos_v[static_cast<std::size_t>(g) * order + k] = w * cv;
            b.sin_v[static_cast<std::size_t>(g) * order + k] = w * sv;
            w *= root_a;
            seq.advance();
        }
    }
    return b;
}

// Coefficients of the sample set as dense row-major tables, zero-padded to
// a common order.
struct CoeffTable {
    int count;
    int order;
    std::vector<double> cos_c; // [i * order + k]
    std::vector<double> sin_c;
};

CoeffTable coeff_table(const std::vector<RkhsFunction>& functions) {
    CoeffTable t;
    t.count = static_cast<int>(functions.size());
    t.order = 1;
    for (const auto& f : functions) t.order = std::max(t.order, f.length());
    t.cos_c.assign(static_cast<std::size_t>(t.count) * t.order, 0.0);
    t.sin_c.assign(static_cast<std::size_t>(t.count) * t.order, 0.0);
    for (int i = 0; i < t.count; ++i) {
        const auto& f = functions[static_cast<std::size_t>(i)];
        std::copy(f.cos_coeffs.begin(), f.cos_coeffs.end(),
                  t.cos_c.begin() + static_cast<std::ptrdiff_t>(i) * t.order);
        std::copy(f.sin_coeffs.begin(), f.sin_coeffs.end(),
                  t.sin_c.begin() + static_cast<std::ptrdiff_t>(i) * t.order);
    }
    return t;
}

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

std::vector<RkhsFunction> sample_unit_ball(const WeierstrassParams& params, int order, int count,
                                           std::uint64_t seed) {
    if (order < 1) throw DomainError("sample order must be >= 1");
    if (count < 1) throw DomainError("sample count must be >= 1");
    Rng rng(seed);
    std::vector<RkhsFunction> out;
    out.reserve(static_cast<std::size_t>(count));
    const int dim = 2 * order;
    std::vector<double> z(static_cast<std::size_t>(dim));
    for (int i = 0; i < count; ++i) {
        double norm_sq = 0.0;
        for (double& v : z) {
            v = rng.gaussian();
            norm_sq += v * v;
        }
        const double norm = std::sqrt(norm_sq);
        const double radius = std::pow(rng.uniform01(), 1.0 / dim);
        const double scale = norm > 0.0 ? radius / norm : 0.0;
        std::vector<double> c(z.begin(), z.begin() + order);
        std::vector<double> s(z.begin() + order, z.end());
        for (double& v : c) v *= scale;
        for (double& v : s) v *= scale;
        out.emplace_back(params, std::move(c), std::move(s));
    }
    return out;
}

DistanceBrackets pairwise_sup_distances(const std::vector<RkhsFunction>& functions, int grid_count,
                                        int workers) {
    if (grid_count < 2) throw DomainError("distance grid needs at least 2 points");
    const auto n = static_cast<int>(functions.size());
    for (const auto& f : functions) {
        if (!(f.params == functions.front().params)) {
            throw ParamMismatchError("functions were built over different (a, b) parameters");
        }
    }
    DistanceBrackets d;
    d.lower = Eigen::MatrixXd::Zero(n, n);
    d.upper = Eigen::MatrixXd::Zero(n, n);
    if (n == 0) return d;

    const WeierstrassParams& params = functions.front().params;
    const CoeffTable coeffs = coeff_table(functions);
    const int order = coeffs.order;
    const BasisGrid basis = basis_grid(params, order, grid_count);

    // Values of every function on the grid, row-major.
    std::vector<double> values(static_cast<std::size_t>(n) * grid_count);
    parallel_for(static_cast<std::size_t>(n), workers, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const double* c = &coeffs.cos_c[i * static_cast<std::size_t>(order)];
            const double* s = &coeffs.sin_c[i * static_cast<std::size_t>(order)];
            double* row = &values[i * static_cast<std::size_t>(grid_count)];
            for (int g = 0; g < grid_count; ++g) {
                const double* bc = &basis.cos_v[static_cast<std::size_t>(g) * order];
                const double* bs = &basis.sin_v[static_cast<std::size_t>(g) * order];
                double acc = 0.0;
                for (int k = 0; k < order; ++k) acc += c[k] * bc[k] + s[k] * bs[k];
                row[g] = acc;
            }
        }
    });

    // Lipschitz weights pi a^{k/2} b^k for the per-pair derivative bound.
    std::vector<double> lip(static_cast<std::size_t>(order));
    {
        const double root_a = std::sqrt(params.a());
        double w = std::numbers::pi;
        for (int k = 0; k < order; ++k) {
            lip[static_cast<std::size_t>(k)] = w;
            w *= root_a * params.b();
        }
    }

    // Pair work in 8x8 row blocks so both operand rows stay cache-resident;
    // blocks are striped over workers and every (i, j) slot has exactly one
    // writer, so the result is independent of the worker count.
    const int block = 8;
    const int nblocks = (n + block - 1) / block;
    const int n_workers = std::min(resolve_workers(workers), nblocks);
    auto run_stripe = [&](int stripe) {
        for (int ib = stripe; ib < nblocks; ib += n_workers) {
            const int i_end = std::min(n, (ib + 1) * block);
            for (int jb = ib; jb < nblocks; ++jb) {
                const int j_end = std::min(n, (jb + 1) * block);
                for (int i = ib * block; i < i_end; ++i) {
                    const double* vi = &values[static_cast<std::size_t>(i) * grid_count];
                    const double* ci = &coeffs.cos_c[static_cast<std::size_t>(i) * order];
                    const double* si = &coeffs.sin_c[static_cast<std::size_t>(i) * order];
                    for (int j = std::max(jb * block, i + 1); j < j_end; ++j) {
                        const double* vj = &values[static_cast<std::size_t>(j) * grid_count];
                        double lo_d = 0.0;
                        for (int g = 0; g < grid_count; ++g) {
                            lo_d = std::max(lo_d, std::fabs(vi[g] - vj[g]));
                        }
                        const double* cj = &coeffs.cos_c[static_cast<std::size_t>(j) * order];
                        const double* sj = &coeffs.sin_c[static_cast<std::size_t>(j) * order];
                        double lip_sum = 0.0;
                        for (int k = 0; k < order; ++k) {
                            lip_sum += lip[static_cast<std::size_t>(k)] *
                                       (std::fabs(ci[k] - cj[k]) + std::fabs(si[k] - sj[k]));
                        }
                        const double up_d = lo_d + lip_sum * basis.h * 0.5;
                        d.lower(i, j) = lo_d;
                        d.lower(j, i) = lo_d;
                        d.upper(i, j) = up_d;
                        d.upper(j, i) = up_d;
                    }
                }
            }
        }
    };
    if (n_workers <= 1) {
        run_stripe(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(run_stripe, w);
        for (auto& t : pool) t.join();
    }
    return d;
}

PackingResult greedy_packing(const Eigen::MatrixXd& distance_lowers, double eps) {
    if (distance_lowers.rows() != distance_lowers.cols()) {
        throw DomainError("distance matrix must be square");
    }
    if (!(eps > 0.0)) throw DomainError("packing eps must be > 0");
    const auto n = static_cast<int>(distance_lowers.rows());
    PackingResult result;
    result.separation = 2.0 * eps;
    result.cardinality = 0;
    if (n == 0) return result;

    std::vector<double> min_dist(static_cast<std::size_t>(n),
                                 std::numeric_limits<double>::infinity());
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    while (true) {
        int best = -1;
        double best_d = -1.0;
        for (int i = 0; i < n; ++i) {
            if (taken[static_cast<std::size_t>(i)]) continue;
            if (min_dist[static_cast<std::size_t>(i)] > best_d) {
                best_d = min_dist[static_cast<std::size_t>(i)];
                best = i;
            }
        }
        if (best < 0 || !(best_d > result.separation)) break;
        taken[static_cast<std::size_t>(best)] = 1;
        result.center_indices.push_back(best);
        for (int i = 0; i < n; ++i) {
            if (taken[static_cast<std::size_t>(i)]) continue;
            min_dist[static_cast<std::size_t>(i)] =
                std::min(min_dist[static_cast<std::size_t>(i)], distance_lowers(best, i));
        }
    }
    result.cardinality = static_cast<int>(result.center_indices.size());
    return result;
}

namespace {

struct NetGeometry {
    double delta;
    double radius;     // kept-ball radius, 1 + sqrt(2N) delta / 2
    double radius_sq_scaled; // (radius/delta)^2, nodes satisfy sum k^2 <= this
    long long kmax;
};

NetGeometry net_geometry(const WeierstrassParams& params, int order, double eps) {
    const double op = std::sqrt(projection_split(params, order).head_norm_sq);
    const double root_dim = std::sqrt(2.0 * order);
    const double delta = eps / (2.0 * root_dim * op);
    const double radius = 1.0 + root_dim * delta / 2.0;
    const double t = radius / delta;
    return NetGeometry{delta, radius, t * t, static_cast<long long>(std::floor(t))};
}

// Nodes of the integer lattice with sum k_i^2 <= t2, enumerated dimension
// by dimension with the last axis counted in closed form. The partial sum
// of squares stays integer-valued (exact in a double), so membership is
// always the single comparison sum <= t2. Visits roughly count/axis nodes,
// far below the full grid.
unsigned long long count_lattice(int dims_left, double partial, double t2) {
    if (partial > t2) return 0;
    if (dims_left == 1) {
        auto k = static_cast<long long>(std::floor(std::sqrt(std::max(0.0, t2 - partial))));
        while (partial + static_cast<double>((k + 1) * (k + 1)) <= t2) ++k;
        while (k > 0 && partial + static_cast<double>(k * k) > t2) --k;
        return static_cast<unsigned long long>(2 * k + 1);
    }
    unsigned long long total = count_lattice(dims_left - 1, partial, t2); // k = 0
    for (long long k = 1;; ++k) {
        const double next = partial + static_cast<double>(k * k);
        if (next > t2) break;
        total += 2 * count_lattice(dims_left - 1, next, t2);
    }
    return total;
}

} // namespace

CoverDescription head_cover(const WeierstrassParams& params, int order, double eps) {
    if (order < 1) throw DomainError("cover order must be >= 1");
    if (!(eps > 0.0)) throw DomainError("cover eps must be > 0");
    const NetGeometry geo = net_geometry(params, order, eps);
    const int dim = 2 * order;
    const double axis = static_cast<double>(2 * geo.kmax + 1);
    CoverDescription cover;
    cover.net_spacing = geo.delta;
    cover.dimension = dim;
    cover.tail_radius = mu_tail(params, order);
    // Exact enumeration while the bounding grid stays small; otherwise the
    // certified per-axis product bound (grid cap 2^28 nodes).
    if (dim * std::log(axis) <= 28.0 * std::numbers::ln2) {
        const unsigned long long nodes = count_lattice(dim, 0.0, geo.radius_sq_scaled);
        cover.cover_size_ln = std::log(static_cast<double>(nodes));
        cover.count_is_exact = true;
    } else {
        cover.cover_size_ln = dim * std::log(axis);
        cover.count_is_exact = false;
    }
    return cover;
}

CoverDescription constructive_cover(const WeierstrassParams& params, double eps) {
    if (!(eps > 0.0)) throw DomainError("cover eps must be > 0");
    const double full_norm = mu_tail(params, 0);
    if (eps >= full_norm) {
        // The whole image sits inside one eps-ball around the origin.
        return CoverDescription{0.0, 0, 0.0, full_norm, true};
    }
    return head_cover(params, choose_truncation(params, eps), eps);
}

CoverageCheck cover_coverage_check(const WeierstrassParams& params, int order, double eps,
                                   int samples, std::uint64_t seed, int grid_count) {
    if (samples < 1) throw DomainError("coverage check needs at least 1 sample");
    if (grid_count < 2) throw DomainError("coverage grid needs at least 2 points");
    const NetGeometry geo = net_geometry(params, order, eps);
    const BasisGrid basis = basis_grid(params, order, grid_count);
    const int dim = 2 * order;

    std::vector<double> lip(static_cast<std::size_t>(order));
    {
        const double root_a = std::sqrt(params.a());
        double w = std::numbers::pi;
        for (int k = 0; k < order; ++k) {
            lip[static_cast<std::size_t>(k)] = w;
            w *= root_a * params.b();
        }
    }

    Rng rng(seed);
    std::vector<double> z(static_cast<std::size_t>(dim));
    std::vector<double> diff(static_cast<std::size_t>(dim));
    CoverageCheck check{samples, 0, 0.0};
    for (int s = 0; s < samples; ++s) {
        double norm_sq = 0.0;
        for (double& v : z) {
            v = rng.gaussian();
            norm_sq += v * v;
        }
        const double norm = std::sqrt(norm_sq);
        const double radius = std::pow(rng.uniform01(), 1.0 / dim);
        const double scale = norm > 0.0 ? radius / norm : 0.0;
        double node_k_sq = 0.0; // integer lattice coordinates, squared sum
        for (int k = 0; k < dim; ++k) {
            const double coeff = z[static_cast<std::size_t>(k)] * scale;
            const double kk = std::nearbyint(coeff / geo.delta);
            diff[static_cast<std::size_t>(k)] = coeff - geo.delta * kk;
            node_k_sq += kk * kk;
        }
        // Grid max of the image of the rounding error, plus the Lipschitz
        // slack, certifies the sup distance to the chosen net point.
        double grid_max = 0.0;
        for (int g = 0; g < grid_count; ++g) {
            const double* bc = &basis.cos_v[static_cast<std::size_t>(g) * order];
            const double* bs = &basis.sin_v[static_cast<std::size_t>(g) * order];
            double acc = 0.0;
            for (int k = 0; k < order; ++k) {
                acc += diff[static_cast<std::size_t>(k)] * bc[k] +
                       diff[static_cast<std::size_t>(order + k)] * bs[k];
            }
            grid_max = std::max(grid_max, std::fabs(acc));
        }
        double lip_sum = 0.0;
        for (int k = 0; k < order; ++k) {
            lip_sum += lip[static_cast<std::size_t>(k)] *
                       (std::fabs(diff[static_cast<std::size_t>(k)]) +
                        std::fabs(diff[static_cast<std::size_t>(order + k)]));
        }
        const double upper = grid_max + lip_sum * basis.h * 0.5;
        check.worst_upper_bracket = std::max(check.worst_upper_bracket, upper);
        // Same lattice membership test the node count uses.
        const bool node_in_net = node_k_sq <= geo.radius_sq_scaled;
        if (node_in_net && upper <= eps) ++check.covered;
    }
    return check;
}

std::vector<EmpiricalRow> empirical_report(const WeierstrassParams& params,
                                           std::span<const double> eps_list, int order,
                                           int samples, int grid_count, std::uint64_t seed,
                                           int workers) {
    if (order < 1 || 2 * order > kMaxEmpiricalDimension) {
        std::ostringstream msg;
        msg << "empirical runs require 1 <= N and 2N <= " << kMaxEmpiricalDimension
            << " (got N = " << order << "); lower --trunc-N";
        throw DomainError(msg.str());
    }
    if (samples < 1 || samples > kMaxEmpiricalSamples) {
        std::ostringstream msg;
        msg << "empirical runs require 1 <= samples <= " << kMaxEmpiricalSamples << " (got "
            << samples << "); pairwise distance work is quadratic in samples";
        throw DomainError(msg.str());
    }
    if (eps_list.empty()) throw DomainError("eps list must not be empty");

    const std::vector<RkhsFunction> pool = sample_unit_ball(params, order, samples, seed);
    const DistanceBrackets dist = pairwise_sup_distances(pool, grid_count, workers);

    std::vector<EmpiricalRow> rows;
    rows.reserve(eps_list.size());
    for (double eps : eps_list) {
        EmpiricalRow row;
        row.bounds = make_bound_report(params, eps);
        row.empirical_lower_ln =
            std::log(static_cast<double>(greedy_packing(dist.lower, eps).cardinality));
        row.cover_size_ln = head_cover(params, order, eps).cover_size_ln;
        row.samples = samples;
        row.grid_count = grid_count;
        row.seed = seed;
        rows.push_back(row);
    }
    return rows;
}

std::string empirical_csv_header() {
    return bound_csv_header() + ",empirical_lower_ln,cover_size_ln,samples,grid_count,seed";
}

std::string empirical_csv_row(const EmpiricalRow& row) {
    std::string out = bound_csv_row(row.bounds);
    out += ',';
    out += format_real(row.empirical_lower_ln);
    out += ',';
    out += format_real(row.cover_size_ln);
    out += ',';
    out += std::to_string(row.samples);
    out += ',';
    out += std::to_string(row.grid_count);
    out += ',';
    out += std::to_string(row.seed);
    return out;
}

nlohmann::json empirical_to_json(const EmpiricalRow& row) {
    nlohmann::json j = bound_to_json(row.bounds);
    j["empirical_lower_ln"] = row.empirical_lower_ln;
    j["cover_size_ln"] = row.cover_size_ln;
    j["samples"] = row.samples;
    j["grid_count"] = row.grid_count;
    j["seed"] = row.seed;
    return j;
}

} // namespace wfk
