#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

#include "wfk/entropy_bounds.hpp"
#include "wfk/rkhs.hpp"

namespace wfk {

/// Default desk-scale caps: pairwise distance work is quadratic in the
/// sample count and the cover grid is exponential in the dimension.
inline constexpr int kMaxEmpiricalDimension = 16; // 2N
inline constexpr int kMaxEmpiricalSamples = 100000;

/// count functions of table length N drawn uniformly from the unit ball of
/// the 2N-dimensional coefficient space (gaussian direction, radius
/// u^{1/(2N)}). Deterministic for a given seed.
std::vector<RkhsFunction> sample_unit_ball(const WeierstrassParams& params, int order, int count,
                                           std::uint64_t seed);

/// Certified two-sided sup-norm distance brackets for every pair.
struct DistanceBrackets {
    Eigen::MatrixXd lower; // grid max of |f_i - f_j|
    Eigen::MatrixXd upper; // lower + L_ij h / 2
};

/// All functions must share (a, b); throws ParamMismatchError otherwise.
/// Pair work is parallelized over row blocks; results are independent of
/// the worker count.
DistanceBrackets pairwise_sup_distances(const std::vector<RkhsFunction>& functions, int grid_count,
                                        int workers = 0);

struct PackingResult {
    std::vector<int> center_indices;
    double separation; // 2*eps; selected pairs are strictly farther apart
    int cardinality;
};

/// Farthest-point-first greedy packing over certified lower distance
/// brackets: a point joins while its smallest lower-bracket distance to
/// the selected centers exceeds 2*eps (ties broken by smallest index).
/// The resulting cardinality is a sound lower estimate for the covering
/// number at radius eps of any set containing the points.
PackingResult greedy_packing(const Eigen::MatrixXd& distance_lowers, double eps);

/// Explicit eps-cover of the image of the truncated-space unit ball: an
/// axis-aligned grid of pitch net_spacing over the 2N-dimensional
/// coefficient ball. Grid nodes within 1 + sqrt(2N)*net_spacing/2 of the
/// origin are kept, so coordinate rounding never leaves the net and every
/// image lands within eps/2 of a net image.
struct CoverDescription {
    double net_spacing;  // coefficient-space grid pitch
    int dimension;       // 2N
    double cover_size_ln; // nats
    double tail_radius;  // mu_N
    bool count_is_exact; // enumerated vs per-axis product bound
};

/// Cover of the order-N head family at target radius eps. The node count
/// is enumerated exactly while the axis grid stays below ~2^28 nodes and
/// otherwise reported through the certified per-axis product bound.
CoverDescription head_cover(const WeierstrassParams& params, int order, double eps);

/// Cover for the full unit-ball image: N from the truncation sandwich, so
/// the discarded tail contributes radius mu_N <= eps/2 and the grid net
/// contributes eps/2. Degenerates to the single-ball cover when eps is at
/// least the embedding norm.
CoverDescription constructive_cover(const WeierstrassParams& params, double eps);

struct CoverageCheck {
    int samples;
    int covered;
    double worst_upper_bracket; // largest certified distance to the rounded net point
};

/// Randomized validity check of head_cover(params, order, eps): samples
/// unit-ball functions, rounds each to its net point, and certifies the
/// sup distance with the upper bracket on a grid of grid_count points.
CoverageCheck cover_coverage_check(const WeierstrassParams& params, int order, double eps,
                                   int samples, std::uint64_t seed, int grid_count);

struct EmpiricalRow {
    BoundReport bounds;
    double empirical_lower_ln; // ln(greedy packing cardinality)
    double cover_size_ln;      // desk-scale head cover at the run's order
    int samples;
    int grid_count;
    std::uint64_t seed;
};

/// Full desk-scale pipeline: sample, bracket distances once, then pack per
/// eps and attach the analytic bounds. Rows are bit-reproducible for fixed
/// (seed, grid_count) and any worker count. Throws DomainError when the
/// 2N <= 16 or samples <= 1e5 caps are exceeded.
std::vector<EmpiricalRow> empirical_report(const WeierstrassParams& params,
                                           std::span<const double> eps_list, int order,
                                           int samples, int grid_count, std::uint64_t seed,
                                           int workers = 0);

std::string empirical_csv_header();
std::string empirical_csv_row(const EmpiricalRow& row);
nlohmann::json empirical_to_json(const EmpiricalRow& row);

} // namespace wfk
