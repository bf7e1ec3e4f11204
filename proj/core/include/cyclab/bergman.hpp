#pragma once

#include <cstddef>
#include <vector>

#include "cyclab/series.hpp"
#include "cyclab/weights.hpp"

namespace cyclab {

// Outcome of one least-squares distance computation
// dist = min_{deg p <= N} || 1 - p U ||_{omega,2}, coefficients through degree M.
struct DistanceResult {
    std::size_t N = 0;
    std::size_t M = 0;
    double dist = 0.0;
    double dist_sq = 0.0;
    double tail_bound = 0.0;      // rigorous bound on the norm mass past degree M
    double gram_condition = 0.0;  // lambda_max / lambda_min of the Gram matrix
    bool ridge_applied = false;
    std::vector<cdouble> solution;  // optimal polynomial coefficients
};

// || f ||_{omega,2} = sqrt( sum |a_n|^2 / omega(n)^2 ), truncated at f's degree.
double space_norm(const WeightSequence& w, const TaylorSeries& f);
cdouble space_inner_product(const WeightSequence& w, const TaylorSeries& f, const TaylorSeries& g);

// Bound on the weighted-norm mass that falls past degree M when a polynomial
// of degree <= N multiplies a series with H2 coefficient mass U_h2_mass and
// sup norm <= 1 (inner truncations): sqrt(p_h2_sq * U_h2_mass) / omega(M-N).
// Requires a monotone weight; unchecked non-monotone weights are rejected
// (callers fall back to the flat bound, valid because omega >= 1 throughout).
double truncation_tail_bound(const WeightSequence& w, double U_h2_mass, std::size_t M,
                             std::size_t N = 0, double p_h2_sq = 1.0);

// Pricing of the Gram rows discarded past the truncation degree M.
//
// `unimodular_completion` uses the identity sum_m u_{m-j} conj(u_{m-k}) =
// delta_{jk} (true whenever the coefficients truncate an inner function,
// whose shifts are orthonormal in H^2) to add the missing rows priced at
// rho(M+1). Exact for eventually-flat weights, where plain truncation loses
// the slowly decaying coefficient tail (|u_m| shrinks only polynomially);
// negligible for growing weights, where rho(M+1) is already tiny. Pass
// `truncated` when U is an arbitrary series rather than an inner truncation.
enum class GramTail { truncated, unimodular_completion };

// Solves the Gram system G c = b with G_{jk} = <z^j U, z^k U>_omega and
// b_j = <1, z^j U>_omega; dist^2 = ||1||^2 - c.b. Eigendecomposition-based
// solve; a ridge of 1e-14 trace/(N+1) is added when the condition estimate
// exceeds 1e12 (recorded in the result).
DistanceResult gram_distance(const WeightSequence& w, const TaylorSeries& U, std::size_t N,
                             std::size_t M,
                             GramTail tail = GramTail::unimodular_completion);

// One DistanceResult per requested degree (ascending), from a single
// coefficient preparation of U and a single Gram assembly at the largest N.
std::vector<DistanceResult> cyclicity_scan(const WeightSequence& w,
                                           const AtomicSingularMeasure& nu,
                                           const std::vector<std::size_t>& degrees, std::size_t M,
                                           GramTail tail = GramTail::unimodular_completion);

// Distance of 1 from span{z^k U(z^2) : k <= N} under the deliberately
// non-monotone weight log omega(2n) = 0, log omega(2n+1) = sqrt(n). The
// even-coefficient projection argument pins dist >= sqrt(1 - |U(0)|^2) minus
// truncation slush, however large N grows.
DistanceResult remark3_counterexample(const AtomicSingularMeasure& nu, std::size_t N,
                                      std::size_t M);

}  // namespace cyclab
