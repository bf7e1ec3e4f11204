#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace cyclab {

// Adaptive composite quadrature built on a 15-point Gauss-Legendre rule.
// An interval is accepted once bisecting it moves the estimate by less than
// max(rel_tol * |value|, abs_floor); otherwise both halves are refined.
// Refinement stops at max_depth and the leftover discrepancy is accumulated
// into `error`, with `converged` cleared.  The depth cap is generous (60)
// because Poisson kernels evaluated at radius 1 - 2^-40 need ~45 halvings
// before the needle under the peak is resolved.
struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;     // accumulated accept-test discrepancies
    bool converged = true;  // false iff some leaf hit the depth cap
    std::size_t evaluations = 0;
};

struct ComplexQuadratureResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    bool converged = true;
    std::size_t evaluations = 0;
};

inline constexpr int kQuadratureMaxDepth = 60;
inline constexpr double kQuadratureRelTol = 1e-9;

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = kQuadratureRelTol, double abs_floor = 1e-300,
                           int max_depth = kQuadratureMaxDepth);

ComplexQuadratureResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                          double a, double b,
                                          double rel_tol = kQuadratureRelTol,
                                          double abs_floor = 1e-300,
                                          int max_depth = kQuadratureMaxDepth);

// Cutoff ladder for integrands singular at the origin-side endpoint(s).
// Integrates f over [cut, span-cut] for cut = span * 2^-(k0+j), j = 0,1,...
// and watches the increments.  Stabilisation means the increment dropped
// below rel_tol * (|value|+1); divergence is declared when the increments
// refuse to shrink (ratio >= divergence_ratio) over a sustained stretch or
// the round cap passes without stabilisation while the total keeps growing.
struct CutoffLadderResult {
    std::complex<double> value{0.0, 0.0};
    bool converged = false;
    bool diverged = false;   // increments non-shrinking: integral grows without bound
    int rounds = 0;
    double last_delta = 0.0;
    double prev_delta = 0.0;
};

CutoffLadderResult integrate_cutoff_ladder(const std::function<std::complex<double>(double)>& f,
                                           double span, double rel_tol = 1e-9,
                                           int max_rounds = 60,
                                           double divergence_ratio = 0.98);

}  // namespace cyclab
