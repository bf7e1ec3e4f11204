#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cyclab/disk_grid.hpp"
#include "cyclab/series.hpp"
#include "cyclab/weights.hpp"

namespace cyclab {

enum class BoundarySet { point_one, full_circle };

std::string to_string(BoundarySet e);
double boundary_distance(BoundarySet e, cdouble z);  // |1-z| or 1-|z|

// Nonincreasing positive majorant Lambda on (0, 2], paired with the boundary
// set whose distance it weighs. Monotonicity and positivity are spot-checked
// on a log-spaced grid of 256 pairs at construction; `unchecked` admits
// deliberate test majorants (e.g. Lambda == 0).
class LambdaMajorant {
  public:
    LambdaMajorant(std::function<double(double)> value, std::string tag,
                   BoundarySet E = BoundarySet::point_one, bool unchecked = false);

    double operator()(double t) const;
    const std::string& tag() const { return tag_; }
    BoundarySet boundary() const { return E_; }
    bool unchecked() const { return unchecked_; }

  private:
    std::function<double(double)> value_;
    std::string tag_;
    BoundarySet E_;
    bool unchecked_;
};

// Lambda spec strings: "power,alpha=1.0" -> t^-alpha; "logpow,beta=2" ->
// log^beta(e + 1/t); "const,c=5"; optional "boundary=point|circle"; a leading
// "lambda=power" is accepted too.
LambdaMajorant make_lambda(const std::string& spec);
LambdaMajorant lambda_power(double alpha, BoundarySet E = BoundarySet::point_one);
LambdaMajorant lambda_logpow(double beta, BoundarySet E = BoundarySet::point_one);
LambdaMajorant lambda_const(double c, BoundarySet E = BoundarySet::point_one,
                            bool unchecked = false);

struct IntegrabilityRow {
    double eps = 0.0;
    double integral = 0.0;  // integral_eps^2 Lambda(t) dt
    bool integral_converged = true;
    double series_sum = 0.0;  // sum_{n<=ceil(1/eps)} Lambda(1/n)/n^2
};

std::vector<IntegrabilityRow> integrability_partials(const LambdaMajorant& L,
                                                     const std::vector<double>& eps_list);

// Grid estimate (a lower bound of the true sup) of
// log ||f||_{Lambda,E,inf} = sup_z log|f(z)| - Lambda(d(z,E)),
// taking a log-modulus evaluator so underflowing |f| cost nothing.
double bnorm_estimate(const std::function<double(cdouble)>& log_abs_f, const LambdaMajorant& L,
                      const DiskGrid& grid);

// log f_delta(z) for the outer function
//   f_delta(z) = exp( -Lambda(delta) * integral_{delta<|t|<pi} (e^it+z)/(e^it-z) dt )
// (no 1/2pi normalization, matching the construction it implements).
//
// The quadrature route integrates the Herglotz kernel adaptively; the closed
// form evaluates
//   log f_delta = -lambda_delta (2(pi-delta) + 2i Log[(1-z e^{-i delta})/(1-z e^{i delta})]),
// principal branch, safe because both factors live in the right half-plane.
// The two routes agree to quadrature tolerance and the closed form is what
// grid sweeps use.
cdouble outer_fdelta_log_quad(double lambda_delta, double delta, cdouble z);
cdouble outer_fdelta_log(double lambda_delta, double delta, cdouble z);
double outer_fdelta_log_abs(double lambda_delta, double delta, cdouble z);

// Harmonic measure of E_delta = {e^{it} : delta <= |t| <= pi} at z: quadrature
// of the Poisson kernel over the arc, plus the closed form used as an oracle.
double harmonic_measure_arc(cdouble z, double delta);
double harmonic_measure_arc_closed(cdouble z, double delta);

struct Lemma4Report {
    double lambda_delta = 0.0;
    // Region bound: min over the approach region |1-z|^2 <= a delta (1-|z|^2)
    // of log|f_delta(z)| - (-4 pi^2 lambda_delta a).
    double margin_region = 0.0;
    GridPoint worst_region;
    std::size_t region_samples = 0;
    bool region_empty = false;
    // Global pointwise bound as stated: min over the disk grid of
    // [-pi Lambda(delta) + Lambda(|1-z|)] - log|f_delta(z)|.
    double margin_global = 0.0;
    GridPoint worst_global;
    // Variant with the bound's Lambda difference scaled by pi:
    // pi [Lambda(|1-z|) - Lambda(delta)] - log|f_delta(z)|. This version holds
    // on all of the disk; the unscaled form fails in the thin band where the
    // boundary gap shields z from the arc (diagnostic, reported alongside).
    double margin_global_pi = 0.0;
};

Lemma4Report check_lemma4(const LambdaMajorant& L, double delta, double a, int k_max = 40,
                          int base_angles = 4096, int per_radius = 26);

struct Lemma5Report {
    double c = 0.0;
    std::size_t n = 0;
    double measured_inf_log = 0.0;  // grid min of log(|f_delta| + |I_c|), delta = 1/n
    double inf_bound_log = 0.0;     // -4 pi^2 sqrt(c n Lambda(1/n))
    double margin_inf = 0.0;
    double bnorm_log = 0.0;       // grid estimate of log ||f_delta||_{Lambda,{1},inf}
    double norm_bound_log = 0.0;  // -pi Lambda(1/n)
    double margin_norm = 0.0;
    double margin_norm_alt = 0.0;  // against -Lambda(1/n), the variant that holds globally
    double b_eff = 0.0;            // -measured_inf_log / sqrt(c n Lambda(1/n))
};

// Requires the hypothesis 4 pi^2 c n <= Lambda(1/n) (throws with the offending
// ratio otherwise).
Lemma5Report check_lemma5(double c, std::size_t n, const LambdaMajorant& L);

struct KeldysResult {
    cdouble log_value{0.0, 0.0};
    bool converged = false;
    bool diverged = false;  // both false: inconclusive at the round cap
    int rounds = 0;
    double last_delta = 0.0;
    double prev_delta = 0.0;
};

// log F(z) for F(z) = exp( -integral_0^{2pi} (e^it+z)/(e^it-z)
// Lambda(|1-e^it|) dt/2pi ) via a cutoff ladder around the t = 0 singularity.
// Divergence of the ladder is itself a meaningful report (it witnesses
// non-integrable Lambda), not an exception.
KeldysResult keldys_outer_F(const LambdaMajorant& L, cdouble z);

// Moment weights omega(n)^{-2} = integral_0^1 r^{2n+1} e^{-2 Lambda(1-r)} dr,
// n = 0..n_max, each moment integrated in log-stabilized form.
WeightSequence moment_weights(const LambdaMajorant& L, std::size_t n_max);

}  // namespace cyclab
