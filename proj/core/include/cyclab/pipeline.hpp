#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclab/corona.hpp"
#include "cyclab/growth.hpp"
#include "cyclab/series.hpp"
#include "cyclab/weights.hpp"

namespace cyclab {

enum class PipelineMode { theorem1, theorem2, theorem2_monomial };

std::string to_string(PipelineMode mode);
PipelineMode parse_pipeline_mode(const std::string& text);

struct AllocationPlan {
    PipelineMode mode = PipelineMode::theorem1;
    std::size_t j0 = 0;
    std::size_t block_count = 0;        // N
    std::vector<std::size_t> rungs;     // m_j = n_{j0+j}, j = 1..N
    std::vector<double> lambdas;        // sum lambda_j^2 == 1 after renormalization
    double constant_used = 0.0;         // A_eff or B_eff
    double threshold = 0.0;             // (4 A_eff c)^2 or 4 pi^2 B_eff^2
    double achieved_partial = 0.0;      // ladder partial sum over the chosen blocks
    // theorem2 only: per-block check of 4 pi^2 lambda_j^2 m_j <= Lambda(1/m_j).
    // The threshold arithmetic guarantees this only when B_eff >= 1; smaller
    // desk-scale constants keep the run feasible, so violations are recorded
    // here instead of aborting.
    std::vector<bool> block_hypothesis_ok;
};

class ThresholdUnreachable : public std::runtime_error {
  public:
    ThresholdUnreachable(const std::string& what, double achieved_arg, double threshold_arg)
        : std::runtime_error(what), achieved(achieved_arg), threshold(threshold_arg) {}
    double achieved;
    double threshold;
};

// N = min{ M : sum_{j=1..M} (log w(n_{j0+j}))^2 / n_{j0+j} >= (4 A_eff c)^2 },
// lambda_j proportional to log w(m_j)/sqrt(m_j). Throws ThresholdUnreachable
// when the ladder exhausts the horizon first.
AllocationPlan plan_theorem1(const WeightSequence& w, const AtomicSingularMeasure& nu,
                             std::size_t j0, double a_eff,
                             std::size_t horizon = kDefaultHorizon, std::size_t max_blocks = 64);

// Same scheme on s(n) = Lambda(1/n) with threshold 4 pi^2 B_eff^2 and
// lambda_j^2 proportional to Lambda(1/m_j)/m_j.
AllocationPlan plan_theorem2(const LambdaMajorant& L, std::size_t j0, double b_eff,
                             PipelineMode mode = PipelineMode::theorem2,
                             std::size_t horizon = kDefaultHorizon, std::size_t max_blocks = 64);

struct BlockDiagnostics {
    std::size_t m = 0;       // rung
    double lambda = 0.0;
    double solver_residual = 0.0;  // coefficient-space l2 or collocation RMS
    double f_sup = 0.0;
    double g_sup = 0.0;
    double block_norm = 0.0;  // ||1 - U_j f_j||_{omega,2} or the Lambda-sup analogue
    bool hypothesis_ok = true;
};

struct PipelineRun {
    AllocationPlan plan;
    double residual = 0.0;           // ||1 - U prod f_j||_{omega,2} or grid-sup norm
    double telescoping_bound = 0.0;  // product-form bound evaluated with constant_used
    double triangle_audit = 0.0;     // sum_j (prod_{k<j} f_sup_k) block_norm_j
    std::vector<BlockDiagnostics> blocks;
    std::string note;
};

struct Theorem1Options {
    std::size_t bezout_degree = 64;
    std::size_t truncation = 4096;  // product/norm truncation floor
};

PipelineRun run_theorem1(const AllocationPlan& plan, const WeightSequence& w,
                         const AtomicSingularMeasure& nu, const Theorem1Options& opt = {});

struct Theorem2Options {
    std::size_t factor_degree = 96;
    int grid_kmax = 24;
    int grid_angles = 512;
    double inner_mass = 1.0;  // total mass of I; 0 makes every factor trivial
};

PipelineRun run_theorem2(const AllocationPlan& plan, const LambdaMajorant& L,
                         const Theorem2Options& opt = {});

enum class TrendClass { decay, plateau, mixed };

std::string to_string(TrendClass c);

// decay: last <= half the first; plateau: all values within 10% of the max;
// otherwise mixed. Empty/one-point trajectories classify as plateau.
TrendClass classify_trend(const std::vector<double>& values);

struct ContrastEntry {
    std::string label;
    std::vector<double> sweep_keys;   // N or j0 per point
    std::vector<double> trajectory;   // dist or residual per point
    std::vector<double> partial_sums; // divergence-side diagnostics (checkpointed)
    TrendClass classification = TrendClass::mixed;
    std::string note;  // planning stalls, Keldys outcome, ...
};

struct ContrastReport {
    std::vector<ContrastEntry> entries;
};

// Side-by-side cyclicity scans of one measure under several weights.
ContrastReport contrast_scans(const AtomicSingularMeasure& nu,
                              const std::vector<std::string>& weight_specs,
                              const std::vector<std::size_t>& degrees, std::size_t M);

// Side-by-side theorem-2 sweeps over j0 for several majorants, annotated with
// the Keldys outer-function outcome at z = 0 (its convergence/divergence is
// the other half of the dichotomy).
ContrastReport contrast_theorem2(const std::vector<std::string>& lambda_specs,
                                 const std::vector<std::size_t>& j0_sweep, double b_eff,
                                 const Theorem2Options& opt = {});

}  // namespace cyclab
