#include "cyclab/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cyclab/bergman.hpp"

namespace cyclab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// First index where the weight has started to grow; the doubling ladder needs
// a strictly positive seed value.
std::size_t first_positive_index(const std::function<double(std::size_t)>& s,
                                 std::size_t horizon) {
    for (std::size_t n = 1; n <= horizon; ++n)
        if (s(n) > 0.0) return n;
    throw std::invalid_argument("pipeline planning: sequence is identically zero up to the horizon");
}

void renormalize(std::vector<double>& lambdas) {
    double sum_sq = 0.0;
    for (double l : lambdas) sum_sq += l * l;
    if (!(sum_sq > 0.0)) throw std::logic_error("pipeline planning: zero lambda vector");
    const double scale = 1.0 / std::sqrt(sum_sq);
    for (double& l : lambdas) l *= scale;
}

struct LadderedPlanInputs {
    std::vector<std::size_t> rungs_all;  // full ladder including index 0
    bool truncated = false;
};

LadderedPlanInputs build_ladder(const std::function<double(std::size_t)>& s, std::size_t j0,
                                std::size_t max_blocks, std::size_t horizon) {
    const std::size_t n0 = first_positive_index(s, horizon);
    const LadderResult lr = ladder(s, j0 + max_blocks, n0, horizon);
    return {lr.rungs, lr.truncated};
}

double monomial_lambda_norm_log(unsigned long long K, const LambdaMajorant& L) {
    // sup_{0<r<1} K log r - Lambda(1-r), probed on a fine radial sweep.
    double best = -kInf;
    for (int i = 1; i < 4096; ++i) {
        const double r = static_cast<double>(i) / 4096.0;
        const double lam = L(1.0 - r);
        if (lam == kInf) continue;
        best = std::max(best, static_cast<double>(K) * std::log(r) - lam);
    }
    return best;
}

}  // namespace

std::string to_string(PipelineMode mode) {
    switch (mode) {
        case PipelineMode::theorem1: return "theorem1";
        case PipelineMode::theorem2: return "theorem2";
        case PipelineMode::theorem2_monomial: return "theorem2_monomial";
    }
    return "?";
}

PipelineMode parse_pipeline_mode(const std::string& text) {
    if (text == "theorem1") return PipelineMode::theorem1;
    if (text == "theorem2") return PipelineMode::theorem2;
    if (text == "theorem2_monomial") return PipelineMode::theorem2_monomial;
    throw std::invalid_argument("unknown pipeline mode: " + text);
}

AllocationPlan plan_theorem1(const WeightSequence& w, const AtomicSingularMeasure& nu,
                             std::size_t j0, double a_eff, std::size_t horizon,
                             std::size_t max_blocks) {
    if (nu.empty()) throw std::invalid_argument("plan_theorem1: measure must carry positive mass");
    if (!(a_eff > 0.0)) throw std::invalid_argument("plan_theorem1: a_eff must be positive");
    const double c = std::sqrt(nu.total_mass());
    const double threshold = std::pow(4.0 * a_eff * c, 2);

    const auto s = [&w](std::size_t n) { return w.logw(n); };
    const LadderedPlanInputs li = build_ladder(s, j0, max_blocks, horizon);

    AllocationPlan plan;
    plan.mode = PipelineMode::theorem1;
    plan.j0 = j0;
    plan.constant_used = a_eff;
    plan.threshold = threshold;

    double partial = 0.0;
    std::vector<double> raw;
    for (std::size_t j = 1; j <= max_blocks; ++j) {
        const std::size_t idx = j0 + j;
        if (idx >= li.rungs_all.size()) {
            std::ostringstream os;
            os << "plan_theorem1: ladder exhausted at " << plan.rungs.size()
               << " blocks (partial sum " << partial << " < threshold " << threshold << ")";
            throw ThresholdUnreachable(os.str(), partial, threshold);
        }
        const std::size_t m = li.rungs_all[idx];
        const double lw = w.logw(m);
        partial += lw * lw / static_cast<double>(m);
        plan.rungs.push_back(m);
        raw.push_back(lw / std::sqrt(static_cast<double>(m)));
        if (partial >= threshold) break;
    }
    if (partial < threshold) {
        std::ostringstream os;
        os << "plan_theorem1: threshold not reached within " << max_blocks
           << " blocks (partial sum " << partial << " < threshold " << threshold << ")";
        throw ThresholdUnreachable(os.str(), partial, threshold);
    }
    plan.block_count = plan.rungs.size();
    plan.achieved_partial = partial;
    plan.lambdas = std::move(raw);
    renormalize(plan.lambdas);
    return plan;
}

AllocationPlan plan_theorem2(const LambdaMajorant& L, std::size_t j0, double b_eff,
                             PipelineMode mode, std::size_t horizon, std::size_t max_blocks) {
    if (mode == PipelineMode::theorem1)
        throw std::invalid_argument("plan_theorem2: mode must be a theorem2 variant");
    if (!(b_eff > 0.0)) throw std::invalid_argument("plan_theorem2: b_eff must be positive");
    const double threshold = 4.0 * kPi * kPi * b_eff * b_eff;

    const auto s = [&L](std::size_t n) { return L(1.0 / static_cast<double>(n)); };
    const LadderedPlanInputs li = build_ladder(s, j0, max_blocks, horizon);

    AllocationPlan plan;
    plan.mode = mode;
    plan.j0 = j0;
    plan.constant_used = b_eff;
    plan.threshold = threshold;

    double partial = 0.0;
    std::vector<double> terms;
    for (std::size_t j = 1; j <= max_blocks; ++j) {
        const std::size_t idx = j0 + j;
        if (idx >= li.rungs_all.size()) {
            std::ostringstream os;
            os << "plan_theorem2: ladder exhausted at " << plan.rungs.size()
               << " blocks (partial sum " << partial << " < threshold " << threshold << ")";
            throw ThresholdUnreachable(os.str(), partial, threshold);
        }
        const std::size_t m = li.rungs_all[idx];
        const double term = s(m) / static_cast<double>(m);
        partial += term;
        plan.rungs.push_back(m);
        terms.push_back(term);
        if (partial >= threshold) break;
    }
    if (partial < threshold) {
        std::ostringstream os;
        os << "plan_theorem2: threshold not reached within " << max_blocks
           << " blocks (partial sum " << partial << " < threshold " << threshold << ")";
        throw ThresholdUnreachable(os.str(), partial, threshold);
    }
    plan.block_count = plan.rungs.size();
    plan.achieved_partial = partial;
    plan.lambdas.resize(terms.size());
    for (std::size_t j = 0; j < terms.size(); ++j) plan.lambdas[j] = std::sqrt(terms[j] / partial);
    renormalize(plan.lambdas);
    plan.block_hypothesis_ok.resize(plan.rungs.size());
    for (std::size_t j = 0; j < plan.rungs.size(); ++j) {
        const double m = static_cast<double>(plan.rungs[j]);
        const double lhs = 4.0 * kPi * kPi * plan.lambdas[j] * plan.lambdas[j] * m;
        plan.block_hypothesis_ok[j] = lhs <= s(plan.rungs[j]) * (1.0 + 1e-12);
    }
    return plan;
}

PipelineRun run_theorem1(const AllocationPlan& plan, const WeightSequence& w,
                         const AtomicSingularMeasure& nu, const Theorem1Options& opt) {
    if (plan.mode != PipelineMode::theorem1)
        throw std::invalid_argument("run_theorem1: plan mode mismatch");
    PipelineRun run;
    run.plan = plan;
    if (nu.empty()) {
        run.note = "empty measure: the inner factor is constant and 1 is already in its span";
        return run;
    }
    const std::size_t m_last = plan.rungs.empty() ? 0 : plan.rungs.back();
    const std::size_t M = std::max(opt.truncation, 2 * (m_last + opt.bezout_degree));
    const double c = std::sqrt(nu.total_mass());

    TaylorSeries prod = inner_coeffs(nu, M);  // running product, starts at U
    if (prod.underflowed)
        throw std::runtime_error("run_theorem1: inner coefficients underflowed");
    std::ostringstream audit;
    audit.precision(6);
    audit << "product coefficient mass after each factor:";

    double triangle = 0.0;
    double sup_prefix = 1.0;  // prod_{k<j} f_sup_k
    for (std::size_t j = 0; j < plan.rungs.size(); ++j) {
        const std::size_t m = plan.rungs[j];
        const double lambda = plan.lambdas[j];
        const AtomicSingularMeasure nu_j = nu.scaled(lambda * lambda);
        const TaylorSeries U_j = inner_coeffs(nu_j, M);
        const BezoutSolution bez = bezout_solve(U_j, m, opt.bezout_degree, M);

        TaylorSeries one_minus = multiply(bez.f, U_j, M);
        for (cdouble& a : one_minus.coeffs) a = -a;
        one_minus.coeffs[0] += 1.0;
        const double block_norm = space_norm(w, one_minus);

        BlockDiagnostics d;
        d.m = m;
        d.lambda = lambda;
        d.solver_residual = bez.residual_l2;
        d.f_sup = bez.f_sup;
        d.g_sup = bez.g_sup;
        d.block_norm = block_norm;
        run.blocks.push_back(d);

        triangle += sup_prefix * block_norm;
        sup_prefix *= bez.f_sup;

        prod = multiply(prod, bez.f, M);
        audit << ' ' << prod.h2_mass();
    }
    run.triangle_audit = triangle;
    run.note = audit.str();

    TaylorSeries residual_series = prod;
    for (cdouble& a : residual_series.coeffs) a = -a;
    residual_series.coeffs[0] += 1.0;
    run.residual = space_norm(w, residual_series);

    // telescoping bound: sum_j exp[ sum_{k<=j} A(c λ_k sqrt(m_k) + 1) − log ω(m_j) ]
    double bound = 0.0;
    double expo_prefix = 0.0;
    for (std::size_t j = 0; j < plan.rungs.size(); ++j) {
        const double m = static_cast<double>(plan.rungs[j]);
        expo_prefix += plan.constant_used * (c * plan.lambdas[j] * std::sqrt(m) + 1.0);
        bound += std::exp(expo_prefix - w.logw(plan.rungs[j]));
    }
    run.telescoping_bound = bound;
    return run;
}

PipelineRun run_theorem2(const AllocationPlan& plan, const LambdaMajorant& L,
                         const Theorem2Options& opt) {
    if (plan.mode == PipelineMode::theorem1)
        throw std::invalid_argument("run_theorem2: plan mode mismatch");
    if (plan.mode == PipelineMode::theorem2_monomial &&
        L.boundary() != BoundarySet::full_circle)
        throw std::invalid_argument(
            "run_theorem2: the monomial variant needs a circle-boundary majorant");
    if (plan.mode == PipelineMode::theorem2 && L.boundary() != BoundarySet::point_one)
        throw std::invalid_argument("run_theorem2: theorem2 mode needs a point-boundary majorant");

    PipelineRun run;
    run.plan = plan;
    const BoundarySet E = L.boundary();
    const DiskGrid grid = standard_grid(opt.grid_kmax, opt.grid_angles, {0.0}, 256);
    const auto wt = [&](cdouble z) {
        const double lam = L(boundary_distance(E, z));
        return lam == kInf ? 0.0 : std::exp(-lam);
    };

    if (opt.inner_mass == 0.0) {
        // I == 1: h_j == 1 solves every block exactly
        for (std::size_t j = 0; j < plan.rungs.size(); ++j) {
            BlockDiagnostics d;
            d.m = plan.rungs[j];
            d.lambda = plan.lambdas[j];
            d.f_sup = 1.0;
            if (j < plan.block_hypothesis_ok.size()) d.hypothesis_ok = plan.block_hypothesis_ok[j];
            run.blocks.push_back(d);
        }
        run.note = "inner mass 0: trivial factors";
        return run;
    }
    if (!(opt.inner_mass > 0.0))
        throw std::invalid_argument("run_theorem2: inner_mass must be >= 0");

    const AtomicSingularMeasure nu = AtomicSingularMeasure::point_mass(opt.inner_mass, 0.0);

    std::vector<std::function<cdouble(cdouble)>> h_evals;
    double triangle = 0.0;
    double telescoping = 0.0;
    double sup_prefix = 1.0;

    for (std::size_t j = 0; j < plan.rungs.size(); ++j) {
        const std::size_t m = plan.rungs[j];
        const double lambda = plan.lambdas[j];
        const AtomicSingularMeasure nu_j = nu.scaled(lambda * lambda);
        const auto I_j = [nu_j](cdouble z) { return inner_eval(nu_j, z); };

        std::function<cdouble(cdouble)> F_j;
        double factor_norm_log = 0.0;  // log ||F_j||_{Lambda,E,inf} claimed bound
        if (plan.mode == PipelineMode::theorem2_monomial) {
            const double lam_m = L(1.0 / static_cast<double>(m));
            const auto K = static_cast<unsigned long long>(std::floor(
                static_cast<double>(m) * lam_m));
            F_j = [K](cdouble z) {
                if (z == cdouble{}) return K == 0 ? cdouble{1.0, 0.0} : cdouble{0.0, 0.0};
                return std::exp(static_cast<double>(K) * std::log(z));
            };
            factor_norm_log = monomial_lambda_norm_log(K, L);
        } else {
            const double delta = 1.0 / static_cast<double>(m);
            const double ld = L(delta);
            F_j = [ld, delta](cdouble z) { return std::exp(outer_fdelta_log(ld, delta, z)); };
            factor_norm_log = -kPi * ld;
        }

        const CollocationBezout sol = bezout_collocation(I_j, F_j, opt.factor_degree,
                                                         grid.points, wt);
        const TaylorSeries h = sol.h;
        const auto h_eval = [h](cdouble z) { return h.eval(z); };

        // block norm: ||1 - I_j h_j|| in the grid-sampled Lambda-sup norm
        const GridExtremum bn = grid_max(grid.points, [&](const GridPoint& p) {
            return std::abs(1.0 - I_j(p.z) * h_eval(p.z)) * wt(p.z);
        });
        // grid sup of |I_j h_j|, the multiplier entering the telescoping prefix
        // (taken over the same grid so the audit dominates the residual pointwise)
        const GridExtremum ih_sup = grid_max(grid.points, [&](const GridPoint& p) {
            return std::abs(I_j(p.z) * h_eval(p.z));
        });

        BlockDiagnostics d;
        d.m = m;
        d.lambda = lambda;
        d.solver_residual = sol.residual_rms;
        d.f_sup = sol.h_sup;
        d.g_sup = sol.g_sup;
        d.block_norm = bn.value;
        if (j < plan.block_hypothesis_ok.size()) d.hypothesis_ok = plan.block_hypothesis_ok[j];
        run.blocks.push_back(d);

        triangle += sup_prefix * bn.value;
        telescoping += sup_prefix * sol.g_sup * std::exp(factor_norm_log);
        sup_prefix *= ih_sup.value;
        h_evals.push_back(h_eval);
    }
    run.triangle_audit = triangle;
    run.telescoping_bound = telescoping;

    const auto I_full = [&nu](cdouble z) { return inner_eval(nu, z); };
    const GridExtremum res = grid_max(grid.points, [&](const GridPoint& p) {
        cdouble v = I_full(p.z);
        for (const auto& h : h_evals) v *= h(p.z);
        return std::abs(1.0 - v) * wt(p.z);
    });
    run.residual = res.value;
    return run;
}

std::string to_string(TrendClass c) {
    switch (c) {
        case TrendClass::decay: return "decay";
        case TrendClass::plateau: return "plateau";
        case TrendClass::mixed: return "mixed";
    }
    return "?";
}

TrendClass classify_trend(const std::vector<double>& values) {
    if (values.size() < 2) return TrendClass::plateau;
    if (values.back() <= 0.5 * values.front()) return TrendClass::decay;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*lo >= 0.9 * *hi) return TrendClass::plateau;
    return TrendClass::mixed;
}

ContrastReport contrast_scans(const AtomicSingularMeasure& nu,
                              const std::vector<std::string>& weight_specs,
                              const std::vector<std::size_t>& degrees, std::size_t M) {
    ContrastReport report;
    for (const std::string& spec : weight_specs) {
        const WeightSequence w = make_family(spec, std::max(M, kDefaultHorizon));
        ContrastEntry e;
        e.label = w.tag();
        const std::vector<DistanceResult> rows = cyclicity_scan(w, nu, degrees, M);
        for (const DistanceResult& r : rows) {
            e.sweep_keys.push_back(static_cast<double>(r.N));
            e.trajectory.push_back(r.dist);
            e.partial_sums.push_back(partial_sum_theorem1(w, r.N));
        }
        e.classification = classify_trend(e.trajectory);
        report.entries.push_back(std::move(e));
    }
    return report;
}

ContrastReport contrast_theorem2(const std::vector<std::string>& lambda_specs,
                                 const std::vector<std::size_t>& j0_sweep, double b_eff,
                                 const Theorem2Options& opt) {
    ContrastReport report;
    for (const std::string& spec : lambda_specs) {
        const LambdaMajorant L = make_lambda(spec);
        ContrastEntry e;
        e.label = L.tag() + ",boundary=" + to_string(L.boundary());
        std::ostringstream note;
        for (std::size_t j0 : j0_sweep) {
            try {
                const AllocationPlan plan = plan_theorem2(L, j0, b_eff);
                const PipelineRun r = run_theorem2(plan, L, opt);
                e.sweep_keys.push_back(static_cast<double>(j0));
                e.trajectory.push_back(r.residual);
            } catch (const ThresholdUnreachable& ex) {
                note << "planning stalled at j0=" << j0 << " (achieved " << ex.achieved
                     << " < threshold " << ex.threshold << "); ";
                break;
            }
        }
        // divergence-side diagnostic: partial sums of Lambda(1/n)/n^2
        for (std::size_t N : {16u, 64u, 256u, 1024u, 4096u}) {
            double sum = 0.0;
            for (std::size_t n = 1; n <= N; ++n)
                sum += L(1.0 / static_cast<double>(n)) /
                       (static_cast<double>(n) * static_cast<double>(n));
            e.partial_sums.push_back(sum);
        }
        const KeldysResult kr = keldys_outer_F(L, cdouble{0.0, 0.0});
        note << "keldys@0: "
             << (kr.diverged ? "diverged" : (kr.converged ? "converged" : "inconclusive"))
             << " after " << kr.rounds << " rounds";
        e.note = note.str();
        e.classification = classify_trend(e.trajectory);
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace cyclab
