#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cyclab/pipeline.hpp"
#include "test_support.hpp"

using namespace cyclab;

namespace {
const double kPi = 3.14159265358979323846;
const AtomicSingularMeasure kAtom = AtomicSingularMeasure::point_mass(1.0, 0.0);
}

TEST_CASE("mode names round trip") {
    for (PipelineMode m :
         {PipelineMode::theorem1, PipelineMode::theorem2, PipelineMode::theorem2_monomial})
        CHECK(parse_pipeline_mode(to_string(m)) == m);
    CHECK_THROWS_AS(parse_pipeline_mode("theorem3"), std::invalid_argument);
}

TEST_CASE("theorem-1 plan: ladder arithmetic on the sqrt weight") {
    const WeightSequence w = make_stretched(1.0, 0.5, kDefaultHorizon);
    // threshold (4 * 0.3 * 1)^2 = 1.44; each rung contributes
    // (log w(n_j))^2 / n_j = 1, so two rungs suffice
    const AllocationPlan plan = plan_theorem1(w, kAtom, 1, 0.3);
    CHECK(plan.mode == PipelineMode::theorem1);
    CHECK(plan.block_count == 2);
    REQUIRE(plan.rungs.size() == 2);
    CHECK(plan.rungs[0] == 16);  // ladder 1,4,16,64,...; block j of a j0 plan sits at rung j0+j
    CHECK(plan.rungs[1] == 64);
    CHECK(plan.achieved_partial >= plan.threshold);
    CHECK(plan.constant_used == doctest::Approx(0.3));

    double sumsq = 0.0;
    for (double l : plan.lambdas) sumsq += l * l;
    CHECK(sumsq == doctest::Approx(1.0).epsilon(1e-12));

    // lambda_j <= (4 A c)^{-1} log w(m_j)/sqrt(m_j)
    const double inv_thresh = 1.0 / (4.0 * 0.3 * 1.0);
    for (std::size_t j = 0; j < plan.rungs.size(); ++j) {
        const double m = static_cast<double>(plan.rungs[j]);
        CHECK(plan.lambdas[j] <= inv_thresh * w.logw(plan.rungs[j]) / std::sqrt(m) + 1e-12);
    }

    // doubling bookkeeping: prefix sums of log w stay within twice the last
    double prefix = 0.0;
    for (std::size_t j = 0; j < plan.rungs.size(); ++j) {
        prefix += w.logw(plan.rungs[j]);
        CHECK(prefix <= 2.0 * w.logw(plan.rungs[j]) + 1e-12);
    }
}

TEST_CASE("theorem-1 plan failure paths") {
    const WeightSequence flat = make_flat(1024);
    CHECK_THROWS_AS(plan_theorem1(flat, kAtom, 1, 0.3), std::invalid_argument);

    // an honest constant makes the threshold unreachable inside the horizon
    const WeightSequence w = make_stretched(1.0, 0.5, kDefaultHorizon);
    try {
        plan_theorem1(w, kAtom, 1, 3.0);  // threshold 144, ~1 per rung, <16 rungs fit
        FAIL("expected ThresholdUnreachable");
    } catch (const ThresholdUnreachable& e) {
        CHECK(e.achieved < e.threshold);
        CHECK(e.threshold == doctest::Approx(144.0));
    }
}

TEST_CASE("theorem-2 plan: lambda split follows the majorant ladder") {
    const LambdaMajorant inv = make_lambda("power,alpha=1");
    const AllocationPlan plan = plan_theorem2(inv, 1, 0.2);
    CHECK(plan.mode == PipelineMode::theorem2);
    CHECK(plan.block_count >= 1);
    CHECK(plan.threshold == doctest::Approx(4.0 * kPi * kPi * 0.04));
    CHECK(plan.achieved_partial >= plan.threshold);
    CHECK(plan.block_hypothesis_ok.size() == plan.block_count);

    double sumsq = 0.0;
    for (double l : plan.lambdas) sumsq += l * l;
    CHECK(sumsq == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(plan_theorem2(inv, 1, 0.2, PipelineMode::theorem1), std::invalid_argument);

    // integrable majorant: sum Lambda(1/n)/n^2 converges below any honest bar
    const LambdaMajorant root = make_lambda("power,alpha=0.5");
    CHECK_THROWS_AS(plan_theorem2(root, 1, 0.2), ThresholdUnreachable);
}

TEST_CASE("theorem-1 run: residual within the triangle audit") {
    const WeightSequence w = make_stretched(1.0, 0.5, kDefaultHorizon);
    const AllocationPlan plan = plan_theorem1(w, kAtom, 1, 0.3);
    Theorem1Options opt;
    opt.bezout_degree = 24;
    opt.truncation = 512;
    const PipelineRun run = run_theorem1(plan, w, kAtom, opt);

    REQUIRE(run.blocks.size() == plan.block_count);
    CHECK(run.residual >= 0.0);
    CHECK(run.residual <= run.triangle_audit * (1.0 + 1e-9) + 1e-9);
    CHECK(run.note.find("product coefficient mass") != std::string::npos);
    // the rung-16 block converges tightly at degree 24; the rung-64 block is
    // under-resolved at that degree (residual ~0.8) and the triangle audit is
    // what keeps the run-level inequality honest
    REQUIRE(!run.blocks.empty());
    CHECK(run.blocks.front().solver_residual <= 1e-3);
    for (const BlockDiagnostics& b : run.blocks) {
        CHECK(b.solver_residual >= 0.0);
        CHECK(std::isfinite(b.solver_residual));
        CHECK(b.f_sup > 0.0);
        CHECK(b.block_norm >= 0.0);
    }

    // determinism
    const PipelineRun again = run_theorem1(plan, w, kAtom, opt);
    CHECK(again.residual == run.residual);
    CHECK(again.triangle_audit == run.triangle_audit);
}

TEST_CASE("theorem-1 run: empty measure is a no-op") {
    const WeightSequence w = make_stretched(1.0, 0.5, 4096);
    AllocationPlan plan = plan_theorem1(w, kAtom, 1, 0.3);
    const PipelineRun run = run_theorem1(plan, w, AtomicSingularMeasure{}, {});
    CHECK(run.residual == 0.0);
    CHECK(!run.note.empty());
}

TEST_CASE("theorem-2 run: residual, audit, and mode gates") {
    const LambdaMajorant inv = make_lambda("power,alpha=1");
    const AllocationPlan plan = plan_theorem2(inv, 1, 0.2);
    Theorem2Options opt;
    opt.factor_degree = 48;
    opt.grid_kmax = 12;
    opt.grid_angles = 128;
    const PipelineRun run = run_theorem2(plan, inv, opt);

    CHECK(run.residual >= 0.0);
    CHECK(run.residual <= run.triangle_audit * (1.0 + 1e-9) + 1e-9);
    REQUIRE(run.blocks.size() == plan.block_count);

    // boundary-set gating: theorem2 needs the point majorant, monomial the circle one
    const LambdaMajorant circle = make_lambda("power,alpha=1,boundary=circle");
    CHECK_THROWS_AS(run_theorem2(plan, circle, opt), std::invalid_argument);

    AllocationPlan mono = plan_theorem2(circle, 1, 0.2, PipelineMode::theorem2_monomial);
    CHECK_THROWS_AS(run_theorem2(mono, inv, opt), std::invalid_argument);
    const PipelineRun mrun = run_theorem2(mono, circle, opt);
    CHECK(mrun.residual >= 0.0);

    // zero inner mass: all factors trivial, residual collapses
    Theorem2Options trivial = opt;
    trivial.inner_mass = 0.0;
    const PipelineRun trun = run_theorem2(plan, inv, trivial);
    CHECK(trun.residual == 0.0);
    CHECK(trun.note.find("inner mass 0") != std::string::npos);
}

TEST_CASE("trend classification") {
    CHECK(classify_trend({}) == TrendClass::plateau);
    CHECK(classify_trend({5.0}) == TrendClass::plateau);
    CHECK(classify_trend({4.0, 1.0}) == TrendClass::decay);
    CHECK(classify_trend({1.0, 0.95}) == TrendClass::plateau);
    CHECK(classify_trend({1.0, 0.8}) == TrendClass::mixed);
    CHECK(classify_trend({1.0, 2.0, 0.4}) == TrendClass::decay);
    CHECK(to_string(TrendClass::decay) == "decay");
    CHECK(to_string(TrendClass::plateau) == "plateau");
    CHECK(to_string(TrendClass::mixed) == "mixed");
}

TEST_CASE("contrast scans produce labeled trajectories") {
    const ContrastReport rep = contrast_scans(
        kAtom, {"stretched,c=1,beta=0.5", "power,alpha=2"}, {2, 4, 8}, 512);
    REQUIRE(rep.entries.size() == 2);
    for (const ContrastEntry& e : rep.entries) {
        CHECK(e.sweep_keys.size() == 3);
        CHECK(e.trajectory.size() == 3);
        CHECK(!e.partial_sums.empty());
        CHECK(!e.label.empty());
    }
}

TEST_CASE("contrast theorem-2 annotates stalls and keldys outcomes") {
    Theorem2Options opt;
    opt.factor_degree = 32;
    opt.grid_kmax = 10;
    opt.grid_angles = 96;
    const ContrastReport rep =
        contrast_theorem2({"power,alpha=1", "power,alpha=0.5"}, {1, 2}, 0.2, opt);
    REQUIRE(rep.entries.size() == 2);
    CHECK(rep.entries[0].note.find("keldys@0: diverged") != std::string::npos);
    CHECK(rep.entries[0].trajectory.size() == 2);
    // integrable majorant stalls at planning and reports the Keldys convergence
    CHECK(rep.entries[1].note.find("planning stalled") != std::string::npos);
    CHECK(rep.entries[1].note.find("keldys@0: converged") != std::string::npos);
    CHECK(rep.entries[1].trajectory.empty());
}
