#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "cyclab/bergman.hpp"
#include "cyclab/series.hpp"
#include "cyclab/weights.hpp"
#include "test_support.hpp"

using namespace cyclab;
using testsupport::Rng;

namespace {

const AtomicSingularMeasure kAtom = AtomicSingularMeasure::point_mass(1.0, 0.0);

TaylorSeries shifted(const TaylorSeries& u, std::size_t k, std::size_t M) {
    return multiply(TaylorSeries::monomial(k), u, M);
}

}  // namespace

TEST_CASE("space norms against hand sums") {
    const WeightSequence flat = make_flat(64);
    TaylorSeries f{{cdouble{1.0, 0.0}, cdouble{-1.0, 0.0}}};  // 1 - z
    CHECK(space_norm(flat, f) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    const WeightSequence p = make_power(1.0, 64);  // omega = n+1, rho = (n+1)^-2
    TaylorSeries g{{cdouble{1.0, 0.0}, cdouble{1.0, 0.0}}};
    CHECK(space_norm(p, g) == doctest::Approx(std::sqrt(1.0 + 0.25)).epsilon(1e-14));

    // monomial norm ||z^n|| = 1/omega(n)
    CHECK(space_norm(p, TaylorSeries::monomial(3)) == doctest::Approx(0.25).epsilon(1e-14));

    const cdouble ip = space_inner_product(p, TaylorSeries::monomial(1), TaylorSeries::monomial(1));
    CHECK(ip.real() == doctest::Approx(0.25).epsilon(1e-14));
    const cdouble zero = space_inner_product(p, TaylorSeries::one(), TaylorSeries::monomial(1));
    CHECK(std::abs(zero) == 0.0);
}

TEST_CASE("H2 oracle: gram distance with a flat weight is the projection formula") {
    const WeightSequence flat = make_flat(4096);
    const TaylorSeries u = inner_coeffs(kAtom, 4096);
    const double expect = 1.0 - std::exp(-2.0);

    const DistanceResult d8 = gram_distance(flat, u, 8, 4096);
    CHECK(std::abs(d8.dist_sq - expect) < 1e-9);
    CHECK(d8.gram_condition == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(!d8.ridge_applied);

    // exact for every N >= 0: only the k = 0 span vector sees the constant
    const DistanceResult d0 = gram_distance(flat, u, 0, 4096);
    CHECK(std::abs(d0.dist_sq - expect) < 1e-9);
    CHECK(std::abs(d0.dist_sq - d8.dist_sq) < 1e-12);

    // plain truncation loses the polynomial coefficient tail: error ~ M^(-1/2)
    const DistanceResult trunc = gram_distance(flat, u, 8, 4096, GramTail::truncated);
    CHECK(trunc.dist_sq < expect - 1e-4);
}

TEST_CASE("distances shrink with span degree and respect M-refinement") {
    const WeightSequence w = make_power(1.0, 8192);
    const std::vector<std::size_t> degrees = {1, 2, 4, 8, 16};
    const std::vector<DistanceResult> scan = cyclicity_scan(w, kAtom, degrees, 2048);
    REQUIRE(scan.size() == degrees.size());
    for (std::size_t i = 0; i + 1 < scan.size(); ++i)
        CHECK(scan[i + 1].dist <= scan[i].dist + 1e-12);
    for (const DistanceResult& r : scan) {
        CHECK(r.dist_sq >= 0.0);
        CHECK(r.dist_sq <= 1.0 + 1e-12);
        CHECK(r.tail_bound >= 0.0);
    }

    // refining M can only move dist within the declared tail budget
    const TaylorSeries u1 = inner_coeffs(kAtom, 1024);
    const TaylorSeries u2 = inner_coeffs(kAtom, 4096);
    const DistanceResult m1 = gram_distance(w, u1, 8, 1024);
    const DistanceResult m2 = gram_distance(w, u2, 8, 4096);
    CHECK(m2.dist >= m1.dist - m1.tail_bound - 1e-12);
}

TEST_CASE("gram matrix built from public inner products is Hermitian PSD") {
    const WeightSequence w = make_power(1.0, 512);
    const std::size_t N = 6, M = 256;
    const TaylorSeries u = inner_coeffs(kAtom, M);

    Eigen::MatrixXcd G(N + 1, N + 1);
    for (std::size_t j = 0; j <= N; ++j)
        for (std::size_t k = 0; k <= N; ++k)
            G(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
                space_inner_product(w, shifted(u, j, M), shifted(u, k, M));

    CHECK((G - G.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10 * G.real().trace());
}

TEST_CASE("multiplier contraction on random polynomials") {
    // ||f phi|| <= (circle sup of f + 1e-6) ||phi|| for monotone weights;
    // 200 instances in the acceptance run, a fast slice here
    Rng rng(987654321);
    const WeightSequence w = make_power(1.0, 256);
    const WeightSequence ws = make_stretched(1.0, 0.5, 256);
    for (int i = 0; i < 40; ++i) {
        const TaylorSeries f{rng.complex_coeffs(1 + rng.index(16), 1.0)};
        const TaylorSeries phi{rng.complex_coeffs(1 + rng.index(32), 1.0)};
        const std::size_t M = f.degree() + phi.degree();
        const TaylorSeries prod = multiply(f, phi, M);
        const double sup =
            sup_circle([&f](cdouble z) { return f.eval(z); }, 1.0 - 1e-6, 4096) + 1e-6;
        for (const WeightSequence* ww : {&w, &ws}) {
            const double lhs = space_norm(*ww, prod);
            const double rhs = sup * space_norm(*ww, phi);
            CHECK(lhs <= rhs * (1.0 + 1e-12));
        }
    }

    // shift case is an exact contraction: ||z phi|| <= ||phi||
    for (int i = 0; i < 40; ++i) {
        const TaylorSeries phi{rng.complex_coeffs(1 + rng.index(32), 1.0)};
        const TaylorSeries zphi = multiply(TaylorSeries::monomial(1), phi, phi.degree() + 1);
        CHECK(space_norm(w, zphi) <= space_norm(w, phi));
        CHECK(space_norm(ws, zphi) <= space_norm(ws, phi));
    }
}

TEST_CASE("squared measure spans sit no closer than the base span") {
    // computable direction of the cyclicity transfer: dist(1, span z^k U^2)
    // >= dist(1, span z^k U at doubled degree) - tail slack
    const WeightSequence w = make_power(1.0, 4096);
    const std::size_t M = 1024;
    const TaylorSeries u1 = inner_coeffs(kAtom, M);
    const TaylorSeries u2 = inner_coeffs(AtomicSingularMeasure::point_mass(2.0, 0.0), M);
    const DistanceResult lhs = gram_distance(w, u2, 8, M);
    const DistanceResult rhs = gram_distance(w, u1, 16, M);
    CHECK(lhs.dist >= rhs.dist - lhs.tail_bound - rhs.tail_bound - 1e-9);
}

TEST_CASE("tail bound mechanics") {
    const WeightSequence w = make_power(1.0, 8192);
    const double t1 = truncation_tail_bound(w, 1.0, 1024, 8);
    const double t2 = truncation_tail_bound(w, 1.0, 4096, 8);
    CHECK(t1 > 0.0);
    CHECK(t2 < t1);  // larger truncation, smaller discarded mass

    // flat fallback stays finite and positive
    const double tf = truncation_tail_bound(make_flat(64), 1.0, 4096, 8);
    CHECK(tf > 0.0);
}

TEST_CASE("remark3 weight pins the distance floor for all span degrees") {
    // under log omega(2n) = 0, the even-coefficient projection keeps
    // dist >= sqrt(1 - e^-2) - slush no matter how many shifts join the span
    const double floor = std::sqrt(1.0 - std::exp(-2.0));
    for (std::size_t N : {1, 8, 32, 64}) {
        const DistanceResult r = remark3_counterexample(kAtom, N, 4096);
        CHECK(r.dist >= floor - 0.01);
    }
}

TEST_CASE("scan results are deterministic") {
    const WeightSequence w = make_stretched(1.0, 0.5, 4096);
    const std::vector<std::size_t> degrees = {2, 8};
    const auto a = cyclicity_scan(w, kAtom, degrees, 1024);
    const auto b = cyclicity_scan(w, kAtom, degrees, 1024);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].dist == b[i].dist);
        CHECK(a[i].gram_condition == b[i].gram_condition);
    }
}
