#include "cyclab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cyclab {
namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kNodes[15] = {
    -0.98799251802048542849, -0.93727339240070590431, -0.84820658341042721620,
    -0.72441773136017004742, -0.57097217260853884754, -0.39415134707756336990,
    -0.20119409399743452230, 0.0,
    0.20119409399743452230,  0.39415134707756336990,  0.57097217260853884754,
    0.72441773136017004742,  0.84820658341042721620,  0.93727339240070590431,
    0.98799251802048542849};
constexpr double kWeights[15] = {
    0.03075324199611726835, 0.07036604748810812471, 0.10715922046717193501,
    0.13957067792615431445, 0.16626920581699393355, 0.18616100001556221103,
    0.19843148532711157646, 0.20257824192556127288, 0.19843148532711157646,
    0.18616100001556221103, 0.16626920581699393355, 0.13957067792615431445,
    0.10715922046717193501, 0.07036604748810812471, 0.03075324199611726835};

template <typename Value>
Value gauss15(const std::function<Value(double)>& f, double a, double b, std::size_t& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Value acc = kWeights[7] * f(mid);
    for (int i = 0; i < 15; ++i) {
        if (i == 7) continue;
        acc += kWeights[i] * f(mid + half * kNodes[i]);
    }
    evals += 15;
    return half * acc;
}

template <typename Value, typename Result>
void adapt(const std::function<Value(double)>& f, double a, double b, Value whole,
           double rel_tol, double abs_floor, int depth, int max_depth, Result& out) {
    const double mid = 0.5 * (a + b);
    const Value left = gauss15<Value>(f, a, mid, out.evaluations);
    const Value right = gauss15<Value>(f, mid, b, out.evaluations);
    const Value sum = left + right;
    const double diff = std::abs(sum - whole);
    if (diff <= std::max(rel_tol * std::abs(sum), abs_floor) || depth >= max_depth) {
        out.value += sum;
        out.error += diff;
        if (depth >= max_depth && diff > std::max(rel_tol * std::abs(sum), abs_floor))
            out.converged = false;
        return;
    }
    adapt(f, a, mid, left, rel_tol, abs_floor, depth + 1, max_depth, out);
    adapt(f, mid, b, right, rel_tol, abs_floor, depth + 1, max_depth, out);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_floor, int max_depth) {
    QuadratureResult out;
    if (a == b) return out;
    const double whole = gauss15<double>(f, a, b, out.evaluations);
    adapt<double>(f, a, b, whole, rel_tol, abs_floor, 0, max_depth, out);
    return out;
}

ComplexQuadratureResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                          double a, double b, double rel_tol, double abs_floor,
                                          int max_depth) {
    ComplexQuadratureResult out;
    if (a == b) return out;
    const std::complex<double> whole = gauss15<std::complex<double>>(f, a, b, out.evaluations);
    adapt<std::complex<double>>(f, a, b, whole, rel_tol, abs_floor, 0, max_depth, out);
    return out;
}

CutoffLadderResult integrate_cutoff_ladder(const std::function<std::complex<double>(double)>& f,
                                           double span, double rel_tol, int max_rounds,
                                           double divergence_ratio) {
    if (span <= 0.0) throw std::invalid_argument("integrate_cutoff_ladder: span must be positive");
    CutoffLadderResult out;
    std::complex<double> prev_total{0.0, 0.0};
    double prev_delta = 0.0;
    int stagnant = 0;  // rounds whose increment refused to shrink
    int stable = 0;    // consecutive rounds below the stabilisation threshold
    for (int j = 0; j < max_rounds; ++j) {
        const double cut = span * std::ldexp(1.0, -(3 + j));
        const auto piece = integrate_complex(f, cut, span - cut, rel_tol * 1e-2);
        const std::complex<double> total = piece.value;
        const double delta = std::abs(total - prev_total);
        out.rounds = j + 1;
        out.value = total;
        out.prev_delta = prev_delta;
        out.last_delta = delta;
        if (j > 0) {
            if (delta <= rel_tol * (std::abs(total) + 1.0)) {
                if (++stable >= 2) {
                    out.converged = true;
                    return out;
                }
            } else {
                stable = 0;
            }
            if (prev_delta > 0.0 && delta >= divergence_ratio * prev_delta)
                ++stagnant;
            else
                stagnant = 0;
            if (stagnant >= 6) {
                out.diverged = true;
                return out;
            }
        }
        prev_total = total;
        prev_delta = delta;
    }
    // Cap reached without two quiet rounds: growing totals mean divergence,
    // anything else is honest non-convergence.
    out.diverged = out.last_delta >= divergence_ratio * out.prev_delta && out.prev_delta > 0.0;
    return out;
}

}  // namespace cyclab
