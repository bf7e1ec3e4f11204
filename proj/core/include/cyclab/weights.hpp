#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyclab {

inline constexpr std::size_t kDefaultHorizon = std::size_t{1} << 16;

// Nondecreasing weight sequence omega(n) >= 1, stored and manipulated as
// log omega(n) throughout (the step family reaches omega = e^32768 inside the
// default horizon, so linear-domain storage is not an option).
//
// Values are materialized eagerly up to the construction horizon and extended
// lazily (under a lock) beyond it for generator-backed families; table-backed
// sequences throw std::out_of_range past their data. Construction enforces
// log omega >= 0 always, and monotonicity unless `unchecked` is set; the
// unchecked escape hatch exists for deliberate counterexample weights.
class WeightSequence {
  public:
    WeightSequence(std::function<double(std::size_t)> logw_fn, std::string tag,
                   std::size_t horizon = kDefaultHorizon, bool unchecked = false);

    static WeightSequence from_table(std::vector<double> logw_values, std::string tag = "table",
                                     bool unchecked = false);

    double logw(std::size_t n) const;
    double omega(std::size_t n) const;

    const std::string& tag() const;
    bool unchecked() const;
    // Largest index with materialized (and validated) values so far.
    std::size_t horizon() const;
    bool extendable() const;

  private:
    WeightSequence() = default;
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

struct ValidationReport {
    bool monotone = true;
    std::optional<std::size_t> monotone_violation;  // first n with logw(n+1) < logw(n)
    bool logconcave = true;
    std::optional<std::size_t> logconcave_violation;  // first n with 2logw(n) < logw(n-1)+logw(n+1)
    std::vector<std::pair<std::size_t, double>> ratio_trend;  // (n, logw(n)/n) at n = 2^k
    bool grows_unbounded = false;  // heuristic: running max still climbing near the horizon
};

ValidationReport validate(const WeightSequence& w, std::size_t horizon);

// Family spec strings: "power,alpha=1.0" (also accepted with a leading
// "family=power"), "stretched,c=1,beta=0.5", "step", "smoothed_step", "flat",
// "remark3", "table,file=PATH" (one log-value per line).
WeightSequence make_family(const std::string& spec, std::size_t horizon = kDefaultHorizon,
                           bool unchecked = false);

WeightSequence make_power(double alpha, std::size_t horizon = kDefaultHorizon);
WeightSequence make_stretched(double c, double beta, std::size_t horizon = kDefaultHorizon);
WeightSequence make_step(std::size_t horizon = kDefaultHorizon);
WeightSequence make_smoothed_step(std::size_t horizon = kDefaultHorizon);
WeightSequence make_flat(std::size_t horizon = kDefaultHorizon);        // omega == 1, unchecked
WeightSequence make_remark3(std::size_t horizon = kDefaultHorizon);     // omega(2n)=1, unchecked

// Sum_{n=1..N} (log omega(n))^2 / n^2, left-to-right.
double partial_sum_theorem1(const WeightSequence& w, std::size_t N);
// Sum_{n=1..N} log omega(n) / n^{3/2}, left-to-right.
double partial_sum_beurling(const WeightSequence& w, std::size_t N);

struct LadderResult {
    std::vector<std::size_t> rungs;
    bool truncated = false;  // horizon exhausted before the requested rung count
};

// Doubling ladder: rungs[0] = n0, rungs[j+1] = min{n > rungs[j] : s(n) >= 2 s(rungs[j])}.
// Generic in s so it serves both the log-omega and the Lambda(1/n) bookkeeping.
// Requires s(n0) > 0 and s nonnegative up to the horizon.
LadderResult ladder(const std::function<double(std::size_t)>& s, std::size_t j_max,
                    std::size_t n0 = 1, std::size_t horizon = kDefaultHorizon);

LadderResult weight_ladder(const WeightSequence& w, std::size_t j_max, std::size_t n0 = 1,
                           std::size_t horizon = kDefaultHorizon);

enum class LadderMode { squared, plain };

// squared: Sum_{j<J} s(n_j)^2 / n_j.   plain: Sum_{j<J} s(n_j) / n_j.
double ladder_divergence_partial(const std::function<double(std::size_t)>& s,
                                 const std::vector<std::size_t>& rungs, std::size_t J,
                                 LadderMode mode);

// Least concave majorant of n -> log omega(n) on [0, horizon]: upper hull of
// the points (n, logw(n)) via the monotone chain, then piecewise-linear
// interpolation. Output is pointwise >= input and discretely concave.
WeightSequence log_concave_envelope(const WeightSequence& w, std::size_t horizon);

// Least-squares slope of log(value) against log(n); heuristic divergence
// diagnostic for partial-sum checkpoints. Points with value <= 0 are skipped;
// returns 0 when fewer than two usable points remain.
double loglog_slope(const std::vector<std::pair<std::size_t, double>>& checkpoints);

}  // namespace cyclab
