#include "cyclab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "cyclab/spec_strings.hpp"

namespace cyclab {

namespace {

// Monotonicity tolerance: generator round-off may produce descents of a few
// ulps that we do not want to reject as genuine violations.
constexpr double kMonotoneSlack = 1e-12;

void check_value(double v, std::size_t n, const std::string& tag) {
    if (!std::isfinite(v))
        throw std::invalid_argument("weight '" + tag + "': log omega(" + std::to_string(n) +
                                    ") is not finite");
    if (v < 0.0)
        throw std::invalid_argument("weight '" + tag + "': log omega(" + std::to_string(n) +
                                    ") = " + std::to_string(v) + " < 0 (omega must be >= 1)");
}

}  // namespace

struct WeightSequence::Impl {
    std::function<double(std::size_t)> fn;  // empty for table-backed sequences
    std::string tag;
    bool unchecked = false;
    mutable std::vector<double> values;  // values[n] = log omega(n)
    mutable std::mutex mutex;

    void materialize(std::size_t n_max) const {
        std::size_t old = values.size();
        if (n_max < old) return;
        values.reserve(n_max + 1);
        for (std::size_t n = old; n <= n_max; ++n) {
            double v = fn(n);
            check_value(v, n, tag);
            if (!unchecked && n > 0 && v < values[n - 1] - kMonotoneSlack)
                throw std::invalid_argument("weight '" + tag + "': log omega decreases at n = " +
                                            std::to_string(n));
            values.push_back(v);
        }
    }
};

WeightSequence::WeightSequence(std::function<double(std::size_t)> logw_fn, std::string tag,
                               std::size_t horizon, bool unchecked)
    : impl_(std::make_shared<Impl>()) {
    if (!logw_fn) throw std::invalid_argument("WeightSequence: null generator");
    impl_->fn = std::move(logw_fn);
    impl_->tag = std::move(tag);
    impl_->unchecked = unchecked;
    impl_->materialize(horizon);
}

WeightSequence WeightSequence::from_table(std::vector<double> logw_values, std::string tag,
                                          bool unchecked) {
    if (logw_values.empty()) throw std::invalid_argument("WeightSequence: empty table");
    auto impl = std::make_shared<Impl>();
    impl->tag = std::move(tag);
    impl->unchecked = unchecked;
    for (std::size_t n = 0; n < logw_values.size(); ++n) {
        check_value(logw_values[n], n, impl->tag);
        if (!unchecked && n > 0 && logw_values[n] < logw_values[n - 1] - kMonotoneSlack)
            throw std::invalid_argument("weight '" + impl->tag + "': log omega decreases at n = " +
                                        std::to_string(n));
    }
    impl->values = std::move(logw_values);
    WeightSequence w;
    w.impl_ = std::move(impl);
    return w;
}

double WeightSequence::logw(std::size_t n) const {
    auto& impl = *impl_;
    {
        std::lock_guard<std::mutex> lock(impl.mutex);
        if (n < impl.values.size()) return impl.values[n];
        if (impl.fn) {
            impl.materialize(n);
            return impl.values[n];
        }
    }
    throw std::out_of_range("weight '" + impl.tag + "': index " + std::to_string(n) +
                            " beyond table of size " + std::to_string(impl.values.size()));
}

double WeightSequence::omega(std::size_t n) const { return std::exp(logw(n)); }

const std::string& WeightSequence::tag() const { return impl_->tag; }

bool WeightSequence::unchecked() const { return impl_->unchecked; }

std::size_t WeightSequence::horizon() const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->values.empty() ? 0 : impl_->values.size() - 1;
}

bool WeightSequence::extendable() const { return static_cast<bool>(impl_->fn); }

ValidationReport validate(const WeightSequence& w, std::size_t horizon) {
    ValidationReport rep;
    double prev = w.logw(0);
    double prev2 = prev;
    double running_max = prev;
    std::size_t last_climb = 0;
    for (std::size_t n = 1; n <= horizon; ++n) {
        const double cur = w.logw(n);
        if (rep.monotone && cur < prev) {
            rep.monotone = false;
            rep.monotone_violation = n - 1;
        }
        if (n >= 2 && rep.logconcave && 2.0 * prev < prev2 + cur) {
            rep.logconcave = false;
            rep.logconcave_violation = n - 1;
        }
        if (cur > running_max) {
            running_max = cur;
            last_climb = n;
        }
        prev2 = prev;
        prev = cur;
    }
    for (std::size_t n = 1; n <= horizon; n *= 2) {
        rep.ratio_trend.emplace_back(n, w.logw(n) / static_cast<double>(n));
        if (n > horizon / 2) break;
    }
    // Still setting new highs in the last quarter of the window counts as
    // unbounded growth for diagnostic purposes.
    rep.grows_unbounded = running_max > 0.0 && last_climb >= horizon - horizon / 4;
    return rep;
}

WeightSequence make_power(double alpha, std::size_t horizon) {
    if (alpha < 0) throw std::invalid_argument("power weight needs alpha >= 0");
    std::ostringstream tag;
    tag << "power,alpha=" << alpha;
    return WeightSequence(
        [alpha](std::size_t n) { return alpha * std::log1p(static_cast<double>(n)); }, tag.str(),
        horizon);
}

WeightSequence make_stretched(double c, double beta, std::size_t horizon) {
    if (c <= 0 || beta <= 0 || beta >= 1)
        throw std::invalid_argument("stretched weight needs c > 0 and beta in (0,1)");
    std::ostringstream tag;
    tag << "stretched,c=" << c << ",beta=" << beta;
    return WeightSequence(
        [c, beta](std::size_t n) { return c * std::pow(static_cast<double>(n), beta); }, tag.str(),
        horizon);
}

namespace {

// log omega(n) = 2^(2^j - 1) on the block n in [2^(2^j), 2^(2^(j+1))), n >= 4;
// zero below. Each block-left endpoint sits exactly on the line n/2, so the
// ratio log omega(n)/n keeps returning to 1/2 along n = 4, 16, 256, 65536, ...
double step_logw(std::size_t n) {
    if (n < 4) return 0.0;
    int e = 0;
    for (std::size_t m = n; m > 1; m >>= 1) ++e;  // e = floor(log2 n) >= 2
    int left = 1;
    while (left * 2 <= e) left *= 2;  // largest power of two <= e, i.e. 2^j
    return std::ldexp(1.0, left - 1);
}

}  // namespace

WeightSequence make_step(std::size_t horizon) {
    return WeightSequence(step_logw, "step", horizon);
}

WeightSequence make_smoothed_step(std::size_t horizon) {
    // Caps the step plateaus with n/log^2(n+2): removes the logw(n) = n/2
    // spikes at block-left endpoints while keeping the staircase silhouette.
    return WeightSequence(
        [](std::size_t n) {
            const double x = static_cast<double>(n);
            const double l = std::log(x + 2.0);
            return std::min(step_logw(n), x / (l * l));
        },
        "smoothed_step", horizon);
}

WeightSequence make_flat(std::size_t horizon) {
    return WeightSequence([](std::size_t) { return 0.0; }, "flat", horizon, true);
}

WeightSequence make_remark3(std::size_t horizon) {
    // log omega(2n) = 0, log omega(2n+1) = sqrt(n): even indices stay at
    // omega = 1 while odd ones climb; the alternating gap is what lets a
    // squared inner function evade the norm.
    return WeightSequence(
        [](std::size_t n) {
            if (n % 2 == 0) return 0.0;
            return std::sqrt(static_cast<double>(n / 2));
        },
        "remark3", horizon, true);
}

WeightSequence make_family(const std::string& spec, std::size_t horizon, bool unchecked) {
    const KeyValueSpec kv = KeyValueSpec::parse(spec);
    const std::string family = kv.head_or("family");
    if (family == "power") return make_power(kv.number("alpha", 1.0), horizon);
    if (family == "stretched")
        return make_stretched(kv.number("c", 1.0), kv.number("beta", 0.5), horizon);
    if (family == "step") return make_step(horizon);
    if (family == "smoothed_step" || family == "smoothed-step") return make_smoothed_step(horizon);
    if (family == "flat") return make_flat(horizon);
    if (family == "remark3") return make_remark3(horizon);
    if (family == "table") {
        const std::string path = kv.str("file");
        if (path.empty()) throw std::invalid_argument("table weight needs file=PATH");
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open weight table: " + path);
        std::vector<double> values;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            values.push_back(std::stod(line));
        }
        return WeightSequence::from_table(std::move(values), "table,file=" + path, unchecked);
    }
    throw std::invalid_argument("unknown weight family: " + family);
}

double partial_sum_theorem1(const WeightSequence& w, std::size_t N) {
    double sum = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
        const double t = w.logw(n) / static_cast<double>(n);
        sum += t * t;
    }
    return sum;
}

double partial_sum_beurling(const WeightSequence& w, std::size_t N) {
    double sum = 0.0;
    for (std::size_t n = 1; n <= N; ++n)
        sum += w.logw(n) / std::pow(static_cast<double>(n), 1.5);
    return sum;
}

LadderResult ladder(const std::function<double(std::size_t)>& s, std::size_t j_max,
                    std::size_t n0, std::size_t horizon) {
    if (!s) throw std::invalid_argument("ladder: null sequence");
    if (n0 == 0) throw std::invalid_argument("ladder: n0 must be >= 1");
    const double s0 = s(n0);
    if (!(s0 > 0.0))
        throw std::invalid_argument("ladder: s(n0) must be positive (got s(" +
                                    std::to_string(n0) + ") = " + std::to_string(s0) + ")");
    LadderResult out;
    out.rungs.push_back(n0);
    double level = s0;
    std::size_t n = n0;
    while (out.rungs.size() < j_max + 1) {
        ++n;
        if (n > horizon) {
            out.truncated = true;
            break;
        }
        const double v = s(n);
        if (v < 0.0)
            throw std::invalid_argument("ladder: s(" + std::to_string(n) + ") < 0");
        if (v >= 2.0 * level) {
            out.rungs.push_back(n);
            level = v;
        }
    }
    return out;
}

LadderResult weight_ladder(const WeightSequence& w, std::size_t j_max, std::size_t n0,
                           std::size_t horizon) {
    return ladder([&w](std::size_t n) { return w.logw(n); }, j_max, n0, horizon);
}

double ladder_divergence_partial(const std::function<double(std::size_t)>& s,
                                 const std::vector<std::size_t>& rungs, std::size_t J,
                                 LadderMode mode) {
    if (J > rungs.size())
        throw std::invalid_argument("ladder partial: J exceeds available rungs");
    double sum = 0.0;
    for (std::size_t j = 0; j < J; ++j) {
        const double v = s(rungs[j]);
        const double n = static_cast<double>(rungs[j]);
        sum += (mode == LadderMode::squared) ? v * v / n : v / n;
    }
    return sum;
}

WeightSequence log_concave_envelope(const WeightSequence& w, std::size_t horizon) {
    if (horizon < 1) throw std::invalid_argument("envelope needs horizon >= 1");
    // Upper hull of (n, logw(n)) by the monotone chain: pop while the new
    // point would sit above or on the segment through the last two kept.
    std::vector<std::size_t> hull;
    hull.reserve(64);
    auto cross_ok = [&](std::size_t a, std::size_t b, std::size_t c) {
        // keep b iff it lies strictly above segment a-c (concave turn)
        const double ax = static_cast<double>(a), bx = static_cast<double>(b),
                     cx = static_cast<double>(c);
        const double ay = w.logw(a), by = w.logw(b), cy = w.logw(c);
        return (by - ay) * (cx - bx) > (cy - by) * (bx - ax);
    };
    for (std::size_t n = 0; n <= horizon; ++n) {
        while (hull.size() >= 2 && !cross_ok(hull[hull.size() - 2], hull.back(), n))
            hull.pop_back();
        hull.push_back(n);
    }
    std::vector<double> env(horizon + 1);
    for (std::size_t seg = 0; seg + 1 < hull.size(); ++seg) {
        const std::size_t a = hull[seg], b = hull[seg + 1];
        const double ya = w.logw(a), yb = w.logw(b);
        for (std::size_t n = a; n <= b; ++n) {
            const double t = (b == a) ? 0.0
                                      : static_cast<double>(n - a) / static_cast<double>(b - a);
            env[n] = ya + t * (yb - ya);
        }
    }
    if (hull.size() == 1) env[hull[0]] = w.logw(hull[0]);
    return WeightSequence::from_table(std::move(env), w.tag() + ":envelope", w.unchecked());
}

double loglog_slope(const std::vector<std::pair<std::size_t, double>>& checkpoints) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (const auto& [n, v] : checkpoints) {
        if (n == 0 || v <= 0.0) continue;
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 2) return 0.0;
    const double denom = m * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    return (m * sxy - sx * sy) / denom;
}

}  // namespace cyclab
