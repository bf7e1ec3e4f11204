#include "cyclab/disk_grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cyclab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

GridPoint make_point(double r, double theta) {
    return GridPoint{std::polar(r, theta), r, theta};
}

unsigned thread_count() {
    if (const char* env = std::getenv("CYCLAB_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n > 1) return static_cast<unsigned>(std::min<long>(n, 256));
    }
    return 1;
}

}  // namespace

DiskGrid standard_grid(int k_max, int base_angles, const std::vector<double>& atom_angles,
                       int atom_extra) {
    if (k_max < 1 || base_angles < 1) throw std::invalid_argument("standard_grid: k_max and base_angles must be >= 1");
    DiskGrid grid;
    grid.points.reserve(static_cast<std::size_t>(k_max) *
                        (static_cast<std::size_t>(base_angles) +
                         atom_angles.size() * static_cast<std::size_t>(std::max(atom_extra, 0))));
    for (int k = 1; k <= k_max; ++k) {
        const double r = 1.0 - std::ldexp(1.0, -k);
        if (r <= 0.0) {
            grid.points.push_back(make_point(0.0, 0.0));
            continue;
        }
        for (int j = 0; j < base_angles; ++j)
            grid.points.push_back(make_point(r, kTwoPi * j / base_angles));
        const double halfwidth = std::ldexp(1.0, -k);
        for (double atom : atom_angles) {
            for (int j = 0; j < atom_extra; ++j) {
                // symmetric fan across the atom, spacing shrinks with the radius
                const double frac = (j + 0.5) / atom_extra;  // in (0,1)
                const double offset = (2.0 * frac - 1.0) * halfwidth;
                grid.points.push_back(make_point(r, wrap_angle(atom + offset)));
            }
        }
    }
    std::ostringstream os;
    os << "dyadic:k_max=" << k_max << ",base_angles=" << base_angles
       << ",atoms=" << atom_angles.size() << ",atom_extra=" << atom_extra;
    grid.spec = os.str();
    return grid;
}

std::vector<GridPoint> stolz_grid(double a, double delta, int k_max, int per_radius) {
    if (a <= 0.0 || delta <= 0.0) throw std::invalid_argument("stolz_grid: a and delta must be positive");
    if (k_max < 1 || per_radius < 1) throw std::invalid_argument("stolz_grid: k_max and per_radius must be >= 1");
    std::vector<GridPoint> pts;
    // On the real axis the region |1-z|^2 <= s*(1-|z|^2) reduces to
    // x >= (1-s)/(1+s); include that deepest admissible point exactly.
    const double s = a * delta;
    const double x = std::max(0.0, (1.0 - s) / (1.0 + s));
    if (x < 1.0) pts.push_back(make_point(x, 0.0));
    for (int k = 1; k <= k_max; ++k) {
        const double r = 1.0 - std::ldexp(1.0, -k);
        if (r <= 0.0) continue;
        // |1 - r e^{i t}|^2 = (1-r)^2 + 4 r sin^2(t/2) <= s (1 - r^2)
        const double budget = s * (1.0 - r * r) - (1.0 - r) * (1.0 - r);
        if (budget <= 0.0) continue;
        const double sin_half = std::sqrt(budget / (4.0 * r));
        if (sin_half >= 1.0) continue;  // whole circle admissible would be degenerate here
        const double t_max = 2.0 * std::asin(sin_half);
        for (int j = 0; j < per_radius; ++j) {
            // symmetric fan in [-t_max, t_max], endpoints included
            const double t = (per_radius == 1)
                                 ? 0.0
                                 : -t_max + 2.0 * t_max * j / (per_radius - 1);
            pts.push_back(make_point(r, wrap_angle(t)));
        }
    }
    return pts;
}

namespace {

GridExtremum scan_chunk(const std::vector<GridPoint>& pts,
                        const std::function<double(const GridPoint&)>& f, std::size_t begin,
                        std::size_t end, bool want_min) {
    GridExtremum best;
    best.value = want_min ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
    best.index = pts.size();
    for (std::size_t i = begin; i < end; ++i) {
        const double v = f(pts[i]);
        const bool better = want_min ? (v < best.value) : (v > best.value);
        if (better || best.index == pts.size()) {
            best.value = v;
            best.index = i;
            best.point = pts[i];
        }
    }
    return best;
}

GridExtremum scan(const std::vector<GridPoint>& pts,
                  const std::function<double(const GridPoint&)>& f, bool want_min) {
    if (pts.empty()) throw std::invalid_argument("grid extremum over an empty grid");
    const unsigned workers = std::min<unsigned>(thread_count(), static_cast<unsigned>(pts.size()));
    if (workers <= 1) return scan_chunk(pts, f, 0, pts.size(), want_min);
    std::vector<GridExtremum> partial(workers);
    std::vector<std::thread> threads;
    const std::size_t chunk = (pts.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t b = static_cast<std::size_t>(w) * chunk;
        const std::size_t e = std::min(pts.size(), b + chunk);
        threads.emplace_back([&, w, b, e] { partial[w] = scan_chunk(pts, f, b, e, want_min); });
    }
    for (auto& t : threads) t.join();
    GridExtremum best = partial[0];
    for (unsigned w = 1; w < workers; ++w) {
        const auto& cand = partial[w];
        if (cand.index >= pts.size()) continue;
        const bool better = want_min ? (cand.value < best.value) : (cand.value > best.value);
        // equal values resolve to the smallest index so chunking cannot matter
        if (best.index >= pts.size() || better ||
            (cand.value == best.value && cand.index < best.index))
            best = cand;
    }
    return best;
}

}  // namespace

GridExtremum grid_min(const std::vector<GridPoint>& pts,
                      const std::function<double(const GridPoint&)>& f) {
    return scan(pts, f, true);
}

GridExtremum grid_max(const std::vector<GridPoint>& pts,
                      const std::function<double(const GridPoint&)>& f) {
    return scan(pts, f, false);
}

}  // namespace cyclab
