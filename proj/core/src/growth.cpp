#include "cyclab/growth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cyclab/quadrature.hpp"
#include "cyclab/spec_strings.hpp"

namespace cyclab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double log_sum_exp(double a, double b) {
    const double hi = std::max(a, b), lo = std::min(a, b);
    if (hi == -kInf) return hi;
    return hi + std::log1p(std::exp(lo - hi));
}

void require_in_disk(cdouble z, const char* who) {
    if (std::norm(z) >= 1.0) throw std::domain_error(std::string(who) + " needs |z| < 1");
}

}  // namespace

std::string to_string(BoundarySet e) {
    return e == BoundarySet::point_one ? "point" : "circle";
}

double boundary_distance(BoundarySet e, cdouble z) {
    return e == BoundarySet::point_one ? std::abs(1.0 - z) : 1.0 - std::abs(z);
}

LambdaMajorant::LambdaMajorant(std::function<double(double)> value, std::string tag,
                               BoundarySet E, bool unchecked)
    : value_(std::move(value)), tag_(std::move(tag)), E_(E), unchecked_(unchecked) {
    if (!value_) throw std::invalid_argument("LambdaMajorant: null function");
    if (unchecked_) return;
    // spot-check positivity and monotone decrease on a log-spaced sweep of
    // (0, 2]: t_i from 2 down to ~2e-9
    double prev = value_(2.0);
    if (!(prev > 0.0)) throw std::invalid_argument("majorant '" + tag_ + "' not positive at t=2");
    for (int i = 1; i < 256; ++i) {
        const double t = 2.0 * std::exp(-static_cast<double>(i) * (20.0 / 255.0));
        const double v = value_(t);
        if (!(v > 0.0))
            throw std::invalid_argument("majorant '" + tag_ + "' not positive at t=" +
                                        std::to_string(t));
        if (v < prev * (1.0 - 1e-12))
            throw std::invalid_argument("majorant '" + tag_ + "' increases with t near t=" +
                                        std::to_string(t));
        prev = v;
    }
}

double LambdaMajorant::operator()(double t) const { return value_(t); }

LambdaMajorant lambda_power(double alpha, BoundarySet E) {
    if (!(alpha > 0.0)) throw std::invalid_argument("power majorant needs alpha > 0");
    std::ostringstream tag;
    tag << "power,alpha=" << alpha;
    return LambdaMajorant(
        [alpha](double t) { return t > 0.0 ? std::pow(t, -alpha) : kInf; }, tag.str(), E);
}

LambdaMajorant lambda_logpow(double beta, BoundarySet E) {
    if (!(beta > 0.0)) throw std::invalid_argument("logpow majorant needs beta > 0");
    std::ostringstream tag;
    tag << "logpow,beta=" << beta;
    return LambdaMajorant(
        [beta](double t) {
            if (t <= 0.0) return kInf;
            return std::pow(std::log(std::numbers::e + 1.0 / t), beta);
        },
        tag.str(), E);
}

LambdaMajorant lambda_const(double c, BoundarySet E, bool unchecked) {
    if (!(c > 0.0) && !unchecked)
        throw std::invalid_argument("constant majorant needs c > 0 (or unchecked)");
    std::ostringstream tag;
    tag << "const,c=" << c;
    return LambdaMajorant([c](double) { return c; }, tag.str(), E, unchecked);
}

LambdaMajorant make_lambda(const std::string& spec) {
    const KeyValueSpec kv = KeyValueSpec::parse(spec);
    const std::string family = kv.head_or("lambda");

    BoundarySet E = BoundarySet::point_one;
    const std::string b = kv.str("boundary", "point");
    if (b == "circle" || b == "full" || b == "t")
        E = BoundarySet::full_circle;
    else if (b != "point" && b != "one")
        throw std::invalid_argument("unknown boundary set: " + b);

    if (family == "power") return lambda_power(kv.number("alpha", 1.0), E);
    if (family == "logpow") return lambda_logpow(kv.number("beta", 1.0), E);
    if (family == "const") {
        const double c = kv.number("c", 1.0);
        return lambda_const(c, E, c <= 0.0);
    }
    if (family == "table") {
        const std::string path = kv.str("file");
        if (path.empty()) throw std::invalid_argument("table majorant needs file=PATH");
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open majorant table: " + path);
        std::vector<std::pair<double, double>> rows;  // (t, value)
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            const std::size_t comma = line.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("majorant table rows must be t,value");
            rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
        }
        if (rows.size() < 2) throw std::invalid_argument("majorant table needs >= 2 rows");
        std::sort(rows.begin(), rows.end());
        // piecewise-linear in log t, clamped to the end values outside the
        // tabulated range (keeps the extension monotone)
        auto fn = [rows](double t) {
            if (t <= rows.front().first) return rows.front().second;
            if (t >= rows.back().first) return rows.back().second;
            auto it = std::upper_bound(rows.begin(), rows.end(), std::make_pair(t, kInf));
            const auto& [t1, v1] = *(it - 1);
            const auto& [t2, v2] = *it;
            const double u = (std::log(t) - std::log(t1)) / (std::log(t2) - std::log(t1));
            return v1 + u * (v2 - v1);
        };
        return LambdaMajorant(fn, "table,file=" + path, E);
    }
    throw std::invalid_argument("unknown majorant family: " + family);
}

std::vector<IntegrabilityRow> integrability_partials(const LambdaMajorant& L,
                                                     const std::vector<double>& eps_list) {
    std::vector<IntegrabilityRow> out;
    out.reserve(eps_list.size());
    for (double eps : eps_list) {
        if (!(eps > 0.0) || eps >= 2.0)
            throw std::invalid_argument("integrability_partials: eps must lie in (0,2)");
        IntegrabilityRow row;
        row.eps = eps;
        const QuadratureResult q = integrate([&L](double t) { return L(t); }, eps, 2.0);
        row.integral = q.value;
        row.integral_converged = q.converged;
        const std::size_t n_max = static_cast<std::size_t>(std::ceil(1.0 / eps));
        double sum = 0.0;
        for (std::size_t n = 1; n <= n_max; ++n)
            sum += L(1.0 / static_cast<double>(n)) / (static_cast<double>(n) * static_cast<double>(n));
        row.series_sum = sum;
        out.push_back(row);
    }
    return out;
}

double bnorm_estimate(const std::function<double(cdouble)>& log_abs_f, const LambdaMajorant& L,
                      const DiskGrid& grid) {
    const BoundarySet E = L.boundary();
    const GridExtremum m = grid_max(grid.points, [&](const GridPoint& p) {
        const double lam = L(boundary_distance(E, p.z));
        const double lf = log_abs_f(p.z);
        if (lam == kInf) return -kInf;  // hard zero from the weight
        return lf - lam;
    });
    return m.value;
}

cdouble outer_fdelta_log_quad(double lambda_delta, double delta, cdouble z) {
    require_in_disk(z, "outer_fdelta_log_quad");
    if (!(delta > 0.0) || delta >= kPi)
        throw std::invalid_argument("outer_fdelta_log_quad: delta must lie in (0, pi)");
    if (lambda_delta == 0.0) return {0.0, 0.0};
    const auto kernel_pair = [z](double t) -> cdouble {
        const cdouble ep = std::polar(1.0, t), em = std::polar(1.0, -t);
        return (ep + z) / (ep - z) + (em + z) / (em - z);
    };
    const ComplexQuadratureResult q = integrate_complex(kernel_pair, delta, kPi);
    if (!q.converged)
        throw std::runtime_error("outer_fdelta_log_quad: kernel quadrature did not converge");
    return -lambda_delta * q.value;
}

cdouble outer_fdelta_log(double lambda_delta, double delta, cdouble z) {
    require_in_disk(z, "outer_fdelta_log");
    if (!(delta > 0.0) || delta >= kPi)
        throw std::invalid_argument("outer_fdelta_log: delta must lie in (0, pi)");
    // Antiderivative of the Herglotz kernel is t - 2i Log(1 - z e^{-it});
    // both boundary factors below keep positive real part, so the principal
    // branch never wraps and the piecewise sum collapses to this expression.
    const cdouble w_minus = 1.0 - z * std::polar(1.0, delta);   // t = -delta endpoint
    const cdouble w_plus = 1.0 - z * std::polar(1.0, -delta);   // t = +delta endpoint
    const cdouble J =
        2.0 * (kPi - delta) + cdouble{0.0, 2.0} * (std::log(w_plus) - std::log(w_minus));
    return -lambda_delta * J;
}

double outer_fdelta_log_abs(double lambda_delta, double delta, cdouble z) {
    return outer_fdelta_log(lambda_delta, delta, z).real();
}

double harmonic_measure_arc(cdouble z, double delta) {
    require_in_disk(z, "harmonic_measure_arc");
    if (!(delta > 0.0) || delta > kPi)
        throw std::invalid_argument("harmonic_measure_arc: delta must lie in (0, pi]");
    const double r2 = std::norm(z);
    const QuadratureResult q = integrate(
        [z, r2](double t) {
            const cdouble ep = std::polar(1.0, t), em = std::polar(1.0, -t);
            return (1.0 - r2) / std::norm(ep - z) + (1.0 - r2) / std::norm(em - z);
        },
        delta, kPi);
    if (!q.converged)
        throw std::runtime_error("harmonic_measure_arc: quadrature did not converge");
    return q.value / (2.0 * kPi);
}

double harmonic_measure_arc_closed(cdouble z, double delta) {
    require_in_disk(z, "harmonic_measure_arc_closed");
    if (!(delta > 0.0) || delta > kPi)
        throw std::invalid_argument("harmonic_measure_arc_closed: delta must lie in (0, pi]");
    const cdouble w_minus = 1.0 - z * std::polar(1.0, delta);
    const cdouble w_plus = 1.0 - z * std::polar(1.0, -delta);
    const double arg_ratio = std::arg(w_plus) - std::arg(w_minus);
    return (kPi - delta - arg_ratio) / kPi;
}

Lemma4Report check_lemma4(const LambdaMajorant& L, double delta, double a, int k_max,
                          int base_angles, int per_radius) {
    if (!(delta > 0.0) || delta >= 1.0)
        throw std::invalid_argument("check_lemma4: delta must lie in (0,1)");
    if (!(a > 0.0) || a >= 1.0 / (2.0 * kPi))
        throw std::invalid_argument("check_lemma4: a must lie in (0, 1/(2 pi))");

    Lemma4Report rep;
    rep.lambda_delta = L(delta);
    const double ld = rep.lambda_delta;

    const std::vector<GridPoint> region = stolz_grid(a, delta, k_max, per_radius);
    rep.region_samples = region.size();
    if (region.empty()) {
        rep.region_empty = true;
    } else {
        const double floor_log = -4.0 * kPi * kPi * ld * a;
        const GridExtremum m = grid_min(region, [&](const GridPoint& p) {
            return outer_fdelta_log_abs(ld, delta, p.z) - floor_log;
        });
        rep.margin_region = m.value;
        rep.worst_region = m.point;
    }

    const DiskGrid grid = standard_grid(k_max, base_angles, {0.0}, 512);
    {
        const GridExtremum m = grid_min(grid.points, [&](const GridPoint& p) {
            const double lam_d = L(std::abs(1.0 - p.z));
            if (lam_d == kInf) return kInf;  // bound is vacuous at this point
            return (-kPi * ld + lam_d) - outer_fdelta_log_abs(ld, delta, p.z);
        });
        rep.margin_global = m.value;
        rep.worst_global = m.point;
    }
    {
        const GridExtremum m = grid_min(grid.points, [&](const GridPoint& p) {
            const double lam_d = L(std::abs(1.0 - p.z));
            if (lam_d == kInf) return kInf;
            return kPi * (lam_d - ld) - outer_fdelta_log_abs(ld, delta, p.z);
        });
        rep.margin_global_pi = m.value;
    }
    return rep;
}

Lemma5Report check_lemma5(double c, std::size_t n, const LambdaMajorant& L) {
    if (c < 0.0) throw std::invalid_argument("check_lemma5: c must be >= 0");
    if (n == 0) throw std::invalid_argument("check_lemma5: n must be >= 1");
    if (L.boundary() != BoundarySet::point_one)
        throw std::invalid_argument("check_lemma5: majorant must weigh distance to the point 1");

    const double delta = 1.0 / static_cast<double>(n);
    const double lam = L(delta);
    const double hypothesis_lhs = 4.0 * kPi * kPi * c * static_cast<double>(n);
    if (hypothesis_lhs > lam) {
        std::ostringstream os;
        os << "check_lemma5: hypothesis 4 pi^2 c n <= Lambda(1/n) violated: " << hypothesis_lhs
           << " > " << lam << " (ratio " << hypothesis_lhs / lam << ")";
        throw std::invalid_argument(os.str());
    }

    Lemma5Report rep;
    rep.c = c;
    rep.n = n;
    const double root = std::sqrt(c * static_cast<double>(n) * lam);
    rep.inf_bound_log = -4.0 * kPi * kPi * root;

    const AtomicSingularMeasure nu =
        c > 0.0 ? AtomicSingularMeasure::point_mass(c, 0.0) : AtomicSingularMeasure{};
    const DiskGrid grid = standard_grid(40, 4096, {0.0}, 512);
    std::vector<GridPoint> pts = grid.points;
    if (lam > 0.0 && c > 0.0) {
        const double a = std::sqrt(c * static_cast<double>(n) / lam);
        const std::vector<GridPoint> extra = stolz_grid(a, delta);
        pts.insert(pts.end(), extra.begin(), extra.end());
    }
    const GridExtremum m = grid_min(pts, [&](const GridPoint& p) {
        return log_sum_exp(outer_fdelta_log_abs(lam, delta, p.z), inner_log_abs(nu, p.z));
    });
    rep.measured_inf_log = m.value;
    rep.margin_inf = rep.measured_inf_log - rep.inf_bound_log;

    rep.bnorm_log = bnorm_estimate(
        [&](cdouble z) { return outer_fdelta_log_abs(lam, delta, z); }, L, grid);
    rep.norm_bound_log = -kPi * lam;
    rep.margin_norm = rep.norm_bound_log - rep.bnorm_log;
    rep.margin_norm_alt = -lam - rep.bnorm_log;
    rep.b_eff = root > 0.0 ? -rep.measured_inf_log / root : 0.0;
    return rep;
}

KeldysResult keldys_outer_F(const LambdaMajorant& L, cdouble z) {
    require_in_disk(z, "keldys_outer_F");
    // Fold the circle integral about the singular point e^{i0}: integrate the
    // pair {e^{iu}, e^{-iu}} over u in (0, pi].  Near the singularity the
    // integrand then depends on the *small* variable u, which the quadrature
    // nodes carry to full relative precision.  Parameterising by t near 2*pi
    // instead makes the integrand a staircase in the last ulps of t (one ulp
    // of t moves the boundary distance by ~1e-6 relative at distance 1e-10),
    // and the adaptive splitter chases that noise to max depth.
    const double r2 = std::norm(z);
    const auto lam_u = [&L](double u) { return L(2.0 * std::sin(u / 2.0)); };
    const auto re_pair = [&, r2](double u) {
        const cdouble e = std::polar(1.0, u);
        const cdouble em = std::conj(e);
        const double pois = (1.0 - r2) / std::norm(e - z) + (1.0 - r2) / std::norm(em - z);
        return pois * lam_u(u) / (2.0 * kPi);
    };
    const auto im_pair = [&](double u) {
        const cdouble e = std::polar(1.0, u);
        const cdouble em = std::conj(e);
        const double conj_sum = ((e + z) / (e - z)).imag() + ((em + z) / (em - z)).imag();
        return conj_sum * lam_u(u) / (2.0 * kPi);
    };
    const CutoffLadderResult re = integrate_cutoff_ladder(re_pair, kPi);
    KeldysResult out;
    out.rounds = re.rounds;
    out.last_delta = re.last_delta;
    out.prev_delta = re.prev_delta;
    out.diverged = re.diverged;
    if (re.diverged) return out;
    const CutoffLadderResult im = integrate_cutoff_ladder(im_pair, kPi);
    out.converged = re.converged && im.converged;
    out.diverged = im.diverged;
    out.rounds = std::max(re.rounds, im.rounds);
    out.log_value = cdouble{-re.value.real(), -im.value.real()};
    return out;
}

WeightSequence moment_weights(const LambdaMajorant& L, std::size_t n_max) {
    std::vector<double> logw(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        // log integrand of the moment: (2n+1) log r - 2 Lambda(1-r)
        const double expo = 2.0 * static_cast<double>(n) + 1.0;
        const auto log_integrand = [&](double r) {
            if (r <= 0.0) return -kInf;
            const double lam = (r < 1.0) ? L(1.0 - r) : kInf;
            if (lam == kInf) return -kInf;
            return expo * std::log(r) - 2.0 * lam;
        };
        // probe for the peak so the quadrature integrates a well-scaled shape
        double peak = -kInf;
        for (int i = 0; i < 512; ++i) {
            const double r = (i + 0.5) / 512.0;
            peak = std::max(peak, log_integrand(r));
        }
        if (peak == -kInf)
            throw std::runtime_error("moment_weights: integrand vanished identically");
        const QuadratureResult q = integrate(
            [&](double r) {
                const double v = log_integrand(r);
                return v == -kInf ? 0.0 : std::exp(v - peak);
            },
            0.0, 1.0);
        if (!q.converged || !(q.value > 0.0))
            throw std::runtime_error("moment_weights: moment quadrature failed at n = " +
                                     std::to_string(n));
        const double log_moment = peak + std::log(q.value);
        logw[n] = -0.5 * log_moment;
    }
    return WeightSequence::from_table(std::move(logw), "moment:" + L.tag());
}

}  // namespace cyclab
