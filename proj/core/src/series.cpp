#include "cyclab/series.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cyclab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(-mass) underflows to exactly zero in double precision past ~745; we cut
// slightly earlier and flag the series instead of propagating subnormal junk.
constexpr double kUnderflowMass = 700.0;
}  // namespace

cdouble TaylorSeries::eval(cdouble z) const {
    cdouble acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

double TaylorSeries::h2_mass() const {
    double acc = 0.0;
    for (const cdouble& a : coeffs) acc += std::norm(a);
    return acc;
}

TaylorSeries TaylorSeries::one(std::size_t M) {
    TaylorSeries f;
    f.coeffs.assign(M + 1, 0.0);
    f.coeffs[0] = 1.0;
    return f;
}

TaylorSeries TaylorSeries::monomial(std::size_t n, cdouble a) {
    TaylorSeries f;
    f.coeffs.assign(n + 1, 0.0);
    f.coeffs[n] = a;
    return f;
}

AtomicSingularMeasure::AtomicSingularMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    for (const Atom& a : atoms_) {
        if (!(a.mass > 0.0) || !std::isfinite(a.mass))
            throw std::invalid_argument("atomic measure: masses must be positive and finite");
        if (!std::isfinite(a.angle))
            throw std::invalid_argument("atomic measure: angle must be finite");
    }
}

AtomicSingularMeasure AtomicSingularMeasure::parse(const std::string& text) {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
            t.end());
    if (t.empty() || t == "none") return AtomicSingularMeasure{};
    std::vector<Atom> atoms;
    std::size_t pos = 0;
    while (pos < t.size()) {
        std::size_t semi = t.find(';', pos);
        if (semi == std::string::npos) semi = t.size();
        const std::string pair = t.substr(pos, semi - pos);
        pos = semi + 1;
        if (pair.empty()) continue;
        const std::size_t at = pair.find('@');
        if (at == std::string::npos)
            throw std::invalid_argument("atom '" + pair + "' is not mass@angle");
        std::size_t used = 0;
        Atom a;
        a.mass = std::stod(pair.substr(0, at), &used);
        if (used != at) throw std::invalid_argument("bad atom mass in '" + pair + "'");
        const std::string angle_text = pair.substr(at + 1);
        a.angle = std::stod(angle_text, &used);
        if (used != angle_text.size()) throw std::invalid_argument("bad atom angle in '" + pair + "'");
        atoms.push_back(a);
    }
    return AtomicSingularMeasure(std::move(atoms));
}

AtomicSingularMeasure AtomicSingularMeasure::point_mass(double mass, double angle) {
    return AtomicSingularMeasure({Atom{mass, angle}});
}

double AtomicSingularMeasure::total_mass() const {
    double m = 0.0;
    for (const Atom& a : atoms_) m += a.mass;
    return m;
}

std::vector<double> AtomicSingularMeasure::angles() const {
    std::vector<double> out;
    out.reserve(atoms_.size());
    for (const Atom& a : atoms_) out.push_back(a.angle);
    return out;
}

AtomicSingularMeasure AtomicSingularMeasure::scaled(double factor) const {
    if (!(factor > 0.0) || !std::isfinite(factor))
        throw std::invalid_argument("measure scaling factor must be positive");
    std::vector<Atom> atoms = atoms_;
    for (Atom& a : atoms) a.mass *= factor;
    return AtomicSingularMeasure(std::move(atoms));
}

std::string AtomicSingularMeasure::to_string() const {
    if (atoms_.empty()) return "none";
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i) os << ';';
        os << atoms_[i].mass << '@' << atoms_[i].angle;
    }
    return os.str();
}

double inner_log_abs(const AtomicSingularMeasure& nu, cdouble z) {
    const double r2 = std::norm(z);
    if (r2 >= 1.0) throw std::domain_error("inner_log_abs needs |z| < 1");
    double acc = 0.0;
    for (const Atom& a : nu.atoms()) {
        const cdouble zeta = std::polar(1.0, a.angle);
        acc += a.mass * (1.0 - r2) / std::norm(zeta - z);
    }
    return -acc;
}

cdouble inner_eval(const AtomicSingularMeasure& nu, cdouble z) {
    if (std::norm(z) >= 1.0) throw std::domain_error("inner_eval needs |z| < 1");
    cdouble expo = 0.0;
    for (const Atom& a : nu.atoms()) {
        const cdouble zeta = std::polar(1.0, a.angle);
        expo -= a.mass * (zeta + z) / (zeta - z);
    }
    return std::exp(expo);
}

TaylorSeries inner_coeffs(const AtomicSingularMeasure& nu, std::size_t M) {
    TaylorSeries u;
    u.coeffs.assign(M + 1, 0.0);
    const double mass = nu.total_mass();
    if (mass > kUnderflowMass) {
        u.underflowed = true;
        return u;
    }
    u.coeffs[0] = std::exp(-mass);
    if (M == 0) return u;
    // U' = U * R with R(z) = -2 sum_k c_k zeta_k / (zeta_k - z)^2, whose
    // coefficients are R_m = -2 (m+1) sum_k c_k conj(zeta_k)^{m+1}.
    std::vector<cdouble> R(M);  // R[m], m = 0..M-1
    for (const Atom& a : nu.atoms()) {
        const cdouble wbar = std::polar(1.0, -a.angle);
        cdouble p = wbar;  // conj(zeta)^{m+1}
        for (std::size_t m = 0; m < M; ++m) {
            R[m] += -2.0 * a.mass * static_cast<double>(m + 1) * p;
            p *= wbar;
        }
    }
    for (std::size_t n = 0; n < M; ++n) {
        cdouble acc = 0.0;
        for (std::size_t i = 0; i <= n; ++i) acc += u.coeffs[i] * R[n - i];
        u.coeffs[n + 1] = acc / static_cast<double>(n + 1);
    }
    return u;
}

TaylorSeries multiply(const TaylorSeries& f, const TaylorSeries& g, std::size_t M) {
    TaylorSeries h;
    h.coeffs.assign(M + 1, 0.0);
    h.underflowed = f.underflowed || g.underflowed;
    const std::size_t fn = f.coeffs.size(), gn = g.coeffs.size();
    for (std::size_t i = 0; i < fn && i <= M; ++i) {
        if (f.coeffs[i] == cdouble{}) continue;
        const std::size_t j_end = std::min(gn, M - i + 1);
        for (std::size_t j = 0; j < j_end; ++j) h.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
    }
    return h;
}

double sup_circle(const std::function<cdouble(cdouble)>& f, double r, std::size_t K) {
    if (K < 64 || !std::has_single_bit(K))
        throw std::invalid_argument("sup_circle: K must be a power of two >= 64");
    if (!(r > 0.0) || r >= 1.0) throw std::invalid_argument("sup_circle: need 0 < r < 1");
    double best = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        const double v = std::abs(f(std::polar(r, kTwoPi * static_cast<double>(k) / static_cast<double>(K))));
        if (v > best) best = v;
    }
    return best;
}

SupEstimate sup_circle_adaptive(const std::function<cdouble(cdouble)>& f, double r,
                                std::size_t K0, double rel_change, std::size_t K_cap) {
    std::size_t K = std::max<std::size_t>(64, std::bit_ceil(K0));
    double prev = sup_circle(f, r, K);
    while (K < K_cap) {
        K *= 2;
        const double cur = sup_circle(f, r, K);
        if (std::abs(cur - prev) <= rel_change * std::max(cur, 1e-300)) return {cur, K};
        prev = cur;
    }
    return {prev, K};
}

TaylorSeries coeffs_via_cauchy(const std::function<cdouble(cdouble)>& f, double r, std::size_t M) {
    if (!(r > 0.0) || r >= 1.0) throw std::invalid_argument("coeffs_via_cauchy: need 0 < r < 1");
    const std::size_t K = std::max<std::size_t>(64, std::bit_ceil(4 * (M + 1)));
    std::vector<cdouble> samples(K);
    for (std::size_t k = 0; k < K; ++k)
        samples[k] = f(std::polar(r, kTwoPi * static_cast<double>(k) / static_cast<double>(K)));
    TaylorSeries out;
    out.coeffs.assign(M + 1, 0.0);
    for (std::size_t n = 0; n <= M; ++n) {
        cdouble acc = 0.0;
        for (std::size_t k = 0; k < K; ++k) {
            const double phase = -kTwoPi * static_cast<double>(n) * static_cast<double>(k) /
                                 static_cast<double>(K);
            acc += samples[k] * std::polar(1.0, phase);
        }
        out.coeffs[n] = acc / (static_cast<double>(K) * std::pow(r, static_cast<double>(n)));
    }
    return out;
}

}  // namespace cyclab
