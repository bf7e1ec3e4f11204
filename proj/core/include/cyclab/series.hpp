#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace cyclab {

using cdouble = std::complex<double>;

// Truncated Taylor series a_0 + a_1 z + ... + a_M z^M.
struct TaylorSeries {
    std::vector<cdouble> coeffs;
    // Set when the constant term of an inner function underflowed to zero
    // (total mass beyond ~700); every downstream coefficient is then zero too.
    bool underflowed = false;

    TaylorSeries() = default;
    explicit TaylorSeries(std::vector<cdouble> c) : coeffs(std::move(c)) {}

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    cdouble eval(cdouble z) const;  // Horner
    double h2_mass() const;         // sum |a_n|^2

    static TaylorSeries one(std::size_t M = 0);
    static TaylorSeries monomial(std::size_t n, cdouble a = 1.0);
};

struct Atom {
    double mass = 0.0;   // c_k > 0
    double angle = 0.0;  // zeta_k = e^{i angle}
};

// Finite positive atomic measure on the unit circle; the data behind a
// singular inner function U(z) = exp(-sum_k c_k (zeta_k + z)/(zeta_k - z)).
class AtomicSingularMeasure {
  public:
    AtomicSingularMeasure() = default;  // zero measure, U == 1
    explicit AtomicSingularMeasure(std::vector<Atom> atoms);

    // "1.0@0.0;0.5@1.5708" — semicolon-separated mass@angle pairs.
    // "none" and the empty string give the zero measure.
    static AtomicSingularMeasure parse(const std::string& text);
    static AtomicSingularMeasure point_mass(double mass, double angle = 0.0);

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }
    double total_mass() const;
    std::vector<double> angles() const;
    AtomicSingularMeasure scaled(double factor) const;
    std::string to_string() const;

  private:
    std::vector<Atom> atoms_;
};

// log |U(z)| = -sum_k c_k (1-|z|^2)/|zeta_k - z|^2 for |z| < 1; throws
// std::domain_error on or outside the circle.
double inner_log_abs(const AtomicSingularMeasure& nu, cdouble z);

// U(z) itself from the closed form (useful when the phase matters).
cdouble inner_eval(const AtomicSingularMeasure& nu, cdouble z);

// Taylor coefficients of U to degree M via the first-order recurrence
// U' = U * R with R(z) = sum_k (-2 c_k zeta_k)/(zeta_k - z)^2, i.e.
// R_m = -2(m+1) sum_k c_k conj(zeta_k)^{m+1}. Coefficients of inner functions
// are bounded by 1, so the recurrence is benign in double precision.
TaylorSeries inner_coeffs(const AtomicSingularMeasure& nu, std::size_t M);

// Cauchy-product coefficients truncated at degree M (direct convolution).
TaylorSeries multiply(const TaylorSeries& f, const TaylorSeries& g, std::size_t M);

// max |f(r e^{2 pi i k / K})| over k = 0..K-1. K must be a power of two >= 64.
double sup_circle(const std::function<cdouble(cdouble)>& f, double r, std::size_t K);

struct SupEstimate {
    double value = 0.0;
    std::size_t samples = 0;  // final K
};

// Doubles K from K0 until the estimate changes by less than rel_change.
SupEstimate sup_circle_adaptive(const std::function<cdouble(cdouble)>& f, double r,
                                std::size_t K0 = 4096, double rel_change = 1e-3,
                                std::size_t K_cap = std::size_t{1} << 20);

// Trapezoid Cauchy-integral coefficients a_n ≈ r^{-n} (1/K) sum_k f(r e^{i
// theta_k}) e^{-i n theta_k}, K the first power of two >= max(64, 4(M+1)).
// Aliasing error is sum_{m>=1} |a_{n+mK}| r^{mK}; the r^{-n} amplification of
// sampling roundoff makes this a useful oracle only at modest n in double
// precision (see the multiprecision variant for deep coefficients).
TaylorSeries coeffs_via_cauchy(const std::function<cdouble(cdouble)>& f, double r, std::size_t M);

}  // namespace cyclab
