#include "cyclab/cauchy_mp.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace cyclab {

namespace {
using real_mp = boost::multiprecision::cpp_bin_float_100;
using complex_mp = boost::multiprecision::cpp_complex_100;
}  // namespace

std::vector<cdouble> inner_coeffs_mp(const AtomicSingularMeasure& nu, std::size_t M, double r,
                                     std::size_t K) {
    if (!(r > 0.0) || r >= 1.0) throw std::invalid_argument("inner_coeffs_mp: need 0 < r < 1");
    if (K < 4 * (M + 1))
        throw std::invalid_argument("inner_coeffs_mp: K must be at least 4(M+1) samples");
    const real_mp two_pi = 2 * boost::math::constants::pi<real_mp>();
    const real_mp rr{r};

    std::vector<complex_mp> samples(K);
    for (std::size_t k = 0; k < K; ++k) {
        const real_mp theta = two_pi * static_cast<unsigned>(k) / static_cast<unsigned>(K);
        const complex_mp z{rr * cos(theta), rr * sin(theta)};
        complex_mp expo{0, 0};
        for (const Atom& a : nu.atoms()) {
            const complex_mp zeta{cos(real_mp{a.angle}), sin(real_mp{a.angle})};
            expo -= real_mp{a.mass} * (zeta + z) / (zeta - z);
        }
        samples[k] = exp(expo);
    }

    // twiddle[j] = e^{-2 pi i j / K}; every factor e^{-in theta_k} is
    // twiddle[(n k) mod K], each entry computed once at full precision
    std::vector<complex_mp> twiddle(K);
    for (std::size_t j = 0; j < K; ++j) {
        const real_mp phase = -two_pi * static_cast<unsigned>(j) / static_cast<unsigned>(K);
        twiddle[j] = complex_mp{cos(phase), sin(phase)};
    }

    std::vector<cdouble> out(M + 1);
    real_mp r_pow{1};
    for (std::size_t n = 0; n <= M; ++n) {
        complex_mp acc{0, 0};
        for (std::size_t k = 0; k < K; ++k) acc += samples[k] * twiddle[(n * k) % K];
        acc /= static_cast<unsigned>(K);
        acc /= r_pow;
        out[n] = cdouble{static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
        r_pow *= rr;
    }
    return out;
}

}  // namespace cyclab
