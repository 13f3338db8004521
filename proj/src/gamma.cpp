#include "zetascope/gamma.hpp"

#include <cmath>

#include "zetascope/errors.hpp"

namespace zetascope {

namespace {

// Godfrey's coefficients for g = 607/128, n = 15.
constexpr double kG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
constexpr double kSqrtTwoPi = 2.506628274631000502415765284811;

// Core approximation, valid for Re(z) >= 0.5.
Cplx lanczos_gamma(Cplx z) {
    Cplx a(kLanczos[0], 0.0);
    for (int k = 1; k < 15; ++k) a += kLanczos[k] / (z + Cplx(k - 1, 0.0));
    const Cplx t = z + Cplx(kG - 0.5, 0.0);
    return kSqrtTwoPi * std::exp((z - Cplx(0.5, 0.0)) * std::log(t) - t) * a;
}

bool near_nonpositive_integer(Cplx z) {
    const double m = std::nearbyint(z.real());
    if (m > 0.5) return false;
    return std::hypot(z.real() - m, z.imag()) < 1e-12;
}

}  // namespace

Cplx gamma(Cplx z) {
    if (near_nonpositive_integer(z)) throw pole_error("gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return lanczos_gamma(z);
    // gamma(z) gamma(1-z) = pi / sin(pi z)
    return kPi / (sin_pi(z) * lanczos_gamma(Cplx(1.0, 0.0) - z));
}

Cplx rgamma(Cplx z) {
    if (z.real() >= 0.5) return Cplx(1.0, 0.0) / lanczos_gamma(z);
    // sin_pi is exactly 0 at integers, so this is exactly 0 at the poles.
    return sin_pi(z) * lanczos_gamma(Cplx(1.0, 0.0) - z) / kPi;
}

}  // namespace zetascope
