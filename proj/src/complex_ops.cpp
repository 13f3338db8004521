#include "zetascope/complex_ops.hpp"

#include <cmath>

#include "zetascope/errors.hpp"

namespace zetascope {

bool is_finite(Cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Shared reduction for sin_pi / cos_pi.  Writes sin(pi*r) and cos(pi*r)
// where r = Re(z) - round(Re(z)); the subtraction is exact in binary64, so
// integer inputs give r == 0 and the trig factors are exact.
namespace {

struct Reduced {
    double sr, cr;   // sin(pi*r), cos(pi*r)
    double sign;     // (-1)^m from the removed integer m
    double y;        // Im(z)
};

Reduced reduce_pi(Cplx z) {
    const double x = z.real();
    const double m = std::nearbyint(x);
    const double r = x - m;
    Reduced out;
    out.sr = std::sin(kPi * r);
    out.cr = std::cos(kPi * r);
    out.sign = (std::fmod(std::fabs(m), 2.0) == 1.0) ? -1.0 : 1.0;
    out.y = z.imag();
    return out;
}

}  // namespace

Cplx sin_pi(Cplx z) {
    // sin(pi(m + r + iy)) = (-1)^m [sin(pi r)cosh(pi y) + i cos(pi r)sinh(pi y)]
    const Reduced q = reduce_pi(z);
    if (q.y == 0.0) return {q.sign * q.sr, 0.0};
    return {q.sign * q.sr * std::cosh(kPi * q.y),
            q.sign * q.cr * std::sinh(kPi * q.y)};
}

Cplx cos_pi(Cplx z) {
    const Reduced q = reduce_pi(z);
    if (q.y == 0.0) return {q.sign * q.cr, 0.0};
    return {q.sign * q.cr * std::cosh(kPi * q.y),
            -q.sign * q.sr * std::sinh(kPi * q.y)};
}

Cplx BranchSpec::minus_one() const {
    return {cos_pi(Cplx(n_phase, 0.0)).real(), sin_pi(Cplx(n_phase, 0.0)).real()};
}

Cplx complex_log(Cplx z, BranchSpec branch) {
    if (z == Cplx(0.0, 0.0)) throw domain_error("complex_log: log of zero");
    if (z.imag() == 0.0 && z.real() < 0.0) {
        // On the cut the imaginary part is pi*n instead of the principal pi.
        return {std::log(-z.real()), kPi * branch.n_phase};
    }
    return std::log(z);
}

Cplx complex_pow(Cplx z, Cplx w, BranchSpec branch) {
    if (z == Cplx(0.0, 0.0)) {
        if (w == Cplx(0.0, 0.0)) return {1.0, 0.0};
        if (w.real() > 0.0) return {0.0, 0.0};
        throw domain_error("complex_pow: 0 raised to exponent with Re <= 0");
    }
    return std::exp(w * complex_log(z, branch));
}

Cplx complex_sin(Cplx z) {
    return std::sin(z);
}

Cplx complex_cos(Cplx z) {
    return std::cos(z);
}

}  // namespace zetascope
