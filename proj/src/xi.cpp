#include "zetascope/xi.hpp"

#include <algorithm>
#include <cmath>

#include "zetascope/errors.hpp"
#include "zetascope/gamma.hpp"
#include "zetascope/zeta.hpp"

namespace zetascope {

namespace {

Cplx xi_direct(Cplx s, double pref) {
    const Cplx z = zeta(s, 1e-12).value;
    return pref * s * (s - Cplx(1.0, 0.0)) * std::exp(-0.5 * s * std::log(kPi)) *
           gamma(0.5 * s) * z;
}

Cplx xi_value(Cplx s, double pref) {
    // Removable points 0 and 1: average across the gap (xi is entire, so the
    // symmetric average is xi(s) + O(h^2) ~ 1e-12 here).
    if (std::abs(s) < 1e-7 || std::abs(s - Cplx(1.0, 0.0)) < 1e-7) {
        const Cplx h(1e-6, 0.0);
        return 0.5 * (xi_direct(s - h, pref) + xi_direct(s + h, pref));
    }
    // Near a trivial zero the direct product is a Gamma pole times a zeta
    // zero; the mirror point assembles the same value from finite factors.
    const double m = std::nearbyint(s.real());
    if (m <= -2.0 && std::fmod(m, 2.0) == 0.0 && std::abs(s - Cplx(m, 0.0)) < 1e-6)
        return xi_direct(Cplx(1.0, 0.0) - s, pref);
    return xi_direct(s, pref);
}

}  // namespace

XiValue xi(Cplx s, XiPrefactor convention) {
    XiValue out;
    out.prefactor_convention = convention;
    out.value = xi_value(s, convention == XiPrefactor::half ? 0.5 : 1.0);
    return out;
}

double functional_equation_residual(Cplx s) {
    // chi(s) has poles/indeterminate products at the nonnegative integers
    // (zeta pole at 1, Gamma(1-s) poles against sin zeros elsewhere).
    const double m = std::nearbyint(s.real());
    if (m >= 0.0 && std::abs(s - Cplx(m, 0.0)) < 1e-6)
        throw pole_error("functional_equation_residual: s too close to a nonnegative integer");

    const Cplx lhs = zeta(s, 1e-12).value;
    const Cplx chi = std::exp(s * std::log(2.0)) *
                     std::exp((s - Cplx(1.0, 0.0)) * std::log(kPi)) * sin_pi(0.5 * s) *
                     gamma(Cplx(1.0, 0.0) - s);
    const Cplx rhs = chi * zeta(Cplx(1.0, 0.0) - s, 1e-12).value;
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

double xi_symmetry_residual(Cplx s) {
    const Cplx a = xi(s).value;
    const Cplx b = xi(Cplx(1.0, 0.0) - s).value;
    return std::abs(a - b) / std::max(1.0, std::abs(a));
}

double conjugate_symmetry_residual(double y) {
    const Cplx a = zeta(Cplx(0.5, y), 1e-12).value;
    const Cplx b = zeta(Cplx(0.5, -y), 1e-12).value;
    return std::abs(a - std::conj(b));
}

Eq12Result eq12_check(double f, double k, double n_phase) {
    if (!(f > 0.0)) throw domain_error("eq12_check: f must be positive");
    Eq12Result out;
    out.lhs = complex_pow(Cplx(f, 0.0), Cplx(k, 0.0));
    // e^{-i pi k}, through the exact-reduction trig so integer k gives
    // exactly +-1 + 0i.
    const Cplx comp(cos_pi(Cplx(k, 0.0)).real(), -sin_pi(Cplx(k, 0.0)).real());
    out.rhs = complex_pow(Cplx(-f, 0.0), Cplx(k, 0.0), BranchSpec{n_phase}) * comp;
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

BranchCurve branch_curves(CurveFamily family, double c, double n_phase, double x_min,
                          double x_max, int samples) {
    if (samples < 2) throw domain_error("branch_curves: samples must be >= 2");
    if (!(x_min < x_max)) throw domain_error("branch_curves: need x_min < x_max");
    if (family == CurveFamily::c_pow_x && c == 0.0)
        throw domain_error("branch_curves: c must be nonzero for c_pow_x");

    const BranchSpec branch{n_phase};
    BranchCurve out;
    out.family = family;
    out.c = c;
    out.n_phase = n_phase;
    out.samples.reserve(static_cast<size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        const double x = x_min + (x_max - x_min) * j / (samples - 1);
        const Cplx w = family == CurveFamily::x_pow_x
                           ? complex_pow(Cplx(x, 0.0), Cplx(x, 0.0), branch)
                           : complex_pow(Cplx(c, 0.0), Cplx(x, 0.0), branch);
        if (!is_finite(w)) throw overflow_error("branch_curves: non-finite sample");
        out.samples.push_back({x, w.real(), w.imag()});
    }
    return out;
}

Cplx t_of_s(Cplx s) { return Cplx(s.imag(), 0.5 - s.real()); }

Cplx s_of_t(Cplx t) { return Cplx(0.5 - t.imag(), t.real()); }

}  // namespace zetascope
