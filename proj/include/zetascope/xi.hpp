#pragma once

#include <vector>

#include "zetascope/complex_ops.hpp"

namespace zetascope {

enum class XiPrefactor { half, unit };

struct XiValue {
    Cplx value{0.0, 0.0};
    XiPrefactor prefactor_convention = XiPrefactor::half;
};

// Completed, entire xi(s) = prefactor * s(s-1) pi^{-s/2} Gamma(s/2) zeta(s).
// The removable points s = 0, 1 are filled by averaging s +- 1e-6; near the
// trivial zeros the Gamma-pole/zeta-zero product is assembled through the
// mirror point 1 - s instead.
XiValue xi(Cplx s, XiPrefactor convention = XiPrefactor::half);

// |zeta(s) - 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)| / max(1, |zeta(s)|).
double functional_equation_residual(Cplx s);

// |xi(s) - xi(1-s)| / max(1, |xi(s)|).
double xi_symmetry_residual(Cplx s);

// |zeta(1/2 + iy) - conj(zeta(1/2 - iy))|  (Schwarz reflection; exact).
double conjugate_symmetry_residual(double y);

struct Eq12Result {
    Cplx lhs{0.0, 0.0};
    Cplx rhs{0.0, 0.0};
    double residual = 0.0;
};

// Probes f^k = (-f)^k e^{-i pi k} with (-f)^k taken on the branch
// log(-1) = i pi n_phase.  Exact (up to roundoff scaled by |f^k|) when
// k (n_phase - 1) is an even integer; deliberately broken otherwise,
// e.g. (2, 3, 6) gives residual 16.
Eq12Result eq12_check(double f, double k, double n_phase);

enum class CurveFamily { x_pow_x, c_pow_x };

struct CurveSample {
    double x, re, im;
};

struct BranchCurve {
    CurveFamily family = CurveFamily::c_pow_x;
    double c = 0.0;  // base for c_pow_x; unused for x_pow_x
    double n_phase = 1.0;
    std::vector<CurveSample> samples;  // strictly increasing in x
};

// Samples x^x or c^x on the chosen log branch over [x_min, x_max].
BranchCurve branch_curves(CurveFamily family, double c, double n_phase, double x_min,
                          double x_max, int samples);

// Strip coordinate change t = i/2 - i s and its inverse; s = 1/2 + iy
// corresponds to real t = y.
Cplx t_of_s(Cplx s);
Cplx s_of_t(Cplx t);

}  // namespace zetascope
