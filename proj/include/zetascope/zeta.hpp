#pragma once

#include <utility>
#include <vector>

#include "zetascope/complex_ops.hpp"

namespace zetascope {

enum class EvalMethod { dirichlet, eta, theta_integral, reflection, auto_dispatch };

const char* method_name(EvalMethod m);

struct EvalResult {
    Cplx value{0.0, 0.0};
    EvalMethod method = EvalMethod::auto_dispatch;
    long long terms_used = 1;
    double est_error = 0.0;  // absolute error bound estimate, >= 0
};

// Truncated Dirichlet series with an integral-comparison tail correction.
// Valid for re(s) > 1.05; N is chosen so est_error <= tol.
EvalResult zeta_dirichlet(Cplx s, double tol);

// Accelerated alternating (eta) series, zeta = eta / (1 - 2^{1-s}).  The
// plain series converges for re(s) > 0; the accelerated finite sum stays
// reliable slightly left of that, so the implementation accepts
// re(s) > -0.5 with a conservative term count.
EvalResult zeta_eta(Cplx s, double tol);

// Theta-kernel integral representation
//   pi^{-s/2} Gamma(s/2) zeta(s) = 1/(s(s-1)) + int_1^inf psi(u)(u^{s/2-1} +
//   u^{-(1+s)/2}) du,   psi(u) = sum_{n>=1} e^{-n^2 pi u},
// solved for zeta(s).  Defined for all s except 0 and 1; est_error grows
// like e^{pi|im s|/4} (see the dispatcher, which falls back to eta).
EvalResult zeta_theta_integral(Cplx s, double tol);

// zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s), for re(s) < 0.
EvalResult zeta_reflect(Cplx s, double tol);

// Region dispatcher.  re >= 1.5: dirichlet; re <= -0.5: reflection; strip:
// theta integral when its error bound meets tol (small |im s|), else eta.
EvalResult zeta(Cplx s, double tol = 1e-12, EvalMethod method = EvalMethod::auto_dispatch);

// k-th derivative.  Termwise (-1)^k sum (ln n)^k n^{-s} with tail correction
// for re(s) > 1.05; first-derivative central differences (h = 1e-5, one
// Richardson step) elsewhere.
Cplx zeta_derivative(Cplx s, int k);

// Partial Taylor sum sum_{k<=K} a_k (s - s0)^k with coefficients extracted
// by trapezoidal contour quadrature on |z - s0| = 0.95|s0 - 1|.
Cplx taylor_series_eval(Cplx s0, int K, Cplx s);

// Laurent coefficients A_n = (1/2 pi i) oint zeta(z) (z - s0)^{-n-1} dz by
// equal-node trapezoid on the circle |z - s0| = radius.
std::vector<std::pair<int, Cplx>> laurent_coeffs(Cplx s0, double radius, int n_min,
                                                 int n_max, int nodes);

// Partial sums U = sum n^{-x} cos(y ln n), V = -sum n^{-x} sin(y ln n) over
// n <= N, so that (U, V) -> (re zeta, im zeta) for re(s) > 1.
std::pair<double, double> u_v_decompose(Cplx s, long long N);

}  // namespace zetascope
