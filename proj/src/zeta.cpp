#include "zetascope/zeta.hpp"

#include <algorithm>
#include <cmath>

#include "zetascope/errors.hpp"
#include "zetascope/gamma.hpp"
#include "zetascope/quadrature.hpp"

namespace zetascope {

namespace {

constexpr double kPoleRadius = 1e-9;
constexpr double kLnAccel = 1.7627471740390860505;  // ln(3 + sqrt 8)

inline Cplx npow(double n, Cplx s) {
    // n^{-s}; n > 0
    return std::exp(-s * std::log(n));
}

void require_off_pole(Cplx s) {
    if (std::abs(s - Cplx(1.0, 0.0)) <= kPoleRadius)
        throw pole_error("zeta: simple pole at s = 1 (residue 1)");
}

// Absolute-error level the theta representation can deliver at s: the
// bracketed quantity carries ~1e-15 of quadrature/rounding noise, amplified
// by pi^{s/2} / Gamma(s/2) on the way back to zeta.
double theta_error_floor(Cplx s) {
    const Cplx amp = std::exp(0.5 * s * std::log(kPi)) * rgamma(0.5 * s);
    return 3e-15 * std::abs(amp) + 1e-16;
}

}  // namespace

const char* method_name(EvalMethod m) {
    switch (m) {
        case EvalMethod::dirichlet: return "dirichlet";
        case EvalMethod::eta: return "eta";
        case EvalMethod::theta_integral: return "theta_integral";
        case EvalMethod::reflection: return "reflection";
        case EvalMethod::auto_dispatch: return "auto";
    }
    return "auto";
}

EvalResult zeta_dirichlet(Cplx s, double tol) {
    if (!(tol > 0)) throw domain_error("zeta_dirichlet: tol must be positive");
    const double x = s.real();
    if (x <= 1.05) throw region_error("zeta_dirichlet: requires re(s) > 1.05");

    // Tail past N is replaced by int_N^inf u^{-s} du - N^{-s}/2; the first
    // omitted term of that correction is s N^{-s-1}/12, bounded below by /6.
    const double mag = std::max(1.0, std::abs(s));
    double n_real = std::ceil(std::pow(6.0 * mag / tol, 1.0 / (x + 1.0)));
    if (!(n_real < 1e8)) throw region_error("zeta_dirichlet: truncation target needs N >= 1e8");
    const long long N = std::max<long long>(20, static_cast<long long>(n_real));

    Cplx sum(0.0, 0.0);
    for (long long n = N; n >= 1; --n) sum += npow(static_cast<double>(n), s);
    const double dN = static_cast<double>(N);
    const Cplx nms = npow(dN, s);  // N^{-s}
    sum += nms * dN / (s - Cplx(1.0, 0.0));  // N^{1-s}/(s-1)
    sum -= 0.5 * nms;

    EvalResult out;
    out.value = sum;
    out.method = EvalMethod::dirichlet;
    out.terms_used = N;
    out.est_error = mag * std::pow(dN, -(x + 1.0)) / 6.0 +
                    2e-16 * std::sqrt(dN) * std::abs(sum);
    return out;
}

EvalResult zeta_eta(Cplx s, double tol) {
    if (!(tol > 0)) throw domain_error("zeta_eta: tol must be positive");
    const double x = s.real();
    if (x <= -0.5) throw region_error("zeta_eta: requires re(s) > -0.5");
    require_off_pole(s);

    const Cplx denom = Cplx(1.0, 0.0) - std::exp((Cplx(1.0, 0.0) - s) * std::log(2.0));
    const double dmag = std::abs(denom);
    if (dmag < 1e-10) throw region_error("zeta_eta: 1 - 2^{1-s} vanishes at this s");

    // Term count from the acceleration error bound; left of re(s) = 1/2 the
    // bound loses a 1/|Gamma(s)| factor, covered by doubling the exp rate.
    const double t = std::abs(s.imag());
    const double rate = (x >= 0.5) ? 0.5 : 1.0;
    const double ln_need =
        std::log(3.0 * (1.0 + 2.0 * t) * std::max(1.0, t)) + kPi * t * rate - std::log(tol * dmag);
    const int n = static_cast<int>(
        std::clamp(std::ceil(ln_need / kLnAccel) + 8.0, 24.0, 380.0));

    // d_k = n * sum_{j<=k} t_j with t_0 = 1/n,
    // t_{j+1} = t_j * 4(n+j)(n-j) / ((2j+1)(2j+2)).
    std::vector<double> d(static_cast<size_t>(n) + 1);
    double tj = 1.0 / n;
    double acc = tj;
    d[0] = n * acc;
    for (int j = 0; j + 1 <= n; ++j) {
        tj *= 4.0 * (n + j) * (n - j) / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
        acc += tj;
        d[static_cast<size_t>(j) + 1] = n * acc;
    }

    Cplx sum(0.0, 0.0);
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
        sum += sign * (d[static_cast<size_t>(n)] - d[static_cast<size_t>(k)]) *
               npow(static_cast<double>(k + 1), s);
        sign = -sign;
    }
    const Cplx eta = sum / d[static_cast<size_t>(n)];

    EvalResult out;
    out.value = eta / denom;
    out.method = EvalMethod::eta;
    out.terms_used = n;
    const double bound = std::exp(std::log(3.0 * (1.0 + 2.0 * t) * std::max(1.0, t)) +
                                  kPi * t * rate - n * kLnAccel) /
                         dmag;
    const double rounding =
        2e-15 * std::sqrt(static_cast<double>(n)) * std::pow(n, std::max(0.0, -x)) / dmag;
    out.est_error = bound + rounding;
    return out;
}

EvalResult zeta_theta_integral(Cplx s, double tol) {
    if (!(tol > 0)) throw domain_error("zeta_theta_integral: tol must be positive");
    require_off_pole(s);
    if (std::abs(s) <= kPoleRadius)
        throw region_error(
            "zeta_theta_integral: removable point at s = 0; use reflection or the eta limit");

    const double x = s.real();

    // Upper integration limit: past U the integrand is below 1e-18.
    const double p = std::max({0.5 * x - 1.0, -0.5 * (1.0 + x), 0.0});
    double U = 14.0;
    for (int i = 0; i < 6; ++i) U = (18.0 * std::log(10.0) + p * std::log(U)) / kPi;
    U = std::min(std::max(U, 10.0), 1000.0);

    const Cplx a = 0.5 * s - Cplx(1.0, 0.0);           // exponent of u^{s/2-1}
    const Cplx b = -0.5 * (Cplx(1.0, 0.0) + s);        // exponent of u^{-(1+s)/2}
    auto integrand = [&](double u) {
        double psi = 0.0;
        for (int n = 1;; ++n) {
            const double term = std::exp(-static_cast<double>(n) * n * kPi * u);
            psi += term;
            if (term < 1e-20) break;
        }
        const double lu = std::log(u);
        return psi * (std::exp(a * lu) + std::exp(b * lu));
    };

    const Cplx amp = std::exp(0.5 * s * std::log(kPi)) * rgamma(0.5 * s);
    const double amp_mag = std::abs(amp);
    const double quad_tol = std::max(1e-15, 0.1 * tol / std::max(amp_mag, 1e-300));
    const QuadResult q = integrate(integrand, 1.0, U, quad_tol, 0.0, 4000);

    const Cplx pole_part = 1.0 / (s * (s - Cplx(1.0, 0.0)));
    const Cplx bracket = pole_part + q.value;

    EvalResult out;
    out.value = amp * bracket;
    out.method = EvalMethod::theta_integral;
    out.terms_used = q.evals;
    out.est_error = amp_mag * (q.abs_error + 1e-17 +
                               2e-16 * (std::abs(pole_part) + std::abs(q.value))) +
                    4e-16 * std::abs(out.value);
    if (!is_finite(out.value)) throw overflow_error("zeta_theta_integral: non-finite result");
    return out;
}

EvalResult zeta_reflect(Cplx s, double tol) {
    if (!(tol > 0)) throw domain_error("zeta_reflect: tol must be positive");
    if (s.real() >= 0.0) throw region_error("zeta_reflect: requires re(s) < 0");

    // chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s); sin_pi lands exactly on
    // zero at the trivial zeros, so zeta(-2k) comes out exactly 0.
    const Cplx chi = std::exp(s * std::log(2.0)) *
                     std::exp((s - Cplx(1.0, 0.0)) * std::log(kPi)) * sin_pi(0.5 * s) *
                     gamma(Cplx(1.0, 0.0) - s);
    const double cmag = std::abs(chi);

    const Cplx s1 = Cplx(1.0, 0.0) - s;  // re(s1) > 1
    const double inner_tol = std::max(tol / std::max(cmag, 1.0), 1e-15);
    EvalResult inner;
    if (s1.real() > 1.05) {
        inner = zeta_dirichlet(s1, inner_tol);
    } else if (theta_error_floor(s1) <= inner_tol) {
        inner = zeta_theta_integral(s1, inner_tol);
    } else {
        inner = zeta_eta(s1, inner_tol);
    }

    EvalResult out;
    out.value = chi * inner.value;
    out.method = EvalMethod::reflection;
    out.terms_used = inner.terms_used;
    out.est_error = cmag * inner.est_error + 5e-16 * std::abs(out.value);
    if (!is_finite(out.value)) throw overflow_error("zeta_reflect: non-finite result");
    return out;
}

EvalResult zeta(Cplx s, double tol, EvalMethod method) {
    switch (method) {
        case EvalMethod::dirichlet: return zeta_dirichlet(s, tol);
        case EvalMethod::eta: return zeta_eta(s, tol);
        case EvalMethod::theta_integral: return zeta_theta_integral(s, tol);
        case EvalMethod::reflection: return zeta_reflect(s, tol);
        case EvalMethod::auto_dispatch: break;
    }

    require_off_pole(s);
    const double x = s.real();
    if (x >= 1.5) return zeta_dirichlet(s, tol);
    if (x <= -0.5) return zeta_reflect(s, tol);

    // Critical strip.  The theta integral is the workhorse while its error
    // floor fits tol (it degrades like e^{pi|im s|/4}); past that, eta.
    if (std::abs(s) > kPoleRadius && theta_error_floor(s) <= tol)
        return zeta_theta_integral(s, tol);
    const Cplx denom = Cplx(1.0, 0.0) - std::exp((Cplx(1.0, 0.0) - s) * std::log(2.0));
    if (std::abs(denom) >= 1e-10) return zeta_eta(s, tol);
    return zeta_theta_integral(s, tol);  // eta denominator vanishes; honest est_error
}

Cplx zeta_derivative(Cplx s, int k) {
    if (k < 0) throw domain_error("zeta_derivative: order must be >= 0");
    if (k == 0) return zeta(s, 1e-12).value;
    const double x = s.real();

    if (x > 1.05) {
        // (-1)^k sum (ln n)^k n^{-s}, tail replaced by its closed-form
        // integral plus midpoint correction (same scheme as zeta_dirichlet).
        const double tol = 1e-10;
        const double ln_scale =
            std::lgamma(k + 1.0) - (k + 1.0) * std::log(std::abs(s - Cplx(1.0, 0.0)));
        const double ln_target = std::log(tol) + std::max(0.0, ln_scale);
        double dN = std::max(30.0, 2.0 * std::exp(static_cast<double>(k) / x));
        auto ln_est = [&](double N) {
            const double lln = std::log(std::log(N));
            return std::log(std::abs(s) + k) + k * lln - (x + 1.0) * std::log(N) -
                   std::log(6.0);
        };
        while (ln_est(dN) > ln_target) {
            dN *= 2.0;
            if (dN > 3e7)
                throw region_error("zeta_derivative: termwise truncation infeasible here");
        }
        const long long N = static_cast<long long>(std::ceil(dN));

        Cplx sum(0.0, 0.0);
        for (long long n = N; n >= 2; --n) {
            const double ln = std::log(static_cast<double>(n));
            sum += std::exp(k * std::log(ln) - s * ln);
        }
        // int_N^inf (ln u)^k u^{-s} du = sum_j k!/(k-j)! (ln N)^{k-j}
        //                                N^{1-s}/(s-1)^{j+1}
        const double lnN = std::log(static_cast<double>(N));
        const Cplx n1ms = std::exp((Cplx(1.0, 0.0) - s) * lnN);
        Cplx tail(0.0, 0.0);
        double falling = 1.0;  // k!/(k-j)!
        Cplx spow = s - Cplx(1.0, 0.0);
        for (int j = 0; j <= k; ++j) {
            tail += falling * std::pow(lnN, k - j) * n1ms / spow;
            falling *= (k - j);
            spow *= (s - Cplx(1.0, 0.0));
        }
        sum += tail - 0.5 * std::exp(k * std::log(lnN) - s * lnN);
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        return sgn * sum;
    }

    if (k == 1) {
        // Central differences, one Richardson step.
        const double h = 1e-5;
        auto diff = [&](double hh) {
            return (zeta(s + Cplx(hh, 0.0), 1e-13).value - zeta(s - Cplx(hh, 0.0), 1e-13).value) /
                   (2.0 * hh);
        };
        const Cplx d1 = diff(h);
        const Cplx d2 = diff(0.5 * h);
        return (4.0 * d2 - d1) / 3.0;
    }
    throw region_error("zeta_derivative: no path for k >= 2 with re(s) <= 1.05");
}

namespace {

// Contour Taylor coefficients a_0..a_K of zeta about s0, trapezoid on
// |z - s0| = r.  Spectrally accurate: aliasing decays like (r/|s0-1|)^M.
std::vector<Cplx> contour_taylor(Cplx s0, double r, int K, int M) {
    std::vector<Cplx> vals(static_cast<size_t>(M));
    for (int j = 0; j < M; ++j) {
        const double th = 2.0 * kPi * j / M;
        vals[static_cast<size_t>(j)] =
            zeta(s0 + r * Cplx(std::cos(th), std::sin(th)), 1e-11).value;
    }
    std::vector<Cplx> coef(static_cast<size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        Cplx acc(0.0, 0.0);
        for (int j = 0; j < M; ++j) {
            const double th = -2.0 * kPi * j * k / M;
            acc += vals[static_cast<size_t>(j)] * Cplx(std::cos(th), std::sin(th));
        }
        coef[static_cast<size_t>(k)] = acc / (M * std::pow(r, k));
    }
    return coef;
}

}  // namespace

Cplx taylor_series_eval(Cplx s0, int K, Cplx s) {
    if (K < 0) throw domain_error("taylor_series_eval: K must be >= 0");
    if (s0.real() <= 1.05)
        throw region_error("taylor_series_eval: requires re(s0) > 1.05");
    const double rad = std::abs(s0 - Cplx(1.0, 0.0));
    if (std::abs(s - s0) >= rad)
        throw region_error("taylor_series_eval: s outside the convergence radius |s0 - 1|");

    const std::vector<Cplx> a = contour_taylor(s0, 0.95 * rad, K, 640);
    Cplx acc(0.0, 0.0);
    const Cplx d = s - s0;
    for (int k = K; k >= 0; --k) acc = acc * d + a[static_cast<size_t>(k)];
    return acc;
}

std::vector<std::pair<int, Cplx>> laurent_coeffs(Cplx s0, double radius, int n_min,
                                                 int n_max, int nodes) {
    if (nodes < 64) throw domain_error("laurent_coeffs: nodes must be >= 64");
    if (n_min > n_max) throw domain_error("laurent_coeffs: n_min > n_max");
    if (!(radius > 0)) throw domain_error("laurent_coeffs: radius must be positive");
    const double pole_gap = std::abs(std::abs(s0 - Cplx(1.0, 0.0)) - radius);
    if (pole_gap < 0.1)
        throw contour_error("laurent_coeffs: circle passes within 0.1 of the pole s = 1");

    std::vector<Cplx> vals(static_cast<size_t>(nodes));
    for (int j = 0; j < nodes; ++j) {
        const double th = 2.0 * kPi * j / nodes;
        vals[static_cast<size_t>(j)] =
            zeta(s0 + radius * Cplx(std::cos(th), std::sin(th)), 1e-11).value;
    }
    std::vector<std::pair<int, Cplx>> out;
    out.reserve(static_cast<size_t>(n_max - n_min) + 1);
    for (int n = n_min; n <= n_max; ++n) {
        Cplx acc(0.0, 0.0);
        for (int j = 0; j < nodes; ++j) {
            const double th = -2.0 * kPi * j * n / nodes;
            acc += vals[static_cast<size_t>(j)] * Cplx(std::cos(th), std::sin(th));
        }
        out.emplace_back(n, acc / (static_cast<double>(nodes) * std::pow(radius, n)));
    }
    return out;
}

std::pair<double, double> u_v_decompose(Cplx s, long long N) {
    if (N < 1) throw domain_error("u_v_decompose: N must be >= 1");
    const double x = s.real(), y = s.imag();
    double u = 0.0, v = 0.0;
    for (long long n = N; n >= 1; --n) {
        const double ln = std::log(static_cast<double>(n));
        const double r = std::exp(-x * ln);
        u += r * std::cos(y * ln);
        v -= r * std::sin(y * ln);  // n^{-s} = n^{-x}(cos(y ln n) - i sin(y ln n))
    }
    return {u, v};
}

}  // namespace zetascope
