#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zetascope/errors.hpp"
#include "zetascope/zeta.hpp"

using namespace zetascope;

namespace {
const Cplx kZeta3i(1.1072144084314092, -0.14829086717817535);
}

TEST_CASE("zeta(2) = pi^2/6 by every route") {
    const double target = kPi * kPi / 6.0;
    const EvalResult d = zeta_dirichlet(Cplx(2.0, 0.0), 1e-10);
    CHECK(std::abs(d.value - Cplx(target, 0.0)) <= 1e-10);
    CHECK(d.est_error <= 1e-10);
    CHECK(d.method == EvalMethod::dirichlet);

    const EvalResult t = zeta_theta_integral(Cplx(2.0, 0.0), 1e-10);
    CHECK(std::abs(t.value - Cplx(target, 0.0)) <= 1e-10);

    const EvalResult e = zeta_eta(Cplx(2.0, 0.0), 1e-10);
    CHECK(std::abs(e.value - Cplx(target, 0.0)) <= 1e-10);
}

TEST_CASE("real-axis reference values") {
    CHECK(zeta(Cplx(3.0, 0.0)).value.real() ==
          doctest::Approx(1.2020569031595943).epsilon(1e-12));
    CHECK(zeta(Cplx(4.0, 0.0)).value.real() ==
          doctest::Approx(1.0823232337111382).epsilon(1e-12));
    CHECK(zeta(Cplx(2.5, 0.0)).value.real() ==
          doctest::Approx(1.3414872572509172).epsilon(1e-12));
    CHECK(zeta(Cplx(0.5, 0.0)).value.real() ==
          doctest::Approx(-1.4603545088095868).epsilon(1e-12));
    CHECK(zeta(Cplx(0.2, 0.0)).value.real() ==
          doctest::Approx(-0.7339209248963406).epsilon(1e-12));
    CHECK(zeta(Cplx(-0.5, 0.0)).value.real() ==
          doctest::Approx(-0.20788622497735457).epsilon(1e-12));
    CHECK(std::abs(zeta(Cplx(-1.0, 0.0)).value - Cplx(-1.0 / 12.0, 0.0)) <= 1e-12);

    // zeta(20) is 1 + 2^-20 + ...: compare against a direct partial sum.
    double direct = 0.0;
    for (int n = 40; n >= 1; --n) direct += std::pow(static_cast<double>(n), -20.0);
    CHECK(zeta(Cplx(20.0, 0.0)).value.real() == doctest::Approx(direct).epsilon(1e-13));
    CHECK(zeta(Cplx(20.0, 0.0)).value.real() ==
          doctest::Approx(1.0000009539620339).epsilon(1e-13));
}

TEST_CASE("complex reference values across the regions") {
    for (EvalMethod m :
         {EvalMethod::dirichlet, EvalMethod::eta, EvalMethod::theta_integral}) {
        const EvalResult r = zeta(Cplx(3.0, 1.0), 1e-12, m);
        CHECK(std::abs(r.value - kZeta3i) <= 1e-12);
    }
    CHECK(std::abs(zeta(Cplx(0.3, 2.0)).value -
                   Cplx(0.3853103509076439, -0.2825282116864840)) <= 1e-11);
    CHECK(std::abs(zeta(Cplx(1.2, 8.0)).value -
                   Cplx(1.1778569325529685, 0.2314702982550868)) <= 1e-11);
    CHECK(std::abs(zeta(Cplx(-2.5, 3.0)).value -
                   Cplx(0.0687636790336465, 0.1339802839378344)) <= 1e-11);
    CHECK(std::abs(zeta(Cplx(0.5, 25.0), 1e-10).value -
                   Cplx(0.0049845933640357, -0.0140123019625834)) <= 1e-10);

    // The eta acceptance region extends left of re(s) = 0.
    CHECK(std::abs(zeta_eta(Cplx(-0.3, 2.0), 1e-10).value -
                   Cplx(0.2586237068670367, -0.1785593202019660)) <= 1e-9);
}

TEST_CASE("strip values agree with the averaged alternating-series oracle") {
    for (const Cplx s : {Cplx(0.5, 3.0), Cplx(0.8, 1.0), Cplx(0.25, 4.5)}) {
        const Cplx mine = zeta(s, 1e-12).value;
        const Cplx ref = oracles::zeta_via_eta(s);
        CHECK(std::abs(mine - ref) <= 1e-6);
    }
}

TEST_CASE("trivial zeros are exact through the reflection formula") {
    for (int k = 1; k <= 5; ++k) {
        const EvalResult r = zeta(Cplx(-2.0 * k, 0.0));
        CHECK(r.method == EvalMethod::reflection);
        CHECK(r.value.real() == 0.0);
        CHECK(r.value.imag() == 0.0);
    }
}

TEST_CASE("methods agree within their stated error estimates") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> ur(1.06, 4.0);
    std::uniform_real_distribution<double> ui(-40.0, 40.0);
    for (int i = 0; i < 200; ++i) {
        const Cplx s(ur(rng), ui(rng));
        const EvalResult a = zeta_dirichlet(s, 1e-8);
        const EvalResult b = zeta_theta_integral(s, 1e-8);
        const EvalResult c = zeta_eta(s, 1e-8);
        CHECK(std::abs(a.value - b.value) <= 2.0 * (a.est_error + b.est_error));
        CHECK(std::abs(a.value - c.value) <= 2.0 * (a.est_error + c.est_error));
        // Truncation is sized to tol; the reported estimate adds a small
        // rounding term on top, hence the slack.
        CHECK(a.est_error <= 1.1e-8);
        CHECK(c.est_error <= 1.1e-8);
    }
}

TEST_CASE("conjugate symmetry in every region") {
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> ur(-6.0, 6.0);
    std::uniform_real_distribution<double> ui(0.1, 30.0);
    int n = 0;
    while (n < 200) {
        const Cplx s(ur(rng), ui(rng));
        if (std::abs(s - Cplx(1.0, 0.0)) < 1e-3) continue;
        const Cplx a = zeta(s, 1e-10).value;
        const Cplx b = zeta(std::conj(s), 1e-10).value;
        CHECK(std::abs(a - std::conj(b)) <= 1e-10 * std::max(1.0, std::abs(a)));
        ++n;
    }
}

TEST_CASE("dispatcher covers the plane and reports the concrete method") {
    CHECK(zeta(Cplx(2.0, 0.0)).method == EvalMethod::dirichlet);
    CHECK(zeta(Cplx(-3.3, 1.0)).method == EvalMethod::reflection);
    CHECK(zeta(Cplx(0.4, 1.0)).method == EvalMethod::theta_integral);
    // High on the critical line the theta error floor exceeds tol -> eta.
    CHECK(zeta(Cplx(0.5, 60.0), 1e-8).method == EvalMethod::eta);
    // Near the vanishing eta denominator 1 - 2^{1-s} the dispatcher still
    // answers (via theta) rather than erroring.
    const Cplx s_denom(1.0, 2.0 * kPi / std::log(2.0));
    CHECK_THROWS_AS(zeta_eta(s_denom, 1e-8), region_error);
    const EvalResult r = zeta(s_denom, 1e-8);
    CHECK(std::abs(r.value - Cplx(1.3465795428363171, 0.1098831367962696)) <= 1e-8);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ur(-10.0, 10.0);
    std::uniform_real_distribution<double> ui(-40.0, 40.0);
    for (int i = 0; i < 4000; ++i) {
        const Cplx s(ur(rng), ui(rng));
        if (std::abs(s - Cplx(1.0, 0.0)) <= 1e-6) continue;
        const EvalResult out = zeta(s, 1e-8);
        CHECK(is_finite(out.value));
    }
}

TEST_CASE("region and argument guards") {
    CHECK_THROWS_AS(zeta(Cplx(1.0, 0.0)), pole_error);
    CHECK_THROWS_AS(zeta(Cplx(1.0, 1e-10)), pole_error);
    CHECK_THROWS_AS(zeta_eta(Cplx(1.0, 0.0), 1e-10), pole_error);
    CHECK_THROWS_AS(zeta_theta_integral(Cplx(1.0, 0.0), 1e-10), pole_error);
    CHECK_THROWS_AS(zeta_dirichlet(Cplx(1.04, 0.0), 1e-10), region_error);
    CHECK_THROWS_AS(zeta_eta(Cplx(-0.6, 0.0), 1e-10), region_error);
    CHECK_THROWS_AS(zeta_reflect(Cplx(0.5, 0.0), 1e-10), region_error);
    CHECK_THROWS_AS(zeta_theta_integral(Cplx(0.0, 0.0), 1e-10), region_error);
    CHECK_THROWS_AS(zeta(Cplx(2.0, 0.0), 0.0), domain_error);
    CHECK_THROWS_AS(zeta(Cplx(2.0, 0.0), -1e-8), domain_error);
}

TEST_CASE("derivatives: termwise and finite-difference paths") {
    CHECK(std::abs(zeta_derivative(Cplx(2.0, 0.0), 1) -
                   Cplx(-0.9375482543158438, 0.0)) <= 1e-9);
    CHECK(std::abs(zeta_derivative(Cplx(3.0, 0.0), 1) -
                   Cplx(-0.19812624288563685, 0.0)) <= 1e-9);
    CHECK(std::abs(zeta_derivative(Cplx(3.0, 0.0), 2) -
                   Cplx(0.23974691730538718, 0.0)) <= 1e-8);
    CHECK(std::abs(zeta_derivative(Cplx(0.5, 0.0), 1) -
                   Cplx(-3.9226461392091517, 0.0)) <= 1e-6);
    CHECK(std::abs(zeta_derivative(Cplx(2.0, 0.0), 0) -
                   Cplx(kPi * kPi / 6.0, 0.0)) <= 1e-12);

    // Order-1 termwise result matches a finite difference of the dispatcher.
    const Cplx s(2.5, 1.5);
    const double h = 1e-5;
    const Cplx fd = (zeta(s + Cplx(h, 0.0)).value - zeta(s - Cplx(h, 0.0)).value) / (2.0 * h);
    CHECK(std::abs(zeta_derivative(s, 1) - fd) <= 1e-7);

    CHECK_THROWS_AS(zeta_derivative(Cplx(2.0, 0.0), -1), domain_error);
    CHECK_THROWS_AS(zeta_derivative(Cplx(0.3, 0.0), 2), region_error);
}

TEST_CASE("taylor partial sums: convergence and honest truncation error") {
    const Cplx s0(2.0, 0.0);
    const Cplx s(2.9, 0.0);
    const Cplx exact(1.2231338953043553, 0.0);
    // |s - s0| = 0.9 against radius 1: the K = 60 remainder is ~0.9^61/1.9,
    // which is 8.5e-4 -- small but visible; K = 160 pushes it below 1e-6.
    CHECK(std::abs(taylor_series_eval(s0, 60, s) - exact) < 2e-3);
    CHECK(std::abs(taylor_series_eval(s0, 60, s) - exact) > 1e-5);
    CHECK(std::abs(taylor_series_eval(s0, 160, s) - exact) < 1e-6);

    // Well inside the disc the truncation dies quickly.
    const Cplx near(2.2, 0.3);
    CHECK(std::abs(taylor_series_eval(s0, 40, near) - zeta(near).value) < 1e-9);

    CHECK_THROWS_AS(taylor_series_eval(Cplx(1.04, 0.0), 5, Cplx(1.1, 0.0)), region_error);
    CHECK_THROWS_AS(taylor_series_eval(s0, 10, Cplx(3.2, 0.0)), region_error);
    CHECK_THROWS_AS(taylor_series_eval(s0, -1, s), domain_error);
}

TEST_CASE("laurent coefficients at the pole and on an analytic disc") {
    const auto at_pole = laurent_coeffs(Cplx(1.0, 0.0), 0.5, -2, 2, 256);
    REQUIRE(at_pole.size() == 5);
    CHECK(at_pole[0].first == -2);
    CHECK(std::abs(at_pole[0].second) <= 1e-10);                       // A_{-2}
    CHECK(std::abs(at_pole[1].second - Cplx(1.0, 0.0)) <= 1e-10);      // A_{-1}
    CHECK(std::abs(at_pole[2].second - Cplx(0.5772156649015329, 0.0)) <= 1e-10);
    CHECK(std::abs(at_pole[3].second - Cplx(0.0728158454836767, 0.0)) <= 1e-10);
    CHECK(std::abs(at_pole[4].second - Cplx(-0.0048451815964362, 0.0)) <= 1e-10);

    const auto analytic = laurent_coeffs(Cplx(3.0, 0.0), 1.0, -3, -1, 128);
    for (const auto& [n, a] : analytic) CHECK(std::abs(a) <= 1e-8);

    CHECK_THROWS_AS(laurent_coeffs(Cplx(1.0, 0.0), 0.5, 2, 1, 256), domain_error);
    CHECK_THROWS_AS(laurent_coeffs(Cplx(1.0, 0.0), 0.5, -1, 1, 32), domain_error);
    CHECK_THROWS_AS(laurent_coeffs(Cplx(1.0, 0.0), -0.5, -1, 1, 256), domain_error);
    CHECK_THROWS_AS(laurent_coeffs(Cplx(1.5, 0.0), 0.45, -1, 1, 256), contour_error);
}

TEST_CASE("laurent expansion about s0 = 3 reproduces the taylor sum") {
    const Cplx s0(3.0, 0.0);
    const auto coeffs = laurent_coeffs(s0, 1.2, 0, 25, 512);
    const Cplx s(3.4, 0.3);
    Cplx lsum(0.0, 0.0);
    const Cplx d = s - s0;
    for (int n = 25; n >= 0; --n) lsum = lsum * d + coeffs[static_cast<size_t>(n)].second;
    CHECK(std::abs(lsum - taylor_series_eval(s0, 25, s)) <= 1e-7);
    CHECK(std::abs(lsum - zeta(s).value) <= 1e-7);
}

TEST_CASE("u/v partial sums converge to re/im zeta") {
    const auto one_term = u_v_decompose(Cplx(2.0, 0.0), 1);
    CHECK(one_term.first == 1.0);
    CHECK(one_term.second == 0.0);

    const auto real_axis = u_v_decompose(Cplx(2.0, 0.0), 200000);
    CHECK(std::abs(real_axis.first - kPi * kPi / 6.0) <= 1e-4);
    CHECK(real_axis.second == 0.0);

    const auto off_axis = u_v_decompose(Cplx(3.0, 1.0), 1000000);
    CHECK(std::abs(off_axis.first - kZeta3i.real()) <= 1e-6);
    CHECK(std::abs(off_axis.second - kZeta3i.imag()) <= 1e-6);

    CHECK_THROWS_AS(u_v_decompose(Cplx(2.0, 0.0), 0), domain_error);
}

TEST_CASE("evaluation is deterministic") {
    const EvalResult a = zeta(Cplx(0.5, 14.1), 1e-12);
    const EvalResult b = zeta(Cplx(0.5, 14.1), 1e-12);
    CHECK(a.value.real() == b.value.real());
    CHECK(a.value.imag() == b.value.imag());
    CHECK(a.terms_used == b.terms_used);
    CHECK(a.est_error == b.est_error);
}

TEST_CASE("method_name strings") {
    CHECK(std::string(method_name(EvalMethod::dirichlet)) == "dirichlet");
    CHECK(std::string(method_name(EvalMethod::eta)) == "eta");
    CHECK(std::string(method_name(EvalMethod::theta_integral)) == "theta_integral");
    CHECK(std::string(method_name(EvalMethod::reflection)) == "reflection");
    CHECK(std::string(method_name(EvalMethod::auto_dispatch)) == "auto");
}
