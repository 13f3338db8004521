#pragma once

#include <cmath>
#include <vector>

#include "zetascope/complex_ops.hpp"
#include "zetascope/errors.hpp"

namespace zetascope {

struct QuadResult {
    Cplx value{0.0, 0.0};
    double abs_error = 0.0;  // accumulated error estimate
    int evals = 0;
};

namespace quad_detail {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (nodes are the positive half; the rule is symmetric).
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <typename F>
void gk15(F&& f, double a, double b, Cplx& kronrod, double& err, int& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Cplx fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * xgk[i]);
        fv[14 - i] = f(c + h * xgk[i]);
    }
    fv[7] = f(c);
    evals += 15;

    Cplx resk(0.0, 0.0), resg(0.0, 0.0);
    for (int i = 0; i < 7; ++i) resk += wgk[i] * (fv[i] + fv[14 - i]);
    resk += wgk[7] * fv[7];
    // Gauss points are the odd-indexed Kronrod points.
    for (int i = 0; i < 3; ++i) resg += wg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    resg += wg[3] * fv[7];

    kronrod = h * resk;
    err = std::abs(h * (resk - resg));
}

}  // namespace quad_detail

// Adaptive bisection on the GK15 rule.  f maps double -> Cplx.  Stops when
// the summed error estimate is below max(abs_tol, rel_tol*|I|); throws
// region_error if the subdivision budget runs out first.
template <typename F>
QuadResult integrate(F&& f, double a, double b, double abs_tol = 1e-12,
                     double rel_tol = 1e-12, int max_intervals = 2000) {
    struct Seg {
        double a, b, err;
        Cplx val;
    };
    QuadResult out;
    std::vector<Seg> segs;
    segs.reserve(64);
    segs.push_back({a, b, 0.0, Cplx{}});
    quad_detail::gk15(f, a, b, segs[0].val, segs[0].err, out.evals);

    for (;;) {
        Cplx total(0.0, 0.0);
        double toterr = 0.0;
        size_t worst = 0;
        for (size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].val;
            toterr += segs[i].err;
            if (segs[i].err > segs[worst].err) worst = i;
        }
        const double goal = std::max(abs_tol, rel_tol * std::abs(total));
        if (toterr <= goal || std::abs(segs[worst].b - segs[worst].a) < 1e-14) {
            out.value = total;
            out.abs_error = toterr;
            return out;
        }
        if (static_cast<int>(segs.size()) == max_intervals)
            throw region_error("integrate: interval budget exhausted");
        const Seg w = segs[worst];
        const double mid = 0.5 * (w.a + w.b);
        quad_detail::gk15(f, w.a, mid, segs[worst].val, segs[worst].err, out.evals);
        segs[worst].a = w.a;
        segs[worst].b = mid;
        Seg right{mid, w.b, 0.0, Cplx{}};
        quad_detail::gk15(f, mid, w.b, right.val, right.err, out.evals);
        segs.push_back(right);
    }
}

}  // namespace zetascope
