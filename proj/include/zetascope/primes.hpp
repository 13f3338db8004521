#pragma once

#include <vector>

#include "zetascope/zeros.hpp"

namespace zetascope {

// Exact count of primes <= floor(x) by segmented sieve; 2 <= x <= 1e8.
long long sieve_pi(double x);

// Principal-value logarithmic integral: symmetric excision of width alpha
// around z = 1, Richardson-extrapolated in alpha (two levels, killing the
// alpha^3 and alpha^5 terms of the excision error).
double li(double x, double alpha = 1e-2);

struct PrimeStats {
    double x = 0.0;
    long long pi_x = 0;
    double li_x = 0.0;
    double x_over_ln_x = 0.0;
    double ratio_li = 0.0;   // pi / li
    double ratio_pnt = 0.0;  // pi / (x / ln x)
    double gap = 0.0;        // li - pi
};

PrimeStats pnt_stats(double x);

struct RhBoundProbe {
    double c_min = 0.0;     // smallest C with |li - pi| <= C x^{1/2+eps} on the grid
    double argmax_x = 0.0;  // abscissa attaining it
    bool li_minus_pi_positive = false;  // li - pi > 0 at every scanned x
};

// Scans a geometric grid (200 points per decade, from x = 2).
RhBoundProbe rh_bound_probe(double x_max, double eps);

struct Table13Row {
    int k = 0;
    long long primes_up_to = 0;
    double t_k = 0.0;
};

// Joins the critical-line zero ordinates with the prime counts below them.
std::vector<Table13Row> table13(int k_max, const ScanConfig& config);

}  // namespace zetascope
