#include "zetascope/primes.hpp"

#include <algorithm>
#include <cmath>

#include "zetascope/errors.hpp"
#include "zetascope/quadrature.hpp"

namespace zetascope {

namespace {

// Visits every prime <= limit in ascending order.  Segmented: base primes to
// sqrt(limit), then 2^20-wide windows, so the footprint stays ~1 MB even at
// the 1e8 domain ceiling.
template <class F>
void for_each_prime(long long limit, F&& visit) {
    if (limit < 2) return;
    const long long root = static_cast<long long>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<char> base(static_cast<size_t>(root) + 1, 1);
    for (long long p = 2; p * p <= root; ++p)
        if (base[static_cast<size_t>(p)])
            for (long long q = p * p; q <= root; q += p) base[static_cast<size_t>(q)] = 0;
    std::vector<long long> primes;
    for (long long p = 2; p <= root; ++p)
        if (base[static_cast<size_t>(p)]) primes.push_back(p);

    const long long seg = 1 << 20;
    std::vector<char> mark(static_cast<size_t>(seg));
    for (long long lo = 2; lo <= limit; lo += seg) {
        const long long hi = std::min(lo + seg - 1, limit);
        std::fill(mark.begin(), mark.begin() + static_cast<size_t>(hi - lo + 1), 1);
        for (long long p : primes) {
            if (p * p > hi) break;
            long long start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (long long q = start; q <= hi; q += p) mark[static_cast<size_t>(q - lo)] = 0;
        }
        for (long long n = lo; n <= hi; ++n)
            if (mark[static_cast<size_t>(n - lo)]) visit(n);
    }
}

}  // namespace

long long sieve_pi(double x) {
    if (!(x >= 2.0 && x <= 1e8)) throw domain_error("sieve_pi: x must lie in [2, 1e8]");
    const long long limit = static_cast<long long>(std::floor(x));
    long long count = 0;
    for_each_prime(limit, [&](long long) { ++count; });
    return count;
}

namespace {

// L(a) = a + int_0^{1-a} dz/ln z + int_{1+a}^x dz/ln z.  The excised
// principal-value window contributes a + a^3/36 - 19a^5/1800 + O(a^7), so
// L(a) = li(x) - a^3/36 + O(a^5): pure odd powers, ready for Richardson.
double li_excised(double x, double a) {
    auto f = [](double z) { return Cplx(1.0 / std::log(z), 0.0); };
    const Cplx left = integrate(f, 0.0, 1.0 - a, 1e-12, 1e-13, 6000).value;
    const Cplx right = integrate(f, 1.0 + a, x, 1e-12, 1e-13, 6000).value;
    return a + left.real() + right.real();
}

}  // namespace

double li(double x, double alpha) {
    if (!(x > 1.0)) throw domain_error("li: x must exceed 1");
    if (!(alpha > 0.0 && alpha <= 0.1)) throw domain_error("li: alpha must lie in (0, 0.1]");
    const double l1 = li_excised(x, alpha);
    const double l2 = li_excised(x, 0.5 * alpha);
    const double l4 = li_excised(x, 0.25 * alpha);
    const double r1 = (8.0 * l2 - l1) / 7.0;
    const double r2 = (8.0 * l4 - l2) / 7.0;
    return (32.0 * r2 - r1) / 31.0;
}

PrimeStats pnt_stats(double x) {
    PrimeStats out;
    out.x = x;
    out.pi_x = sieve_pi(x);
    out.li_x = li(x);
    out.x_over_ln_x = x / std::log(x);
    out.ratio_li = static_cast<double>(out.pi_x) / out.li_x;
    out.ratio_pnt = static_cast<double>(out.pi_x) / out.x_over_ln_x;
    out.gap = out.li_x - static_cast<double>(out.pi_x);
    return out;
}

RhBoundProbe rh_bound_probe(double x_max, double eps) {
    if (!(x_max > 2.0 && x_max <= 1e8))
        throw domain_error("rh_bound_probe: x_max must lie in (2, 1e8]");
    if (!(eps > 0.0 && eps < 0.5))
        throw domain_error("rh_bound_probe: eps must lie in (0, 0.5)");

    // Geometric grid, 200 points per decade starting at 2.
    std::vector<double> grid;
    const double ratio = std::pow(10.0, 1.0 / 200.0);
    for (double x = 2.0; x <= x_max; x *= ratio) grid.push_back(x);
    if (grid.back() < x_max) grid.push_back(x_max);

    // One sieve pass supplies pi at every grid point.
    std::vector<long long> pi_at(grid.size(), 0);
    const long long limit = static_cast<long long>(std::floor(x_max));
    size_t g = 0;
    long long count = 0;
    for_each_prime(limit, [&](long long n) {
        while (g < grid.size() && std::floor(grid[g]) < static_cast<double>(n))
            pi_at[g++] = count;
        ++count;
    });
    while (g < grid.size()) pi_at[g++] = count;

    RhBoundProbe out;
    out.li_minus_pi_positive = true;
    for (size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        const double diff = li(x) - static_cast<double>(pi_at[i]);
        if (!(diff > 0.0)) out.li_minus_pi_positive = false;
        const double c = std::abs(diff) / std::pow(x, 0.5 + eps);
        if (c > out.c_min) {
            out.c_min = c;
            out.argmax_x = x;
        }
    }
    return out;
}

std::vector<Table13Row> table13(int k_max, const ScanConfig& config) {
    if (k_max < 1) throw domain_error("table13: k_max must be >= 1");
    const std::vector<ZeroRecord> zeros = scan_zeros(config);
    if (static_cast<size_t>(k_max) > zeros.size())
        throw domain_error("table13: scan found only " + std::to_string(zeros.size()) +
                           " zeros below t_max");
    std::vector<Table13Row> out;
    out.reserve(static_cast<size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        const double t = zeros[static_cast<size_t>(k) - 1].t;
        out.push_back({k, sieve_pi(t), t});
    }
    return out;
}

}  // namespace zetascope
