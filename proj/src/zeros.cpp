#include "zetascope/zeros.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include "zetascope/errors.hpp"
#include "zetascope/xi.hpp"
#include "zetascope/zeta.hpp"

namespace zetascope {

double xi_line(double t) {
    const Cplx v = xi(Cplx(0.5, t)).value;
    if (std::abs(v.imag()) >= 1e-9)
        throw consistency_error("xi_line: xi(1/2 + it) acquired an imaginary part");
    return v.real();
}

namespace {

// Sign function used by the scan: the e^{pi t/4} rescale cancels the decay
// of the Gamma factor, keeping magnitudes away from underflow for large t.
double scan_value(double t) { return xi_line(t) * std::exp(kPi * t / 4.0); }

}  // namespace

std::vector<ZeroRecord> scan_zeros(const ScanConfig& config) {
    if (!(config.step > 0.0) || config.step > 0.25)
        throw domain_error("scan_zeros: step must lie in (0, 0.25]");
    if (!(config.refine_tol > 0.0))
        throw domain_error("scan_zeros: refine_tol must be positive");
    if (!(config.t_max > config.step))
        throw domain_error("scan_zeros: t_max must exceed step");

    // Grid nodes j*step, with t_max appended when the last full step
    // undershoots it.
    std::vector<double> nodes;
    const long long full = static_cast<long long>(std::floor(config.t_max / config.step));
    nodes.reserve(static_cast<size_t>(full) + 2);
    for (long long j = 0; j <= full; ++j) nodes.push_back(j * config.step);
    if (nodes.back() < config.t_max) nodes.push_back(config.t_max);

    std::vector<ZeroRecord> out;
    double prev_t = nodes[0];
    double prev_v = scan_value(prev_t);
    for (size_t j = 1; j < nodes.size(); ++j) {
        const double cur_t = nodes[j];
        const double cur_v = scan_value(cur_t);
        if (prev_v == 0.0) {
            // Landed exactly on a zero at the previous node.
            ZeroRecord rec;
            rec.t = prev_t;
            rec.t_lo = prev_t;
            rec.t_hi = prev_t;
            rec.residual = std::abs(zeta(Cplx(0.5, prev_t), 1e-12).value);
            out.push_back(rec);
        } else if (prev_v * cur_v < 0.0) {
            double lo = prev_t, hi = cur_t;
            double lo_v = prev_v;
            while (hi - lo > config.refine_tol) {
                const double mid = 0.5 * (lo + hi);
                const double mid_v = scan_value(mid);
                if (lo_v * mid_v <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    lo_v = mid_v;
                }
            }
            ZeroRecord rec;
            rec.t = 0.5 * (lo + hi);
            rec.t_lo = lo;
            rec.t_hi = hi;
            rec.residual = std::abs(zeta(Cplx(0.5, rec.t), 1e-12).value);
            out.push_back(rec);
        }
        prev_t = cur_t;
        prev_v = cur_v;
    }
    for (size_t j = 0; j < out.size(); ++j) out[j].index = static_cast<int>(j) + 1;
    return out;
}

double zero_count_estimate(double T) {
    if (!(T > 0.0)) throw domain_error("zero_count_estimate: T must be positive");
    const double a = T / (2.0 * kPi);
    return a * std::log(a) - a;
}

CountComparison compare_counts(double T, const ScanConfig& config) {
    if (!(T > 0.0) || T > 120.0)
        throw domain_error("compare_counts: T must lie in (0, 120]");
    ScanConfig scan = config;
    scan.t_max = T;
    const std::vector<ZeroRecord> zeros = scan_zeros(scan);
    CountComparison out;
    out.counted = static_cast<long long>(zeros.size());
    out.estimated = zero_count_estimate(T);
    out.gap = static_cast<double>(out.counted) - out.estimated;
    return out;
}

std::vector<double> ingest_zero_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("ingest_zero_table: cannot open " + path);

    std::vector<double> out;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r\n");
        if (line[b] == '#') continue;
        const char* first = line.data() + b;
        const char* last = line.data() + e + 1;
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last)
            throw parse_error("ingest_zero_table: line " + std::to_string(lineno) +
                              " is not a single number");
        if (!out.empty() && !(v > out.back()))
            throw monotonicity_error("ingest_zero_table: line " + std::to_string(lineno) +
                                     ": " + std::to_string(v) + " does not exceed " +
                                     std::to_string(out.back()));
        out.push_back(v);
    }
    return out;
}

}  // namespace zetascope
