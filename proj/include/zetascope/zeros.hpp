#pragma once

#include <string>
#include <vector>

namespace zetascope {

struct ScanConfig {
    double t_max = 40.0;
    double step = 0.1;         // must be <= 0.25: no zero pair below t=100 is closer than ~0.9
    double refine_tol = 1e-8;  // bisection bracket width target
};

struct ZeroRecord {
    int index = 0;      // 1-based ordinal
    double t = 0.0;     // refined ordinate
    double residual = 0.0;  // |zeta(1/2 + it)| at the refined point
    double t_lo = 0.0, t_hi = 0.0;  // sign-change bracket, t_lo < t < t_hi
};

// re(xi(1/2 + it)), which is real on the line; raises consistency_error if
// the imaginary part exceeds 1e-9.
double xi_line(double t);

// Sign-change scan of xi on the critical line, bisection-refined.  The scan
// evaluates sign on e^{pi t/4} * xi_line(t); the positive rescale does not
// move zeros but keeps magnitudes in comfortable range at large t.
std::vector<ZeroRecord> scan_zeros(const ScanConfig& config);

// (T/2pi) ln(T/2pi) - T/2pi.
double zero_count_estimate(double T);

struct CountComparison {
    long long counted = 0;
    double estimated = 0.0;
    double gap = 0.0;  // counted - estimated
};

CountComparison compare_counts(double T, const ScanConfig& config);

// One ordinate per line; '#' starts a comment; must be strictly increasing.
std::vector<double> ingest_zero_table(const std::string& path);

}  // namespace zetascope
