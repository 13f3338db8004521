#pragma once

#include <complex>

namespace zetascope {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Selects which value of log(-1) a multivalued operation uses:
// log(-1) = i*pi*n_phase for odd integer n_phase.  principal() is n=1.
struct BranchSpec {
    double n_phase = 1.0;

    static BranchSpec principal() { return BranchSpec{1.0}; }

    // (-1)^1 on this branch, computed as exp(i*pi*n): lands exactly on
    // (-1, 0) for odd integer n because the underlying sin/cos reduce the
    // argument exactly.
    Cplx minus_one() const;
};

bool is_finite(Cplx z);

// sin(pi*z), cos(pi*z) with exact argument reduction: the integer part of
// Re(z) is removed before multiplying by pi, so results at integers are
// exact (+-1 and 0), not merely close.
Cplx sin_pi(Cplx z);
Cplx cos_pi(Cplx z);

// log on the branch where log(-1) = i*pi*n.  Only the negative real axis
// (Im(z) == 0, Re(z) < 0) is branch-dependent; everywhere else this is the
// principal log.  log(0) is a domain_error.
Cplx complex_log(Cplx z, BranchSpec branch = BranchSpec::principal());

// z^w = exp(w * complex_log(z, branch)).  0^0 = 1, 0^w = 0 for Re(w) > 0,
// otherwise raising 0 is a domain_error.
Cplx complex_pow(Cplx z, Cplx w, BranchSpec branch = BranchSpec::principal());

Cplx complex_sin(Cplx z);
Cplx complex_cos(Cplx z);

}  // namespace zetascope
