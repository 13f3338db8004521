#pragma once

#include "zetascope/complex_ops.hpp"

namespace zetascope {

// Gamma function via a 15-term Lanczos approximation (g = 607/128), accurate
// to ~1e-13 relative over the half-plane Re(z) >= 0.5 and extended by the
// reflection formula elsewhere.  Throws pole_error within 1e-12 of a
// nonpositive integer.
Cplx gamma(Cplx z);

// 1/gamma(z): entire, so no pole handling -- returns exactly 0 at
// nonpositive integers.
Cplx rgamma(Cplx z);

}  // namespace zetascope
