#pragma once

// Reference digamma oracle.
//
// digamma_ref evaluates Gamma'/Gamma(z) for Re(z) > 0 by shifting the
// argument with the recurrence psi(z) = psi(z+1) - 1/z until Re(z) >= 16 and
// then summing the asymptotic series
//   psi(z) ~ log z - 1/(2z) - sum_k B_{2k} / (2k z^{2k})
// to eight Bernoulli terms.  At Re(z) >= 16 the truncation error is below
// 1e-21, so the oracle is accurate to ~1e-14 absolute (1e-12 relative away
// from the real zero of psi near 1.4616).

#include "zfr/constants.hpp"

namespace zfr {

// Gamma'/Gamma(z) for Re(z) > 0.  Throws std::domain_error otherwise or on
// non-finite input.
Complex digamma_ref(Complex z);

// Real restriction, x > 0.
double digamma_ref(double x);

// The tangent line to psi at x = 3/2:
//   2 - gamma - 2 log 2 + (pi^2/4 - 2)(2x - 3).
// psi is concave on (0, inf), so this dominates psi(x) everywhere there,
// with equality at x = 3/2 (psi(3/2) = 2 - gamma - 2 log 2 and
// psi'(3/2) = pi^2/2 - 4).
double digamma_linear_upper(double x);

}  // namespace zfr
