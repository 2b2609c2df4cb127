#pragma once

// Steckin differencing machinery.
//
// For sigma in (1, phi) the coupled abscissa is
//   sigma1 = 1/2 + 1/2 sqrt(1 + 4 sigma^2),
// so that sigma1 in (phi, 2.2) and sigma1^2 - sigma1 = sigma^2.  The basic
// two-pole kernel is
//   F(s, z) = Re( 1/(s-z) + 1/(s-1+conj(z)) ).
// Three facts about F drive the zero isolation:
//   (a) F(s,z) - (1/sqrt5) F(s1,z) >= 0               for 0 < Re z < 1,
//   (b) Re(1/(s-1+conj z)) - (1/sqrt5) F(s1,z) >= 0   for 1/2 <= Re z < 1,
//                                                      Im z = t,
//   and two quantitative floors for the same expression when Im z is
//   decoupled from t (lemma32_lower, floor -0.6) or tripled
//   (lemma33_lower, floor -(phi/sqrt5 + 2/5)).
//
// gamma_steckin_bound / mc_table give the uniform-in-sigma upper bound for
//   Re( psi(s+a) - (1/sqrt5) psi(s1+a) ),   s = sigma + i m t,
// split into a main term M(a,m,t) (the log|t|, log k growth) and a constant
// error term C(a,m,t), for shifts a = 0 or a linear in the even weight k.

#include <complex>

#include "zfr/constants.hpp"
#include "zfr/tolerance.hpp"

namespace zfr {

struct SigmaPair {
    double sigma = 0.0;
    double sigma1 = 0.0;

    static SigmaPair from_sigma(double sigma);

    // sigma1 agrees with the defining map to 1e-12.
    bool consistent() const;
};

// F(s, z).  Throws std::domain_error at the poles s = z and s = 1 - conj(z).
double f_pair(Complex s, Complex z);

// Part (a): F(s,z) - (1/sqrt5) F(s1,z) >= 0 with s = sigma + it.
// Requires 0 < Re(z) < 1.
Verdict check_lemma31a(const SigmaPair& pair, double t, Complex z,
                       const TolerancePolicy& policy = {});

// Part (b): Re(1/(s-1+conj z)) - (1/sqrt5) F(s1,z) >= 0.
// Requires 1/2 <= Re(z) < 1 and Im(z) = t.
Verdict check_lemma31b(const SigmaPair& pair, double t, Complex z,
                       const TolerancePolicy& policy = {});

// Re(1/(sigma-1+conj z)) - (1/sqrt5) F(sigma1, z) at real s = sigma.
// Floor -0.6 over 1/2 <= Re z <= 1, |Im z| < 1, sigma in (1, phi).
double lemma32_lower(const SigmaPair& pair, Complex z);

// Same expression with s = sigma + 3i Im(z), s1 = sigma1 + 3i Im(z).
// Floor -(phi/sqrt5 + 2/5) >= -1.12361 over 1/2 <= Re z < 1.
double lemma33_lower(const SigmaPair& pair, Complex z);

// Upper bound for Re( psi(s+a) - (1/sqrt5) psi(s1+a) ), s = sigma + i m t,
// valid uniformly for sigma in (1, phi).  Three cases: m = 0; m != 0 with
// |t| < 1; m != 0 with |t| >= 1.  Requires a >= 0, m >= 0.
double gamma_steckin_bound(double a, int m, double t, const SigmaPair& pair);

enum class MCCase {
    m0_a0,
    m0_a_nonzero,
    t_ge_1_a0,
    t_ge_1_a_nonzero,
    t_lt_1_a0,
    t_lt_1_a_nonzero,
};

struct MCValue {
    double main_term = 0.0;   // M(a, m, t)
    double error_term = 0.0;  // C(a, m, t)
    MCCase case_id = MCCase::m0_a0;

    double total() const { return main_term + error_term; }
};

// The M/C split of gamma_steckin_bound for a = 0 or a in
// {(k-1)/2, k-1, 3(k-1)/2, 2(k-1)} with k even >= 2.  M carries the
// kappa log k and kappa log|t| growth; C is the remaining constant.
// M + C reproduces gamma_steckin_bound exactly (regrouping identity).
// Throws std::invalid_argument for any other shift.
MCValue mc_table(double a, int m, double t, int k);

}  // namespace zfr
