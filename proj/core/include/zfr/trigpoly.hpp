#pragma once

// The quartic trigonometric polynomial and the local-root identities behind
// its twisted positivity.
//
//   P(theta) = gamma (a + cos theta)^2 (b + cos theta)^2
//            = sum_{m=0}^{4} a_m cos(m theta),
//
// with closed-form cosine coefficients a_0..a_4.  Twisting cos theta by a
// local coefficient lam keeps the product form
//   gamma (a + lam cos theta)^2 (b + lam cos theta)^2 >= 0,
// and prop41_residual checks that its expansion in cos(m theta) carries the
// weights (gamma a^2 b^2, a2-4a4, 3a4, a1-3a3, 3a3, a2-4a4, 4a4, a3, a4)
// in powers of lam.
//
// lambda_power evaluates the n-th local coefficient of the m-th combined
// log-derivative from the symmetric-power sums of the Satake roots; its
// agreement with (alpha1^l + alpha2^l)^m is the identity under test.
//
// objective scores a candidate (a, b) by (A + B - 2 sqrt(AB)) / (C kappa)
// with A = a1 + 3 a3, B = gamma a^2 b^2 + a2 + 2 a4,
// C = a1 + 2 a2 + 13 a3 + 32 a4 (all three scale linearly in gamma, so the
// score is scale-free); optimize_ab maximizes it over a box.

#include <complex>
#include <cstdint>

#include "zfr/constants.hpp"

namespace zfr {

struct SatakeParams {
    std::complex<double> alpha1;
    std::complex<double> alpha2;
    std::int64_t prime = 2;
    bool ramified = false;

    // Unramified: |alpha1| = |alpha2| = 1, alpha1 * alpha2 = 1.
    static SatakeParams unramified(std::int64_t p, double theta);
    // Ramified: alpha1 = sign / sqrt(p), alpha2 = 0.
    static SatakeParams ramified_root(std::int64_t p, int sign);

    // Throws std::invalid_argument if the invariants fail (at 1e-12).
    void validate() const;
};

// Local coefficient Lambda_{f,m}(p^l) built from symmetric-power sums
// (not from a power of the trace).  Requires l >= 1, 0 <= m <= 4.
// The imaginary residue of the assembled sum must be <= 1e-10; it is
// discarded after the check.
double lambda_power(const SatakeParams& sp, int l, int m);

struct PolyParams {
    double gamma_coeff = 8.0;
    double a = 1.5315;
    double b = 0.374949;
};

struct CosCoeffs {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0;
};

CosCoeffs cos_coeffs(const PolyParams& params);

// gamma (a + lam cos theta)^2 (b + lam cos theta)^2.  Always >= 0.
// lam outside the Deligne range [-2, 2] is accepted; callers that care
// should gate on lam_in_deligne_range.
double p4_value(const PolyParams& params, double theta, double lam);

bool lam_in_deligne_range(double lam);

// Difference between p4_value and its cos(m theta) expansion; |residual|
// stays below 1e-9 over the whole (theta, lam) plane.
double prop41_residual(const PolyParams& params, double theta, double lam);

// (A + B - 2 sqrt(AB)) / (C kappa).  Throws std::domain_error if A*B < 0.
double objective(const PolyParams& params);

struct AbOptimum {
    double a = 0.0;
    double b = 0.0;
    double objective = 0.0;
    bool on_boundary = false;  // argmax pinned to the box edge
};

// Deterministic maximization of objective over [a_lo,a_hi] x [b_lo,b_hi]:
// coarse grid at step 1e-2, then alternating per-coordinate golden-section
// refinement to step 1e-6.  Candidates with A <= B score zero (they give no
// positive radius).  Throws std::invalid_argument on an empty box.
AbOptimum optimize_ab(double a_lo, double a_hi, double b_lo, double b_hi);

}  // namespace zfr
