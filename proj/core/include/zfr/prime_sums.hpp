#pragma once

// Weighted sums over the primes dividing a squarefree level N, evaluated at
// the coupled abscissas (sigma, sigma1):
//
//   s(N)   = sum log p ( 1/(p^s - 1)      - 1/(sqrt5 (p^s1 - 1)) )
//   s1(N)  = sum 3 log p ( 1/(p^{s+1}-1)  - 1/(sqrt5 (p^{s1+1}-1)) )
//   T(N,1) = sum log p ( 1/(p^s - 1)      + 1/(sqrt5 (p^s1 - 1)) )
//   R(N)   = sum 2 log p ( 1/(p^{s+1/2}-1) + 1/(sqrt5 (p^{s1+1/2}-1)) )
//   R(N,1) = sum 3 log p ( 1/(p^{s+1}-1)  + 1/(sqrt5 (p^{s1+1}-1)) )
//
// plus the per-prime aggregate A_p whose negativity lets every ramified
// contribution be discarded, and the truncated zeta log-derivative sum
//   -(1/sqrt5) sum_{p <= cutoff} log p / (p^{sigma1} - 1).

#include <cstdint>
#include <span>
#include <vector>

#include "zfr/steckin.hpp"
#include "zfr/trigpoly.hpp"

namespace zfr {

struct PrimeSumProfile {
    std::int64_t N = 1;
    SigmaPair pair;
    double sN = 0.0;
    double s1N = 0.0;
    double TN1 = 0.0;
    double RN = 0.0;
    double RN1 = 0.0;
};

// Requires N >= 1 squarefree (checked by trial-division factorization,
// N capped at 1e12).  Throws std::invalid_argument otherwise.
PrimeSumProfile prime_sum_profile(std::int64_t N, const SigmaPair& pair);

struct ApValue {
    std::int64_t p = 0;
    double sigma = 0.0;
    double value = 0.0;
};

// A_p = -kappa (a1 + 9 a3)/2
//       + (4 a3 sqrt2 + 23/2) / (p^sigma - 1)
//       + (4 a3 sqrt2 + 2 a2 + 31/2) / (sqrt5 (p^sigma1 - 1))
//       - 9 / (p^{sigma+1} - 1)
//       + 9 / (sqrt5 (p^{sigma1+1} - 1)).
ApValue a_p(std::int64_t p, const SigmaPair& pair, const CosCoeffs& coeffs);

// -(1/sqrt5) sum_{p <= cutoff} log p / (p^{sigma1} - 1).
// Requires sigma1 > 1, cutoff >= 2.
double zeta_logderiv_prime_sum(double sigma1, std::int64_t cutoff);

struct ApSweepResult {
    bool all_negative = false;
    bool tail_decreasing = false;  // every positive p-term decreasing in p
    std::int64_t worst_p = 0;
    double worst_sigma = 0.0;
    double max_value = 0.0;
};

// A_p < 0 for every prime 5 <= p <= p_max and every sigma in the grid.
// Also confirms the three positive p-dependent terms of A_p decrease along
// consecutive primes (the monotone-tail support for p > p_max).
ApSweepResult verify_ap_negative(std::int64_t p_max,
                                 std::span<const double> sigma_grid,
                                 const CosCoeffs& coeffs);

}  // namespace zfr
