#include "zfr/prime_sums.hpp"

#include <cmath>
#include <stdexcept>

#include "zfr/primes.hpp"

namespace zfr {

namespace {

// Prime factors of a squarefree N <= 1e12 by trial division.
// Throws if a square factor shows up.
std::vector<std::int64_t> squarefree_factors(std::int64_t N) {
    if (N < 1) throw std::invalid_argument("prime_sum_profile: N must be >= 1");
    if (N > 1'000'000'000'000LL) {
        throw std::invalid_argument("prime_sum_profile: N capped at 1e12");
    }
    std::vector<std::int64_t> factors;
    std::int64_t n = N;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        n /= d;
        if (n % d == 0) {
            throw std::invalid_argument("prime_sum_profile: N not squarefree");
        }
        factors.push_back(d);
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

double inv_pow_minus_1(std::int64_t p, double exponent) {
    return 1.0 / (std::pow(double(p), exponent) - 1.0);
}

}  // namespace

PrimeSumProfile prime_sum_profile(std::int64_t N, const SigmaPair& pair) {
    if (!pair.consistent()) {
        throw std::invalid_argument("prime_sum_profile: inconsistent SigmaPair");
    }
    PrimeSumProfile profile;
    profile.N = N;
    profile.pair = pair;
    const double s = pair.sigma;
    const double s1 = pair.sigma1;
    for (std::int64_t p : squarefree_factors(N)) {
        const double lg = std::log(double(p));
        const double at_s = inv_pow_minus_1(p, s);
        const double at_s1 = inv_pow_minus_1(p, s1) / kSqrt5;
        const double at_sh = inv_pow_minus_1(p, s + 0.5);
        const double at_s1h = inv_pow_minus_1(p, s1 + 0.5) / kSqrt5;
        const double at_sp1 = inv_pow_minus_1(p, s + 1.0);
        const double at_s1p1 = inv_pow_minus_1(p, s1 + 1.0) / kSqrt5;
        profile.sN += lg * (at_s - at_s1);
        profile.TN1 += lg * (at_s + at_s1);
        profile.RN += 2.0 * lg * (at_sh + at_s1h);
        profile.s1N += 3.0 * lg * (at_sp1 - at_s1p1);
        profile.RN1 += 3.0 * lg * (at_sp1 + at_s1p1);
    }
    return profile;
}

ApValue a_p(std::int64_t p, const SigmaPair& pair, const CosCoeffs& coeffs) {
    const double sqrt2 = std::sqrt(2.0);
    const double lead = -kKappa * (coeffs.a1 + 9.0 * coeffs.a3) / 2.0;
    const double c_s = 4.0 * coeffs.a3 * sqrt2 + 11.5;
    const double c_s1 = 4.0 * coeffs.a3 * sqrt2 + 2.0 * coeffs.a2 + 15.5;
    ApValue out;
    out.p = p;
    out.sigma = pair.sigma;
    out.value = lead + c_s * inv_pow_minus_1(p, pair.sigma) +
                c_s1 * inv_pow_minus_1(p, pair.sigma1) / kSqrt5 -
                9.0 * inv_pow_minus_1(p, pair.sigma + 1.0) +
                9.0 * inv_pow_minus_1(p, pair.sigma1 + 1.0) / kSqrt5;
    return out;
}

double zeta_logderiv_prime_sum(double sigma1, std::int64_t cutoff) {
    if (!(sigma1 > 1.0)) {
        throw std::invalid_argument("zeta_logderiv_prime_sum: sigma1 > 1");
    }
    if (cutoff < 2) {
        throw std::invalid_argument("zeta_logderiv_prime_sum: cutoff >= 2");
    }
    static thread_local std::vector<std::int64_t> cached_primes;
    static thread_local std::int64_t cached_cutoff = 0;
    if (cutoff != cached_cutoff) {
        cached_primes = primes_up_to(cutoff);
        cached_cutoff = cutoff;
    }
    double sum = 0.0;
    for (std::int64_t p : cached_primes) {
        sum += std::log(double(p)) * inv_pow_minus_1(p, sigma1);
    }
    return -sum / kSqrt5;
}

ApSweepResult verify_ap_negative(std::int64_t p_max,
                                 std::span<const double> sigma_grid,
                                 const CosCoeffs& coeffs) {
    if (p_max < 5) {
        throw std::invalid_argument("verify_ap_negative: p_max must be >= 5");
    }
    const auto primes = primes_up_to(p_max);
    const double sqrt2 = std::sqrt(2.0);
    const double c_s = 4.0 * coeffs.a3 * sqrt2 + 11.5;
    const double c_s1 = 4.0 * coeffs.a3 * sqrt2 + 2.0 * coeffs.a2 + 15.5;
    const double lead = -kKappa * (coeffs.a1 + 9.0 * coeffs.a3) / 2.0;

    ApSweepResult result;
    result.all_negative = true;
    result.tail_decreasing = true;
    result.max_value = -1e300;

    for (double sigma : sigma_grid) {
        const SigmaPair pair = SigmaPair::from_sigma(sigma);
        double prev_t1 = 1e300, prev_t2 = 1e300, prev_t3 = 1e300;
        for (std::int64_t p : primes) {
            if (p < 5) continue;
            const double t1 = c_s * inv_pow_minus_1(p, pair.sigma);
            const double t2 = c_s1 * inv_pow_minus_1(p, pair.sigma1) / kSqrt5;
            const double t3 = 9.0 * inv_pow_minus_1(p, pair.sigma1 + 1.0) / kSqrt5;
            const double value =
                lead + t1 + t2 - 9.0 * inv_pow_minus_1(p, pair.sigma + 1.0) + t3;
            if (value > result.max_value) {
                result.max_value = value;
                result.worst_p = p;
                result.worst_sigma = sigma;
            }
            if (value >= 0.0) result.all_negative = false;
            if (t1 >= prev_t1 || t2 >= prev_t2 || t3 >= prev_t3) {
                result.tail_decreasing = false;
            }
            prev_t1 = t1;
            prev_t2 = t2;
            prev_t3 = t3;
        }
    }
    return result;
}

}  // namespace zfr
