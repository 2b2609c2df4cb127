#include <doctest.h>

#include <cmath>

#include "zfr/jbounds.hpp"
#include "zfr/prime_sums.hpp"

using zfr::SigmaPair;

TEST_CASE("profile basics") {
    const SigmaPair pair = SigmaPair::from_sigma(1.1);

    const auto one = zfr::prime_sum_profile(1, pair);
    CHECK(one.sN == 0.0);
    CHECK(one.s1N == 0.0);
    CHECK(one.TN1 == 0.0);
    CHECK(one.RN == 0.0);
    CHECK(one.RN1 == 0.0);

    const auto two = zfr::prime_sum_profile(2, pair);
    const double direct =
        std::log(2.0) *
        (1.0 / (std::pow(2.0, pair.sigma) - 1.0) -
         1.0 / (zfr::kSqrt5 * (std::pow(2.0, pair.sigma1) - 1.0)));
    CHECK(two.sN == doctest::Approx(direct).epsilon(1e-15));
    CHECK(two.sN > 0.0);
    CHECK(two.RN > 0.0);

    const auto three = zfr::prime_sum_profile(3, pair);
    const auto six = zfr::prime_sum_profile(6, pair);
    CHECK(six.sN == doctest::Approx(two.sN + three.sN).epsilon(1e-15));
    CHECK(six.RN1 == doctest::Approx(two.RN1 + three.RN1).epsilon(1e-15));

    CHECK_THROWS_AS(zfr::prime_sum_profile(4, pair), std::invalid_argument);
    CHECK_THROWS_AS(zfr::prime_sum_profile(12, pair), std::invalid_argument);
    CHECK_THROWS_AS(zfr::prime_sum_profile(0, pair), std::invalid_argument);
    CHECK_THROWS_AS(zfr::prime_sum_profile(2'000'000'000'000LL, pair),
                    std::invalid_argument);
}

TEST_CASE("profile inequalities and monotonicity") {
    for (std::int64_t N : {2LL, 3LL, 5LL, 6LL, 10LL, 30LL, 210LL, 2310LL}) {
        zfr::PrimeSumProfile prev;
        bool have_prev = false;
        for (double sigma = 1.01; sigma < 1.615; sigma += 0.01) {
            const auto profile =
                zfr::prime_sum_profile(N, SigmaPair::from_sigma(sigma));
            CHECK(profile.RN < std::sqrt(2.0) * profile.TN1);
            CHECK(profile.RN1 < 1.5 * profile.TN1);
            if (have_prev) {
                CHECK(profile.sN < prev.sN);
                CHECK(profile.s1N < prev.s1N);
                CHECK(profile.TN1 < prev.TN1);
                CHECK(profile.RN < prev.RN);
                CHECK(profile.RN1 < prev.RN1);
            }
            prev = profile;
            have_prev = true;
        }
    }
}

TEST_CASE("truncated zeta prime sum") {
    CHECK(zfr::zeta_logderiv_prime_sum(2.0, 2) ==
          doctest::Approx(-std::log(2.0) / (3.0 * zfr::kSqrt5))
              .epsilon(1e-15));

    // The tail bound is sharp: at the right endpoint of the sigma1 image the
    // sum is -0.191970073..., under the bound by less than 1e-7; just past
    // the image the bound no longer holds.
    const double sigma1_top = SigmaPair::from_sigma(zfr::kPhi - 1e-12).sigma1;
    const double at_top = zfr::zeta_logderiv_prime_sum(sigma1_top, 10'000);
    CHECK(at_top < zfr::kZetaTailBound);
    CHECK(at_top > zfr::kZetaTailBound - 1e-6);
    CHECK(zfr::zeta_logderiv_prime_sum(2.19, 10'000) < zfr::kZetaTailBound);
    CHECK(zfr::zeta_logderiv_prime_sum(2.2, 10'000) > zfr::kZetaTailBound);

    // Monotone increasing in sigma1 toward zero.
    CHECK(zfr::zeta_logderiv_prime_sum(2.0, 10'000) <
          zfr::zeta_logderiv_prime_sum(2.1, 10'000));
    CHECK(zfr::zeta_logderiv_prime_sum(8.0, 10'000) < 0.0);

    CHECK_THROWS_AS(zfr::zeta_logderiv_prime_sum(0.9, 100),
                    std::invalid_argument);
    CHECK_THROWS_AS(zfr::zeta_logderiv_prime_sum(2.0, 1),
                    std::invalid_argument);
}

TEST_CASE("per-prime aggregate") {
    const zfr::CosCoeffs coeffs = zfr::cos_coeffs(zfr::PolyParams{});

    const double limit = -zfr::kKappa * (coeffs.a1 + 9.0 * coeffs.a3) / 2.0;
    CHECK(limit == doctest::Approx(-30.13).epsilon(2e-4));

    CHECK(zfr::a_p(5, SigmaPair::from_sigma(1.05), coeffs).value < 0.0);
    CHECK(zfr::a_p(5, SigmaPair::from_sigma(1.149), coeffs).value < 0.0);

    // Small primes carry a positive aggregate; the budget checks cap them.
    CHECK(zfr::a_p(2, SigmaPair::from_sigma(1.05), coeffs).value > 0.0);

    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(1.0 + 1e-9 + i * 1.49e-3);
    const zfr::ApSweepResult sweep =
        zfr::verify_ap_negative(100'000, grid, coeffs);
    CHECK(sweep.all_negative);
    CHECK(sweep.tail_decreasing);
    CHECK(sweep.max_value < 0.0);

    CHECK_THROWS_AS(zfr::verify_ap_negative(3, grid, coeffs),
                    std::invalid_argument);
}
