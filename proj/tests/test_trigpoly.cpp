#include <doctest.h>

#include <cmath>
#include <random>

#include "zfr/trigpoly.hpp"

using zfr::CosCoeffs;
using zfr::PolyParams;
using zfr::SatakeParams;

namespace {
std::mt19937_64 rng(424242);

double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

SatakeParams random_satake() {
    static const std::int64_t primes[] = {2, 3, 5, 7, 11, 13};
    const std::int64_t p = primes[rng() % 6];
    if (rng() % 2 == 0) {
        return SatakeParams::unramified(p, uniform(-zfr::kPi, zfr::kPi));
    }
    return SatakeParams::ramified_root(p, rng() % 2 == 0 ? 1 : -1);
}
}  // namespace

TEST_CASE("satake invariants") {
    CHECK_NOTHROW(SatakeParams::unramified(7, 1.3).validate());
    CHECK_NOTHROW(SatakeParams::ramified_root(3, -1).validate());

    SatakeParams bad = SatakeParams::unramified(7, 1.3);
    bad.alpha1 *= 1.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    SatakeParams bad_ram = SatakeParams::ramified_root(3, 1);
    bad_ram.alpha2 = 0.1;
    CHECK_THROWS_AS(bad_ram.validate(), std::invalid_argument);
}

TEST_CASE("local coefficient identities") {
    const SatakeParams u = SatakeParams::unramified(5, 0.7);
    CHECK(zfr::lambda_power(u, 1, 1) ==
          doctest::Approx(2.0 * std::cos(0.7)).epsilon(1e-13));
    CHECK(zfr::lambda_power(u, 2, 3) ==
          doctest::Approx(std::pow(2.0 * std::cos(1.4), 3.0)).epsilon(1e-10));

    const SatakeParams r = SatakeParams::ramified_root(2, 1);
    CHECK(zfr::lambda_power(r, 1, 4) == doctest::Approx(0.25).epsilon(1e-12));

    double worst = 0.0;
    for (int i = 0; i < 10'000; ++i) {
        const SatakeParams sp = random_satake();
        const int l = 1 + int(rng() % 6);
        const double trace = zfr::lambda_power(sp, l, 1);
        for (int m = 0; m <= 4; ++m) {
            worst = std::max(worst, std::abs(zfr::lambda_power(sp, l, m) -
                                             std::pow(trace, m)));
        }
    }
    CHECK(worst < 1e-10);

    CHECK_THROWS_AS(zfr::lambda_power(u, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(zfr::lambda_power(u, 1, 5), std::invalid_argument);
}

TEST_CASE("cosine coefficients") {
    const CosCoeffs settled = zfr::cos_coeffs(PolyParams{});
    CHECK(std::abs(settled.a0 - 24.77002742) < 1e-7);
    CHECK(std::abs(settled.a1 - 40.39336536) < 1e-7);
    CHECK(std::abs(settled.a2 - 23.13206631) < 1e-7);
    CHECK(std::abs(settled.a3 - 7.625796) < 1e-7);
    CHECK(std::abs(settled.a4 - 1.0) < 1e-7);
    CHECK(settled.a0 < settled.a1);

    const CosCoeffs flat = zfr::cos_coeffs(PolyParams{8.0, 0.0, 0.0});
    CHECK(flat.a0 == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(flat.a1 == 0.0);
    CHECK(flat.a2 == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(flat.a3 == 0.0);
    CHECK(flat.a4 == doctest::Approx(1.0).epsilon(1e-15));

    const CosCoeffs historical = zfr::cos_coeffs(PolyParams{8.0, 0.9126, 0.2766});
    CHECK(historical.a0 < historical.a1);

    double worst = 0.0;
    for (int i = 0; i < 10'000; ++i) {
        const PolyParams params{8.0, uniform(0.0, 3.0), uniform(0.0, 3.0)};
        const CosCoeffs c = zfr::cos_coeffs(params);
        const double theta = uniform(-zfr::kPi, zfr::kPi);
        const double sum = c.a0 + c.a1 * std::cos(theta) +
                           c.a2 * std::cos(2 * theta) +
                           c.a3 * std::cos(3 * theta) +
                           c.a4 * std::cos(4 * theta);
        worst = std::max(worst,
                         std::abs(sum - zfr::p4_value(params, theta, 1.0)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("twisted quartic values") {
    const PolyParams params;
    CHECK(zfr::p4_value(params, 2.13, 0.0) ==
          doctest::Approx(8.0 * params.a * params.a * params.b * params.b)
              .epsilon(1e-15));

    const double lam = 1.7;
    const double theta = std::acos(-params.b / lam);
    CHECK(zfr::p4_value(params, theta, lam) ==
          doctest::Approx(0.0).epsilon(1e-12));

    double min_value = 1e300;
    for (int i = 0; i < 10'000; ++i) {
        min_value = std::min(min_value,
                             zfr::p4_value(params, uniform(-zfr::kPi, zfr::kPi),
                                           uniform(-2.0, 2.0)));
    }
    CHECK(min_value >= 0.0);
    CHECK(zfr::lam_in_deligne_range(2.0));
    CHECK_FALSE(zfr::lam_in_deligne_range(2.5));
}

TEST_CASE("expansion residual") {
    const PolyParams params;
    CHECK(std::abs(zfr::prop41_residual(params, 0.0, 2.0)) < 1e-9);
    CHECK(std::abs(zfr::prop41_residual(params, zfr::kPi / 3.0, -1.3)) < 1e-9);
    CHECK(zfr::prop41_residual(params, 0.9, 0.0) ==
          doctest::Approx(0.0).epsilon(1e-12));

    double worst = 0.0;
    for (int i = 0; i < 10'000; ++i) {
        worst = std::max(worst, std::abs(zfr::prop41_residual(
                                    params, uniform(-zfr::kPi, zfr::kPi),
                                    uniform(-2.0, 2.0))));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("objective") {
    const double at_default = zfr::objective(PolyParams{});
    CHECK(std::abs(at_default - 0.0598613) < 1e-6);
    CHECK(std::abs(1.0 / at_default - 16.7053) < 1e-3);

    // Regression pin recorded at first build.
    CHECK(zfr::objective(PolyParams{8.0, 1.0, 1.0}) ==
          doctest::Approx(0.056368458813112164).epsilon(1e-12));

    // Degenerate b = 0 stays finite.
    CHECK(std::isfinite(zfr::objective(PolyParams{8.0, 1.2, 0.0})));

    // Exact scale invariance, hence an unchanged argmax.
    for (double g : {1.0, 100.0}) {
        CHECK(std::abs(zfr::objective(PolyParams{g, 1.5315, 0.374949}) -
                       at_default) < 1e-12);
    }
    int best_cell[3] = {-1, -1, -1};
    const double gammas[3] = {1.0, 8.0, 100.0};
    for (int gi = 0; gi < 3; ++gi) {
        double best = -1.0;
        for (int i = 1; i <= 60; ++i) {
            for (int j = 1; j <= 60; ++j) {
                const double v =
                    zfr::objective(PolyParams{gammas[gi], i * 0.05, j * 0.05});
                if (v > best) {
                    best = v;
                    best_cell[gi] = i * 1000 + j;
                }
            }
        }
    }
    CHECK(best_cell[0] == best_cell[1]);
    CHECK(best_cell[1] == best_cell[2]);
}

TEST_CASE("coefficient optimizer") {
    const zfr::AbOptimum best = zfr::optimize_ab(0.0, 3.0, 0.0, 3.0);
    CHECK(std::abs(best.a - 1.5315) < 2e-3);
    CHECK(std::abs(best.b - 0.374949) < 2e-3);
    CHECK(best.objective >= zfr::objective(PolyParams{}) - 1e-9);
    CHECK(1.0 / best.objective <= 16.7053 + 1e-3);
    CHECK_FALSE(best.on_boundary);

    // The objective is symmetric in (a, b); restricting a below 1 still
    // leaves the mirrored optimum inside the box.
    const zfr::AbOptimum mirrored = zfr::optimize_ab(0.0, 1.0, 0.0, 3.0);
    CHECK_FALSE(mirrored.on_boundary);
    CHECK(std::abs(mirrored.a - 0.374949) < 2e-3);
    CHECK(std::abs(mirrored.b - 1.5315) < 2e-3);

    // The unit box excludes both mirror images; the argmax pins to its edge.
    const zfr::AbOptimum constrained = zfr::optimize_ab(0.0, 1.0, 0.0, 1.0);
    CHECK(constrained.on_boundary);
    CHECK(std::abs(constrained.b - 1.0) < 1e-5);
    CHECK(std::abs(constrained.a - 0.63) < 5e-2);

    CHECK_THROWS_AS(zfr::optimize_ab(2.0, 1.0, 0.0, 1.0),
                    std::invalid_argument);
}
