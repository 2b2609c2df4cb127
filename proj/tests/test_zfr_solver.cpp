#include <doctest.h>

#include <cmath>
#include <vector>

#include "zfr/zfr_solver.hpp"

using zfr::CosCoeffs;
using zfr::PolyParams;
using zfr::RegionResult;

namespace {
const CosCoeffs kCoeffs = zfr::cos_coeffs(PolyParams{});
}

TEST_CASE("closed-form triple") {
    const zfr::AbcTriple abc = zfr::abc_from_coeffs(kCoeffs);
    CHECK(std::abs(abc.A - 63.27075336) < 1e-6);
    CHECK(std::abs(abc.C - 217.79284598) < 1e-6);
    // Two routes to B: a0 + 3 a4 vs gamma a^2 b^2 + a2 + 2 a4.
    const PolyParams p;
    const double direct =
        p.gamma_coeff * p.a * p.a * p.b * p.b + kCoeffs.a2 + 2.0 * kCoeffs.a4;
    CHECK(abc.B == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("large |t| region") {
    const RegionResult region = zfr::large_t_constant(kCoeffs);
    CHECK(std::abs(region.radius - 0.1175) < 5e-4);
    CHECK(std::abs(region.constant - 16.7053) < 2e-3);
    CHECK(region.precondition_failures.empty());
    CHECK(region.sigma_at_min < 1.15);
    CHECK(region.constant * region.c_lower == doctest::Approx(1.0).epsilon(1e-12));

    // Same closed form through the polynomial objective.
    CHECK(std::abs(region.c_lower - zfr::objective(PolyParams{})) < 1e-12);

    // r* maximizes the radius score.
    const zfr::AbcTriple abc = zfr::abc_from_coeffs(kCoeffs);
    const double q = abc.C * zfr::kKappa;
    const double best = zfr::radius_score(abc, q, region.radius);
    CHECK(best == doctest::Approx(region.c_lower).epsilon(1e-12));
    CHECK(zfr::radius_score(abc, q, region.radius - 1e-4) < best);
    CHECK(zfr::radius_score(abc, q, region.radius + 1e-4) < best);

    CHECK_THROWS_AS(
        zfr::large_t_constant(zfr::cos_coeffs(PolyParams{8.0, 0.0, 0.0})),
        std::domain_error);
}

TEST_CASE("tiny |t| region") {
    const RegionResult tiny =
        zfr::tiny_t_constant(zfr::kSettledGammaCut, zfr::kSettledTinyRadius);

    // Quadratic-root oracle: larger root of q x^2 - 4x + q g^2 with
    // q = 2/r1 + 3 kappa, then c = x - r1.
    const double q = 2.0 / zfr::kSettledTinyRadius + 3.0 * zfr::kKappa;
    const double g = zfr::kSettledGammaCut;
    const double x_plus = (2.0 + std::sqrt(4.0 - q * q * g * g)) / q;
    CHECK(tiny.c_lower ==
          doctest::Approx(x_plus - zfr::kSettledTinyRadius).epsilon(1e-12));

    const double c_ref = 1.0 / 16.7053;
    CHECK(std::abs(tiny.c_lower - c_ref) <= 1e-3 * c_ref);
    // The shortfall against 1/16.7053 is real but tiny.
    CHECK(tiny.c_lower < c_ref);
    CHECK((c_ref - tiny.c_lower) / c_ref < 5e-4);

    REQUIRE(tiny.c_printed_variant.has_value());
    CHECK(*tiny.c_printed_variant < 0.0);

    CHECK(tiny.sigma_at_min < zfr::kPhi);
    CHECK(tiny.gamma_cut == zfr::kSettledGammaCut);
    CHECK(tiny.precondition_failures.empty());

    // gamma = 0 collapses the quadratic.
    const double r1 = zfr::kSettledTinyRadius;
    const RegionResult flat = zfr::tiny_t_constant(0.0, r1);
    CHECK(flat.c_lower ==
          doctest::Approx((2.0 * r1 - 3.0 * zfr::kKappa * r1 * r1) /
                          (2.0 + 3.0 * zfr::kKappa * r1))
              .epsilon(1e-12));

    // Double root at the discriminant boundary (sqrt amplifies roundoff, so
    // only ~1e-8 agreement is meaningful here).
    const RegionResult border = zfr::tiny_t_constant(2.0 / q, r1);
    CHECK(std::abs(border.c_lower - (2.0 / q - r1)) < 1e-7);

    CHECK_THROWS_AS(zfr::tiny_t_constant(0.7, r1), std::domain_error);
}

TEST_CASE("intermediate |t| region") {
    const RegionResult mid = zfr::mid_t_constant(kCoeffs, zfr::kSettledGammaCut,
                                                 zfr::kSettledDelta);
    CHECK(std::abs(mid.constant - 16.9309) < 2e-3);
    REQUIRE(mid.delta_inequality_lhs.has_value());
    CHECK(*mid.delta_inequality_lhs < 0.0);
    CHECK(mid.precondition_failures.empty());
    CHECK(mid.sigma_at_min < 1.15);
    CHECK(mid.delta == zfr::kSettledDelta);

    const zfr::AbcTriple abc = zfr::abc_from_coeffs(kCoeffs);
    const double q = abc.C * zfr::kKappa + zfr::kSettledDelta;
    const double best = zfr::radius_score(abc, q, mid.radius);
    CHECK(zfr::radius_score(abc, q, mid.radius - 1e-4) < best);
    CHECK(zfr::radius_score(abc, q, mid.radius + 1e-4) < best);

    CHECK_THROWS_AS(
        zfr::mid_t_constant(kCoeffs, zfr::kSettledGammaCut, 1e-12),
        std::domain_error);
    CHECK_THROWS_AS(zfr::mid_t_constant(kCoeffs, zfr::kSettledGammaCut, -1.0),
                    std::domain_error);
}

TEST_CASE("coefficient-free positivity") {
    const std::vector<zfr::SatakeParams> samples = {
        zfr::SatakeParams::unramified(2, 0.3),
        zfr::SatakeParams::unramified(3, 2.4),
        zfr::SatakeParams::unramified(7, -1.1),
        zfr::SatakeParams::ramified_root(5, -1),
        zfr::SatakeParams::ramified_root(11, 1),
    };
    CHECK(zfr::check_lemma71(samples, 1.001, 1000).pass);
    CHECK(zfr::check_lemma71(samples, 1.5, 1000).pass);

    const std::vector<zfr::SatakeParams> ramified_only = {
        zfr::SatakeParams::ramified_root(2, 1),
        zfr::SatakeParams::ramified_root(3, -1),
    };
    CHECK(zfr::check_lemma71(ramified_only, 1.3, 1000).pass);

    CHECK_THROWS_AS(zfr::check_lemma71(samples, 1.7, 1000), std::domain_error);
}

TEST_CASE("theorem summary") {
    const std::vector<RegionResult> summary = zfr::theorem_summary();
    REQUIRE(summary.size() == 3);
    CHECK(summary[0].regime == zfr::RegionRegime::t_ge_1);
    CHECK(summary[1].regime == zfr::RegionRegime::t_tiny);
    CHECK(summary[2].regime == zfr::RegionRegime::t_mid);

    CHECK(std::abs(summary[0].constant - 16.7053) < 2e-3);
    CHECK(std::abs(summary[2].constant - 16.9309) < 2e-3);
    CHECK(std::abs(summary[1].constant / summary[0].constant - 1.0) < 2e-3);

    CHECK(summary[1].gamma_cut == zfr::kSettledGammaCut);
    CHECK(summary[2].gamma_cut == zfr::kSettledGammaCut);
    CHECK_FALSE(summary[0].gamma_cut.has_value());
    CHECK_FALSE(summary[0].delta.has_value());
    CHECK_FALSE(summary[1].delta.has_value());
    CHECK(summary[2].delta == zfr::kSettledDelta);

    const double ratio = zfr::kPriorConstant / summary[0].constant;
    CHECK(ratio > 26.6);
    CHECK(ratio < 26.8);
}
