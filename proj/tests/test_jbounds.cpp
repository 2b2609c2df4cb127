#include <doctest.h>

#include <cmath>

#include "zfr/jbounds.hpp"
#include "zfr/prime_sums.hpp"
#include "zfr/zfr_solver.hpp"

using zfr::BoundExpr;
using zfr::Regime;

TEST_CASE("bound expressions") {
    const BoundExpr j0 = zfr::jbound(0, 0, Regime::t_ge_1);
    CHECK(j0.pole_coef == 1.0);
    CHECK(j0.logN_coef == 0.0);
    CHECK(j0.error_const == -0.601655);
    CHECK(j0.sigma_range == zfr::SigmaRange::one_phi);

    const BoundExpr j1 = zfr::jbound(1, 1, Regime::t_ge_1);
    CHECK(j1.logN_coef == 0.5);
    CHECK(j1.logk_coef == 1.0);
    CHECK(j1.logt_coef == 1.0);
    CHECK(j1.zero_term.kind == zfr::ZeroTermKind::reciprocal);
    CHECK(j1.zero_term.n == 1.0);
    CHECK(j1.error_const == -0.48973);

    const BoundExpr j1t0 = zfr::jbound(1, 0, Regime::t_eq_0);
    CHECK(j1t0.zero_term.kind == zfr::ZeroTermKind::lorentzian);
    CHECK(j1t0.zero_term.n == 2.0);
    CHECK(j1t0.zero_term.mult == 1);
    CHECK(j1t0.error_const == 0.603562);

    const BoundExpr j44 = zfr::jbound(4, 4, Regime::t_ge_1);
    CHECK(j44.logN_coef == 5.0);
    CHECK(j44.logk_coef == 5.0);
    CHECK(j44.logt_coef == 8.0);
    CHECK(j44.error_const == -0.410404);
    REQUIRE(j44.prime_terms.size() == 2);
    CHECK(j44.prime_terms[0].kind == zfr::PrimeSumKind::TN1);
    CHECK(j44.prime_terms[0].coef == 2.0);
    CHECK(j44.prime_terms[1].kind == zfr::PrimeSumKind::RN1);
    CHECK(j44.prime_terms[1].coef == 1.0);

    // The wide-sigma m = 0 variant.
    const BoundExpr wide = zfr::jbound(2, 0, Regime::t_eq_0);
    CHECK(wide.error_const == -1.36737);
    CHECK(wide.sigma_range == zfr::SigmaRange::one_phi);
    CHECK(zfr::jbound(2, 0, Regime::t_lt_1).error_const == -1.66308);
    CHECK(zfr::jbound(2, 0, Regime::t_lt_1).sigma_range ==
          zfr::SigmaRange::one_115);

    CHECK_THROWS_AS(zfr::jbound(1, 1, Regime::t_eq_0), std::invalid_argument);
    CHECK_THROWS_AS(zfr::jbound(2, 4, Regime::t_ge_1), std::invalid_argument);
    CHECK_THROWS_AS(zfr::jbound(5, 0, Regime::t_ge_1), std::invalid_argument);
    CHECK_THROWS_AS(zfr::jbound(0, 2, Regime::t_ge_1), std::invalid_argument);
}

TEST_CASE("error constant re-derivation") {
    struct Case {
        int n, mult;
        Regime regime;
    };
    const Case cases[] = {
        {0, 0, Regime::t_ge_1}, {1, 1, Regime::t_ge_1}, {1, 1, Regime::t_lt_1},
        {1, 0, Regime::t_eq_0}, {2, 0, Regime::t_lt_1}, {2, 0, Regime::t_eq_0},
        {2, 2, Regime::t_ge_1}, {2, 2, Regime::t_lt_1}, {3, 1, Regime::t_ge_1},
        {3, 1, Regime::t_lt_1}, {3, 3, Regime::t_ge_1}, {3, 3, Regime::t_lt_1},
        {4, 0, Regime::t_lt_1}, {4, 2, Regime::t_ge_1}, {4, 2, Regime::t_lt_1},
        {4, 4, Regime::t_ge_1}, {4, 4, Regime::t_lt_1},
    };
    for (const Case& k : cases) {
        const zfr::RederivedConstant r =
            zfr::rederive_error_constant(k.n, k.mult, k.regime);
        INFO("case (", k.n, ",", k.mult, ") derived=", r.derived,
             " quoted=", r.quoted);
        CHECK(r.derived <= r.quoted + 1e-4);
        CHECK(r.tail_decreasing);
        // The re-derivation should land close to the quoted value, not just
        // below it.
        CHECK(std::abs(r.derived - r.quoted) < 2e-4);
    }

    CHECK(zfr::rederive_error_constant(1, 1, Regime::t_ge_1).binding_k == 2);
    CHECK(zfr::rederive_error_constant(4, 4, Regime::t_ge_1).binding_k == 2);
}

TEST_CASE("quoted-constant identities") {
    CHECK(std::abs((1.2 - 0.596438) -
                   zfr::quoted_error_constant(1, 0, Regime::t_eq_0)) < 1e-9);
    const double aggregate =
        zfr::quoted_error_constant(0, 0, Regime::t_eq_0) +
        2.0 * zfr::quoted_error_constant(1, 0, Regime::t_eq_0) +
        zfr::quoted_error_constant(2, 0, Regime::t_eq_0);
    CHECK(std::abs(aggregate - (-0.761901)) < 1e-9);

    const double tripled = -2.0 * zfr::lemma33_floor();
    CHECK(tripled <= 2.2473);
    CHECK(2.2473 - tripled < 1e-4);
}

TEST_CASE("bound evaluation") {
    CHECK(zfr::eval_bound(zfr::jbound(0, 0, Regime::t_ge_1), 1.1, 2.0, 11, 2,
                          0.9) ==
          doctest::Approx(10.0 - 0.601655).epsilon(1e-12));

    const double expected =
        zfr::kKappa *
            (0.5 * std::log(11.0) + std::log(2.0) + std::log(2.0)) -
        5.0 - 0.48973;
    CHECK(zfr::eval_bound(zfr::jbound(1, 1, Regime::t_ge_1), 1.1, 2.0, 11, 2,
                          0.9) == doctest::Approx(expected).epsilon(1e-12));

    // Level one: every prime term vanishes.
    const BoundExpr j44 = zfr::jbound(4, 4, Regime::t_ge_1);
    CHECK(zfr::eval_bound(j44, 1.1, 2.0, 1, 12, 0.9) ==
          doctest::Approx(zfr::kKappa * (5.0 * std::log(12.0) +
                                         8.0 * std::log(2.0)) +
                          j44.error_const)
              .epsilon(1e-12));

    CHECK_THROWS_AS(zfr::eval_bound(j44, 1.3, 2.0, 1, 12, 0.9),
                    std::domain_error);  // sigma above 1.15
    CHECK_THROWS_AS(zfr::eval_bound(j44, 1.1, 0.5, 1, 12, 0.9),
                    std::domain_error);  // |t| < 1 with a log|t| term
    CHECK_THROWS_AS(zfr::eval_bound(j44, 1.1, 2.0, 1, 3, 0.9),
                    std::domain_error);  // odd weight
    CHECK_THROWS_AS(zfr::eval_bound(j44, 1.1, 2.0, 1, 12, 0.4),
                    std::domain_error);  // beta0 too small
}

TEST_CASE("weighted combination") {
    const zfr::CosCoeffs c = zfr::cos_coeffs(zfr::PolyParams{});
    const zfr::AbcTriple abc = zfr::abc_from_coeffs(c);

    const zfr::CombinedBound large =
        zfr::combine(zfr::positivity_combination(c, Regime::t_ge_1));
    CHECK(large.logN_coef ==
          doctest::Approx(c.a1 / 2.0 + 2.0 * c.a2 + 8.5 * c.a3 + 32.0)
              .epsilon(1e-9));
    CHECK(large.logk_coef == doctest::Approx(abc.C).epsilon(1e-9));
    CHECK(large.logt_coef == doctest::Approx(abc.C).epsilon(1e-9));
    CHECK(large.pole_coef == doctest::Approx(abc.B).epsilon(1e-9));
    CHECK(large.zero_recip_coef == doctest::Approx(abc.A).epsilon(1e-12));
    CHECK(large.prime_coef[0] == doctest::Approx(-(c.a2 + 2.0)).epsilon(1e-9));
    CHECK(large.prime_coef[1] == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(large.prime_coef[2] == doctest::Approx(c.a2 + 6.0).epsilon(1e-9));
    CHECK(large.prime_coef[3] == doctest::Approx(4.0 * c.a3).epsilon(1e-9));
    CHECK(large.prime_coef[4] == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(std::abs(large.error_sum - (-105.993)) < 1e-3);
    CHECK(large.lorentz_poles.empty());
    CHECK(large.lorentz_zeros.empty());

    const zfr::CombinedBound mid =
        zfr::combine(zfr::positivity_combination(c, Regime::t_lt_1));
    CHECK(std::abs(mid.error_sum - (-130.9760239)) < 1e-6);
    CHECK(mid.logt_coef == 0.0);
    // Lorentzian leftovers: poles at m = 2 (weight a2 + 4) and m = 4
    // (weight 2), one zero term at m = 2 (weight 2 a3).
    double pole_m2 = 0.0, pole_m4 = 0.0, zero_m2 = 0.0;
    for (const auto& [coef, m] : mid.lorentz_poles) {
        if (m == 2) pole_m2 += coef;
        if (m == 4) pole_m4 += coef;
    }
    for (const auto& [coef, m] : mid.lorentz_zeros) {
        if (m == 2) zero_m2 += coef;
    }
    CHECK(pole_m2 == doctest::Approx(c.a2 + 4.0).epsilon(1e-9));
    CHECK(pole_m4 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(zero_m2 == doctest::Approx(2.0 * c.a3).epsilon(1e-12));

    CHECK_THROWS_AS(zfr::positivity_combination(c, Regime::t_eq_0),
                    std::invalid_argument);
}

TEST_CASE("two routes through the weighted inequality") {
    // Summing eval_bound over the nine weighted expressions must agree with
    // the closed-form combined coefficients applied directly.
    const zfr::CosCoeffs c = zfr::cos_coeffs(zfr::PolyParams{});
    const auto terms = zfr::positivity_combination(c, Regime::t_ge_1);
    const zfr::CombinedBound sum = zfr::combine(terms);

    const double sigma = 1.07;
    const double t = 3.25;
    const std::int64_t N = 30;
    const int k = 4;
    const double beta0 = 0.93;

    double via_eval = 0.0;
    for (const auto& [expr, w] : terms) {
        via_eval += w * zfr::eval_bound(expr, sigma, t, N, k, beta0);
    }

    const auto profile =
        zfr::prime_sum_profile(N, zfr::SigmaPair::from_sigma(sigma));
    const double sums[5] = {profile.sN, profile.s1N, profile.TN1, profile.RN,
                            profile.RN1};
    double via_combined = sum.pole_coef / (sigma - 1.0) +
                          zfr::kKappa * (sum.logN_coef * std::log(double(N)) +
                                         sum.logk_coef * std::log(double(k)) +
                                         sum.logt_coef * std::log(t)) -
                          sum.zero_recip_coef / (sigma - beta0) +
                          sum.error_sum;
    for (int i = 0; i < 5; ++i) via_combined += sum.prime_coef[i] * sums[i];

    CHECK(via_eval == doctest::Approx(via_combined).epsilon(1e-12));
}

TEST_CASE("sigma ranges are enforced per variant") {
    // The wide-sigma m = 0 variant admits sigma beyond 1.15; the narrow one
    // does not.
    const BoundExpr wide = zfr::jbound(2, 0, Regime::t_eq_0);
    const BoundExpr narrow = zfr::jbound(2, 0, Regime::t_lt_1);
    CHECK_NOTHROW(zfr::eval_bound(wide, 1.5, 0.0, 6, 2, 0.9));
    CHECK_THROWS_AS(zfr::eval_bound(narrow, 1.5, 0.0, 6, 2, 0.9),
                    std::domain_error);
}

TEST_CASE("literature ledger") {
    const auto& ledger = zfr::literature_constants();
    bool has_chi0 = false, has_tail = false;
    for (const auto& rec : ledger) {
        if (rec.id == "chi0.m0") {
            has_chi0 = true;
            CHECK(rec.value == 0.8973);
        }
        if (rec.id == "zeta.sigma1.tail") {
            has_tail = true;
            CHECK(rec.value == -0.19197);
        }
    }
    CHECK(has_chi0);
    CHECK(has_tail);
}
