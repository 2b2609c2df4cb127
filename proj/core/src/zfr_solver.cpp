#include "zfr/zfr_solver.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "zfr/prime_sums.hpp"

namespace zfr {

namespace {

// sigma grid over (1, 1.15): open left endpoint approached at 1e-9, then
// step 1e-3.  The A_p budget is tightest as sigma -> 1+.
std::vector<double> sigma_grid_115() {
    std::vector<double> grid;
    grid.push_back(1.0 + 1e-9);
    for (int i = 1; i < 150; ++i) grid.push_back(1.0 + i * 1e-3);
    return grid;
}

void check_a23_budget(const CosCoeffs& coeffs, double budget,
                      std::vector<std::string>& failures) {
    for (double sigma : sigma_grid_115()) {
        const double value = a23_log_combination(sigma, coeffs);
        if (!(value < budget)) {
            std::ostringstream msg;
            msg << "A2 log2 + A3 log3 = " << value << " >= " << budget
                << " at sigma = " << sigma;
            failures.push_back(msg.str());
            return;
        }
    }
}

}  // namespace

double min_log_nk() { return std::log(4.0); }

AbcTriple abc_from_coeffs(const CosCoeffs& c) {
    AbcTriple abc;
    abc.A = c.a1 + 3.0 * c.a3;
    // gamma a^2 b^2 = a0 - a2 + a4, so B = a0 + 3 a4.
    abc.B = c.a0 + 3.0 * c.a4;
    abc.C = c.a1 + 2.0 * c.a2 + 13.0 * c.a3 + 32.0 * c.a4;
    return abc;
}

double radius_score(const AbcTriple& abc, double q, double r) {
    return ((abc.A - abc.B) * r - q * r * r) / (abc.B + q * r);
}

double a23_log_combination(double sigma, const CosCoeffs& coeffs) {
    const SigmaPair pair = SigmaPair::from_sigma(sigma);
    return a_p(2, pair, coeffs).value * std::log(2.0) +
           a_p(3, pair, coeffs).value * std::log(3.0);
}

RegionResult large_t_constant(const CosCoeffs& coeffs) {
    const AbcTriple abc = abc_from_coeffs(coeffs);
    if (abc.A * abc.B <= 0.0) {
        throw std::domain_error("large_t_constant: AB must be positive");
    }
    const double root = std::sqrt(abc.A * abc.B);
    if (!(root > abc.B)) {
        throw std::domain_error("large_t_constant: sqrt(AB) <= B, zero radius");
    }
    const double q = abc.C * kKappa;

    RegionResult result;
    result.regime = RegionRegime::t_ge_1;
    result.radius = (root - abc.B) / q;
    result.c_lower = (abc.A + abc.B - 2.0 * root) / q;
    result.constant = 1.0 / result.c_lower;
    result.sigma_at_min = 1.0 + result.radius / min_log_nk();

    const auto grid = sigma_grid_115();
    const ApSweepResult sweep =
        verify_ap_negative(100'000, grid, coeffs);
    if (!sweep.all_negative) {
        std::ostringstream msg;
        msg << "A_p >= 0 at p = " << sweep.worst_p
            << ", sigma = " << sweep.worst_sigma;
        result.precondition_failures.push_back(msg.str());
    }
    check_a23_budget(coeffs, kApBudgetLargeT, result.precondition_failures);
    if (!(result.sigma_at_min < 1.15)) {
        result.precondition_failures.push_back(
            "sigma = 1 + r/log(NkT) leaves (1, 1.15) at Nk|t| = 4");
    }
    return result;
}

RegionResult tiny_t_constant(double gamma_cut, double r1) {
    if (!(gamma_cut >= 0.0) || !(r1 > 0.0)) {
        throw std::domain_error("tiny_t_constant: need gamma_cut >= 0, r1 > 0");
    }
    const double g2 = gamma_cut * gamma_cut;
    double discriminant = 4.0 * r1 * r1 - 4.0 * g2 -
                          12.0 * kKappa * r1 * g2 -
                          9.0 * kKappa * kKappa * r1 * r1 * g2;
    // Roundoff at the double-root boundary gamma = 2/(2/r1 + 3 kappa).
    if (discriminant < 0.0 && discriminant > -1e-10 * r1 * r1) {
        discriminant = 0.0;
    }
    if (discriminant < 0.0) {
        throw std::domain_error("tiny_t_constant: negative discriminant");
    }

    RegionResult result;
    result.regime = RegionRegime::t_tiny;
    result.radius = r1;
    result.gamma_cut = gamma_cut;
    result.c_lower = (-3.0 * kKappa * r1 * r1 + std::sqrt(discriminant)) /
                     (2.0 + 3.0 * kKappa * r1);
    result.constant = 1.0 / result.c_lower;
    result.sigma_at_min = 1.0 + r1 / min_log_nk();

    const double printed_radicand = 4.0 * r1 * r1 - 4.0 * g2 -
                                    12.0 * r1 * g2 * kKappa -
                                    9.0 * r1 * r1 * g2 * kKappa;
    if (printed_radicand >= 0.0) {
        result.c_printed_variant = (-3.0 * r1 * kKappa +
                                    std::sqrt(printed_radicand)) /
                                   (2.0 + 3.0 * r1 * kKappa);
    }

    if (!(result.sigma_at_min < kPhi)) {
        result.precondition_failures.push_back(
            "sigma = 1 + r1/log(Nk) leaves (1, phi) at Nk = 4");
    }
    return result;
}

RegionResult mid_t_constant(const CosCoeffs& coeffs, double gamma_cut,
                            double delta) {
    if (!(delta > 0.0)) {
        throw std::domain_error("mid_t_constant: delta must be positive");
    }
    const AbcTriple abc = abc_from_coeffs(coeffs);
    const double root = std::sqrt(abc.A * abc.B);
    if (!(root > abc.B)) {
        throw std::domain_error("mid_t_constant: sqrt(AB) <= B, zero radius");
    }
    const double q = abc.C * kKappa + delta;

    RegionResult result;
    result.regime = RegionRegime::t_mid;
    result.radius = (root - abc.B) / q;
    result.c_lower = (abc.A + abc.B - 2.0 * root) / q;
    result.constant = 1.0 / result.c_lower;
    result.gamma_cut = gamma_cut;
    result.delta = delta;
    result.sigma_at_min = 1.0 + result.radius / min_log_nk();

    // The four-term inequality at r2 = radius, c = c_lower: Lorentzian pole
    // leftovers minus the Lorentzian zero term minus delta must be negative.
    const CombinedBound combined =
        combine(positivity_combination(coeffs, Regime::t_lt_1));
    const double X = root - abc.B;      // r2 * q
    const double Z = abc.A - root;      // (r2 + c) * q
    const double g2q2 = gamma_cut * gamma_cut * q * q;
    double lhs = -delta;
    for (const auto& [coef, m] : combined.lorentz_poles) {
        lhs += coef * X * q / (X * X + double(m) * double(m) * g2q2);
    }
    for (const auto& [coef, m] : combined.lorentz_zeros) {
        lhs -= coef * Z * q / (Z * Z + double(m) * double(m) * g2q2);
    }
    result.delta_inequality_lhs = lhs;
    if (!(lhs < 0.0)) {
        std::ostringstream msg;
        msg << "delta inequality fails: lhs = " << lhs
            << " (pole terms at m=2,4 minus zero term at m=2 minus delta="
            << delta << ")";
        throw std::domain_error(msg.str());
    }

    check_a23_budget(coeffs, kApBudgetMidT, result.precondition_failures);
    if (!(result.sigma_at_min < 1.15)) {
        result.precondition_failures.push_back(
            "sigma = 1 + r2/log(Nk) leaves (1, 1.15) at Nk = 4");
    }
    return result;
}

Verdict check_lemma71(std::span<const SatakeParams> samples, double sigma,
                      std::int64_t cutoff, const TolerancePolicy& policy) {
    if (!(sigma > 1.0 && sigma < kPhi)) {
        throw std::domain_error("check_lemma71: sigma outside (1, phi)");
    }
    const SigmaPair pair = SigmaPair::from_sigma(sigma);
    std::map<std::int64_t, const SatakeParams*> by_prime;
    for (const SatakeParams& sp : samples) by_prime[sp.prime] = &sp;

    double worst = 0.0;
    for (const auto& [p, sp] : by_prime) {
        const double logp = std::log(double(p));
        for (std::int64_t n = p; n <= cutoff; n *= p) {
            const int l = int(std::llround(std::log(double(n)) / logp));
            const double lam = lambda_power(*sp, l, 1);
            const double weight =
                1.0 - std::pow(double(n), sigma - pair.sigma1) / kSqrt5;
            const double term = weight * logp / std::pow(double(n), sigma) *
                                (1.0 + lam) * (1.0 + lam);
            worst = std::min(worst, term);
            if (n > cutoff / p) break;
        }
    }
    return leq_with_policy(-worst, 0.0, policy);
}

std::vector<RegionResult> theorem_summary() {
    const CosCoeffs coeffs = cos_coeffs(PolyParams{});
    std::vector<RegionResult> out;
    out.push_back(large_t_constant(coeffs));
    out.push_back(tiny_t_constant(kSettledGammaCut, kSettledTinyRadius));
    out.push_back(mid_t_constant(coeffs, kSettledGammaCut, kSettledDelta));
    return out;
}

}  // namespace zfr
