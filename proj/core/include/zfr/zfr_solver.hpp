#pragma once

// Final zero-free-region assembly.
//
// Large |t|:  combining the weighted bounds gives
//   A/(sigma - beta0) < B/(sigma - 1) + C kappa log(Nk|t|),
// with A = a1 + 3a3, B = gamma a^2 b^2 + a2 + 2a4, C = a1 + 2a2 + 13a3 + 32a4.
// Putting sigma = 1 + r/log(Nk|t|) and maximizing
//   f(r) = ((A - B) r - C kappa r^2) / (B + C kappa r)
// at r = (sqrt(AB) - B)/(C kappa) yields beta0 <= 1 - c/log(Nk|t|) with
//   c = (A + B - 2 sqrt(AB))/(C kappa).
//
// Very small |t| (<= gamma_cut / log kN): the coefficient-free combination
//   j0 + 2 j1 + j2 >= 0 gives 4x/(x^2 + gamma^2) <= 2/r1 + 3 kappa for
// x = r1 + c, i.e. the larger root of (2/r1 + 3k) x^2 - 4x + (2/r1 + 3k) g^2.
// Expanded in closed form,
//   c = (-3 kappa r1^2 + sqrt(4 r1^2 - 4 g^2 - 12 kappa r1 g^2
//        - 9 kappa^2 r1^2 g^2)) / (2 + 3 kappa r1).
// A variant with the radical term 9 r1 g^2 kappa (first power of both) and
// numerator -3 r1 kappa circulates in print; it evaluates to a negative
// numerator and both values are reported side by side.
//
// Intermediate |t|: the Lorentzian leftovers are absorbed into a slack delta
// subject to the four-term inequality delta_inequality_lhs < 0, after which
// the same optimization runs with C kappa replaced by C kappa + delta.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zfr/jbounds.hpp"
#include "zfr/tolerance.hpp"
#include "zfr/trigpoly.hpp"

namespace zfr {

// Parameters the derivation settles on.
inline constexpr double kSettledGammaCut = 0.30992;
inline constexpr double kSettledTinyRadius = 0.675015;
inline constexpr double kSettledDelta = 1.62622;
inline constexpr double kSettledLargeTConstant = 16.7053;
inline constexpr double kSettledMidTConstant = 16.9309;
inline constexpr double kPriorConstant = 445.994;

// A_p budget thresholds: A2 log2 + A3 log3 must stay below 105.9932431 in
// the large-|t| argument and below 37.5815 in the intermediate one.
inline constexpr double kApBudgetLargeT = 105.9932431;
inline constexpr double kApBudgetMidT = 37.5815;

// log(Nk) at the minimal admissible level/weight (N = 2, k = 2).
double min_log_nk();

struct AbcTriple {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
};

AbcTriple abc_from_coeffs(const CosCoeffs& coeffs);

// f(r) = ((A - B) r - q r^2) / (B + q r), maximized at r = (sqrt(AB) - B)/q.
double radius_score(const AbcTriple& abc, double q, double r);

// A2 log 2 + A3 log 3 at the given abscissa.
double a23_log_combination(double sigma, const CosCoeffs& coeffs);

enum class RegionRegime { t_ge_1, t_tiny, t_mid };

struct RegionResult {
    RegionRegime regime = RegionRegime::t_ge_1;
    double radius = 0.0;
    double c_lower = 0.0;
    double constant = 0.0;  // 1 / c_lower
    std::optional<double> gamma_cut;
    std::optional<double> delta;
    // sigma = 1 + radius / log(Nk|t|) at the minimal admissible Nk|t|.
    double sigma_at_min = 0.0;
    // Empty when every numeric precondition of the derivation checked out.
    std::vector<std::string> precondition_failures;
    // Small-t variant printed with first-power radical terms (diagnostic).
    std::optional<double> c_printed_variant;
    // Value of the four-term delta inequality (t_mid; must be < 0).
    std::optional<double> delta_inequality_lhs;
};

// |t| >= 1 region.  Throws std::domain_error when AB <= 0 or
// sqrt(AB) <= B (degenerate radius).
RegionResult large_t_constant(const CosCoeffs& coeffs);

// |t| <= gamma_cut / log(kN) region.  Throws std::domain_error when the
// quadratic discriminant 4 - q^2 gamma^2 (q = 2/r1 + 3 kappa) is <= 0.
RegionResult tiny_t_constant(double gamma_cut, double r1);

// gamma_cut / log(kN) < |t| < 1 region.  Throws std::domain_error when
// delta <= 0 or the four-term inequality fails at (r2, c).
RegionResult mid_t_constant(const CosCoeffs& coeffs, double gamma_cut,
                            double delta);

// Termwise nonnegativity of the truncated coefficient-free combination
//   sum_{n <= cutoff} (1 - 1/(sqrt5 n^{sigma1-sigma})) Lambda(n)/n^sigma
//                     (1 + Lambda_f(n))^2
// over the prime powers of the sampled local roots.
Verdict check_lemma71(std::span<const SatakeParams> samples, double sigma,
                      std::int64_t cutoff,
                      const TolerancePolicy& policy = {});

// The three regimes at the settled parameters, in order
// [t_ge_1, t_tiny, t_mid].
std::vector<RegionResult> theorem_summary();

}  // namespace zfr
