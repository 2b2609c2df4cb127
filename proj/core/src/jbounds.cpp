#include "zfr/jbounds.hpp"

#include <cmath>
#include <stdexcept>

#include "zfr/digamma.hpp"
#include "zfr/prime_sums.hpp"

namespace zfr {

namespace {

// Principal-character Dirichlet constants (McCurley, Lemmas 3 and 7) and
// half-digamma Steckin constants (McCurley, Lemmas 1 and 2).
constexpr double kChi0M0 = 0.8973;
constexpr double kChi0M2Small = 0.1565;
constexpr double kChi0M2Large = 0.3530;
constexpr double kChi0M4Small = 0.3636;
constexpr double kChi0M4Large = 0.4080;
constexpr double kHalfGammaM0 = 0.2469;
constexpr double kHalfGammaM2Small = 0.2469;
constexpr double kHalfGammaM2Large = 0.3915;
constexpr double kHalfGammaM4Small = 0.5842;
constexpr double kHalfGammaM4Large = 0.4266;

double klog2pi() { return kKappa * std::log(2.0 * kPi); }
double klogpi() { return kKappa * std::log(kPi); }

// C(a, m, t) from the digamma case table.
double C(double a, int m, double t, int k) {
    return mc_table(a, m, t, k).error_term;
}

bool is_large(Regime r) { return r == Regime::t_ge_1; }

// Error constant of the j_{f,0} bound: half the tangent-line digamma bound
// at (sigma+2)/2, the pi normalization, and the truncated prime-sum bound,
// with the sigma-dependent part maximized at sigma = phi.
double j0_error_derived() {
    return 0.5 * digamma_linear_upper((kPhi + 2.0) / 2.0) -
           0.5 * std::log(kPi) + kZetaTailBound;
}

// The k-dependent error expression for each defined case, before taking the
// supremum over even k.  |t| >= 1 rows are evaluated at the binding endpoint
// t = 1; |t| < 1 rows are t-independent (t = 0 passed through).
double error_expression(int n, int mult, Regime regime, int k) {
    const double t = is_large(regime) ? 1.0 : 0.0;
    const double km1 = double(k - 1);
    switch (n) {
        case 0:
            return j0_error_derived();
        case 1: {
            const double base = -klog2pi() + C(0.5 * km1, 1, t, k);
            if (regime == Regime::t_eq_0) return base - 2.0 * kLemma32Floor;
            return base;
        }
        case 2: {
            if (mult == 0) {
                const double chi0 = (regime == Regime::t_eq_0)
                                        ? j0_error_derived()
                                        : -kChi0M0;
                return chi0 + kHalfGammaM0 - 0.5 * klogpi() - klog2pi() +
                       C(km1, 0, 0.0, k);
            }
            const double ell = is_large(regime)
                                   ? kChi0M2Large + kHalfGammaM2Large
                                   : kChi0M2Small + kHalfGammaM2Small;
            return ell - klogpi() - klog2pi() + C(km1, 2, t, k);
        }
        case 3: {
            double e = -4.0 * klog2pi() + 3.0 * C(0.5 * km1, mult, t, k) +
                       C(1.5 * km1, mult, t, k);
            if (mult == 3) e -= 2.0 * lemma33_floor();
            return e;
        }
        case 4: {
            double ell;
            if (mult == 0) {
                ell = -2.0 * kChi0M0 + 4.0 * kHalfGammaM0;
            } else if (mult == 2) {
                ell = is_large(regime)
                          ? 2.0 * kChi0M2Large + 4.0 * kHalfGammaM2Large
                          : 2.0 * kChi0M2Small + 4.0 * kHalfGammaM2Small;
                ell -= klogpi();
            } else {
                ell = is_large(regime)
                          ? 2.0 * kChi0M4Large + 4.0 * kHalfGammaM4Large
                          : 2.0 * kChi0M4Small + 4.0 * kHalfGammaM4Small;
                ell -= klogpi();
            }
            return -2.0 * klogpi() - 5.0 * klog2pi() + ell +
                   4.0 * C(km1, mult, t, k) + C(2.0 * km1, mult, t, k);
        }
        default:
            throw std::invalid_argument("error_expression: bad n");
    }
}

void check_combination(int n, int mult, Regime regime) {
    const bool ok =
        (n == 0 && mult == 0) ||
        (n == 1 && mult == 1 && regime != Regime::t_eq_0) ||
        (n == 1 && mult == 0 && regime == Regime::t_eq_0) ||
        (n == 2 && mult == 0) ||
        (n == 2 && mult == 2 && regime != Regime::t_eq_0) ||
        (n == 3 && (mult == 1 || mult == 3)) ||
        (n == 4 && (mult == 0 || mult == 2 || mult == 4));
    if (!ok) {
        throw std::invalid_argument("jbound: undefined (n, mult, regime)");
    }
}

}  // namespace

double lemma33_floor() { return -(kPhi / kSqrt5 + 0.4); }

double quoted_error_constant(int n, int mult, Regime regime) {
    check_combination(n, mult, regime);
    const bool large = is_large(regime);
    if (n == 0) return -0.601655;
    if (n == 1) {
        if (regime == Regime::t_eq_0) return 0.603562;
        return large ? -0.48973 : -0.596438;
    }
    if (n == 2) {
        if (mult == 0) return regime == Regime::t_eq_0 ? -1.36737 : -1.66308;
        return large ? -0.292925 : -0.700692;
    }
    if (n == 3) {
        if (mult == 1) return large ? -1.9409 : -2.3414;
        return large ? 1.20626 : 1.03;
    }
    // n == 4
    if (mult == 0) return -5.42237;
    if (mult == 2) return large ? -1.63101 : -2.92759;
    return large ? -0.410404 : -0.0298279;
}

RederivedConstant rederive_error_constant(int n, int mult, Regime regime) {
    check_combination(n, mult, regime);
    RederivedConstant out;
    out.quoted = quoted_error_constant(n, mult, regime);
    out.binding_t = is_large(regime) ? 1.0 : 0.0;

    if (n == 0) {
        out.derived = j0_error_derived();
        out.binding_k = 0;
    } else {
        double sup = -1e300;
        double prev = 1e300;
        int sup_k = 0;
        for (int k = 2; k <= 200; k += 2) {
            const double e = error_expression(n, mult, regime, k);
            if (e > sup) {
                sup = e;
                sup_k = k;
            }
            if (k > 160 && e >= prev) out.tail_decreasing = false;
            prev = e;
        }
        out.derived = sup;
        out.binding_k = sup_k;
    }
    out.margin = out.quoted - out.derived;
    return out;
}

BoundExpr jbound(int n, int mult, Regime regime) {
    check_combination(n, mult, regime);
    BoundExpr e;
    e.n = n;
    e.mult = mult;
    e.regime = regime;
    e.error_const = quoted_error_constant(n, mult, regime);
    const bool large = is_large(regime);

    switch (n) {
        case 0:
            e.pole_coef = 1.0;
            e.sigma_range = SigmaRange::one_phi;
            break;
        case 1:
            e.logN_coef = 0.5;
            e.logk_coef = 1.0;
            e.sigma_range = SigmaRange::one_phi;
            if (regime == Regime::t_eq_0) {
                e.zero_term = {ZeroTermKind::lorentzian, 2.0, 1};
            } else {
                if (large) e.logt_coef = 1.0;
                e.zero_term = {ZeroTermKind::reciprocal, 1.0, 0};
            }
            break;
        case 2:
            e.logN_coef = 1.0;
            e.logk_coef = 1.0;
            if (mult == 0) {
                e.pole_coef = 1.0;
                e.prime_terms = {{PrimeSumKind::sN, -1.0}};
                e.sigma_range = regime == Regime::t_eq_0 ? SigmaRange::one_phi
                                                         : SigmaRange::one_115;
            } else {
                e.prime_terms = {{PrimeSumKind::TN1, 1.0}};
                e.sigma_range = SigmaRange::one_115;
                if (large) {
                    e.logt_coef = 2.0;
                } else {
                    e.lorentz_pole = {{1.0, 2}};
                }
            }
            break;
        case 3:
            e.logN_coef = 2.5;
            e.logk_coef = 4.0;
            e.prime_terms = {{PrimeSumKind::RN, 1.0}};
            e.sigma_range = SigmaRange::one_phi;
            if (large) e.logt_coef = 4.0;
            if (mult == 1) {
                e.zero_term = {ZeroTermKind::reciprocal, 2.0, 0};
            } else if (!large) {
                e.zero_term = {ZeroTermKind::lorentzian, 2.0, 2};
            }
            break;
        case 4:
            e.logN_coef = 5.0;
            e.logk_coef = 5.0;
            e.sigma_range = SigmaRange::one_115;
            if (mult == 0) {
                e.pole_coef = 2.0;
                e.prime_terms = {{PrimeSumKind::sN, -2.0},
                                 {PrimeSumKind::s1N, -1.0}};
            } else {
                e.prime_terms = {{PrimeSumKind::TN1, 2.0},
                                 {PrimeSumKind::RN1, 1.0}};
                if (large) {
                    e.logt_coef = 8.0;
                } else {
                    e.lorentz_pole = {{2.0, mult}};
                }
            }
            break;
    }
    return e;
}

double eval_bound(const BoundExpr& expr, double sigma, double t,
                  std::int64_t N, int k, double beta0) {
    const double hi = expr.sigma_range == SigmaRange::one_phi ? kPhi : 1.15;
    if (!(sigma > 1.0 && sigma < hi)) {
        throw std::domain_error("eval_bound: sigma outside the lemma range");
    }
    if (k < 2 || k % 2 != 0) {
        throw std::domain_error("eval_bound: k must be even and >= 2");
    }
    if (!(beta0 > 0.5 && beta0 < 1.0)) {
        throw std::domain_error("eval_bound: beta0 outside (1/2, 1)");
    }
    if (expr.logt_coef != 0.0 && std::abs(t) < 1.0) {
        throw std::domain_error("eval_bound: |t| >= 1 required for log|t| term");
    }

    const SigmaPair pair = SigmaPair::from_sigma(sigma);
    const PrimeSumProfile profile = prime_sum_profile(N, pair);

    double value = expr.pole_coef / (sigma - 1.0);
    if (expr.lorentz_pole) {
        const auto [coef, m] = *expr.lorentz_pole;
        const double mt = m * t;
        value += coef * (sigma - 1.0) /
                 ((sigma - 1.0) * (sigma - 1.0) + mt * mt);
    }
    value += kKappa * (expr.logN_coef * std::log(double(N)) +
                       expr.logk_coef * std::log(double(k)) +
                       expr.logt_coef * std::log(std::abs(t)));
    switch (expr.zero_term.kind) {
        case ZeroTermKind::none:
            break;
        case ZeroTermKind::reciprocal:
            value -= expr.zero_term.n / (sigma - beta0);
            break;
        case ZeroTermKind::lorentzian: {
            const double d = sigma - beta0;
            const double mt = expr.zero_term.mult * t;
            value -= expr.zero_term.n * d / (d * d + mt * mt);
            break;
        }
    }
    value += expr.error_const;
    const double sums[5] = {profile.sN, profile.s1N, profile.TN1, profile.RN,
                            profile.RN1};
    for (const PrimeTerm& term : expr.prime_terms) {
        value += term.coef * sums[static_cast<int>(term.kind)];
    }
    return value;
}

std::vector<std::pair<BoundExpr, double>> positivity_combination(
    const CosCoeffs& c, Regime regime) {
    if (regime == Regime::t_eq_0) {
        throw std::invalid_argument(
            "positivity_combination: regime must be t_ge_1 or t_lt_1");
    }
    const double ga2b2 = c.a0 - c.a2 + c.a4;
    return {
        {jbound(0, 0, regime), ga2b2},
        {jbound(2, 0, regime), c.a2 - 4.0 * c.a4},
        {jbound(4, 0, regime), 3.0 * c.a4},
        {jbound(1, 1, regime), c.a1 - 3.0 * c.a3},
        {jbound(3, 1, regime), 3.0 * c.a3},
        {jbound(2, 2, regime), c.a2 - 4.0 * c.a4},
        {jbound(4, 2, regime), 4.0 * c.a4},
        {jbound(3, 3, regime), c.a3},
        {jbound(4, 4, regime), c.a4},
    };
}

CombinedBound combine(const std::vector<std::pair<BoundExpr, double>>& terms) {
    CombinedBound out;
    for (const auto& [expr, w] : terms) {
        out.pole_coef += w * expr.pole_coef;
        out.logN_coef += w * expr.logN_coef;
        out.logk_coef += w * expr.logk_coef;
        out.logt_coef += w * expr.logt_coef;
        out.error_sum += w * expr.error_const;
        if (expr.lorentz_pole) {
            out.lorentz_poles.emplace_back(w * expr.lorentz_pole->first,
                                           expr.lorentz_pole->second);
        }
        switch (expr.zero_term.kind) {
            case ZeroTermKind::none:
                break;
            case ZeroTermKind::reciprocal:
                out.zero_recip_coef += w * expr.zero_term.n;
                break;
            case ZeroTermKind::lorentzian:
                out.lorentz_zeros.emplace_back(w * expr.zero_term.n,
                                               expr.zero_term.mult);
                break;
        }
        for (const PrimeTerm& term : expr.prime_terms) {
            out.prime_coef[static_cast<int>(term.kind)] += w * term.coef;
        }
    }
    return out;
}

const std::vector<ConstantRecord>& literature_constants() {
    static const std::vector<ConstantRecord> ledger = {
        {"chi0.m0", kChi0M0,
         "principal-character bound, m=0 (McCurley Lemma 3)"},
        {"chi0.m2.t_lt_1", kChi0M2Small,
         "principal-character bound, m=2, |t|<1 (McCurley Lemma 7)"},
        {"chi0.m2.t_ge_1", kChi0M2Large,
         "principal-character bound, m=2, |t|>=1 (McCurley Lemma 7)"},
        {"chi0.m4.t_lt_1", kChi0M4Small,
         "principal-character bound, m=4, |t|<1 (McCurley Lemma 7)"},
        {"chi0.m4.t_ge_1", kChi0M4Large,
         "principal-character bound, m=4, |t|>=1 (McCurley Lemma 7)"},
        {"halfgamma.m0", kHalfGammaM0,
         "half-digamma pair bound, m=0 (McCurley Lemmas 1/2)"},
        {"halfgamma.m2.t_lt_1", kHalfGammaM2Small,
         "half-digamma pair bound, m=2, |t|<1 (McCurley Lemmas 1/2)"},
        {"halfgamma.m2.t_ge_1", kHalfGammaM2Large,
         "half-digamma pair bound, m=2, |t|>=1 (McCurley Lemmas 1/2)"},
        {"halfgamma.m4.t_lt_1", kHalfGammaM4Small,
         "half-digamma pair bound, m=4, |t|<1 (McCurley Lemmas 1/2)"},
        {"halfgamma.m4.t_ge_1", kHalfGammaM4Large,
         "half-digamma pair bound, m=4, |t|>=1 (McCurley Lemmas 1/2)"},
        {"zeta.sigma1.tail", kZetaTailBound,
         "truncated zeta log-derivative prime sum, p <= 1e4"},
        {"kernel.floor.decoupled", kLemma32Floor,
         "two-pole kernel floor, |Im z| < 1 decoupled from t"},
        {"kernel.floor.tripled", lemma33_floor(),
         "two-pole kernel floor at tripled ordinate, -(phi/sqrt5 + 2/5)"},
    };
    return ledger;
}

}  // namespace zfr
