#include "zfr/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace zfr {

namespace {

using Cplx = std::complex<double>;

Cplx cpow_int(Cplx base, int exponent) {
    Cplx result(1.0, 0.0);
    Cplx acc = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result *= acc;
        acc *= acc;
        e >>= 1;
    }
    return result;
}

// sum_{j=0}^{m} alpha1^{(m-j)l} alpha2^{jl}
Cplx sym_power_sum(const SatakeParams& sp, int l, int m) {
    Cplx total(0.0, 0.0);
    for (int j = 0; j <= m; ++j) {
        total += cpow_int(sp.alpha1, (m - j) * l) * cpow_int(sp.alpha2, j * l);
    }
    return total;
}

}  // namespace

SatakeParams SatakeParams::unramified(std::int64_t p, double theta) {
    SatakeParams sp;
    sp.prime = p;
    sp.ramified = false;
    sp.alpha1 = std::polar(1.0, theta);
    sp.alpha2 = std::conj(sp.alpha1);
    return sp;
}

SatakeParams SatakeParams::ramified_root(std::int64_t p, int sign) {
    SatakeParams sp;
    sp.prime = p;
    sp.ramified = true;
    sp.alpha1 = Cplx((sign >= 0 ? 1.0 : -1.0) / std::sqrt(double(p)), 0.0);
    sp.alpha2 = Cplx(0.0, 0.0);
    return sp;
}

void SatakeParams::validate() const {
    if (prime < 2) throw std::invalid_argument("SatakeParams: prime < 2");
    if (ramified) {
        if (std::abs(alpha2) != 0.0) {
            throw std::invalid_argument("SatakeParams: ramified needs alpha2 = 0");
        }
        const double want = 1.0 / std::sqrt(double(prime));
        if (std::abs(std::abs(alpha1) - want) > 1e-12) {
            throw std::invalid_argument(
                "SatakeParams: ramified needs |alpha1| = p^(-1/2)");
        }
    } else {
        if (std::abs(std::abs(alpha1) - 1.0) > 1e-12 ||
            std::abs(std::abs(alpha2) - 1.0) > 1e-12 ||
            std::abs(alpha1 * alpha2 - Cplx(1.0, 0.0)) > 1e-12) {
            throw std::invalid_argument(
                "SatakeParams: unramified needs unit reciprocal roots");
        }
    }
}

double lambda_power(const SatakeParams& sp, int l, int m) {
    sp.validate();
    if (l < 1) throw std::invalid_argument("lambda_power: l must be >= 1");
    if (m < 0 || m > 4) throw std::invalid_argument("lambda_power: m in [0,4]");

    const double chi0 = sp.ramified ? 0.0 : 1.0;
    Cplx value;
    switch (m) {
        case 0:
            value = Cplx(1.0, 0.0);
            break;
        case 1:
            value = sym_power_sum(sp, l, 1);
            break;
        case 2:
            value = chi0 + sym_power_sum(sp, l, 2);
            break;
        case 3:
            // Sym^3 plus two copies of the trace; the level factor removes
            // the ramified part of the squared standard piece.
            value = sym_power_sum(sp, l, 3) + 2.0 * sym_power_sum(sp, l, 1);
            if (sp.ramified) value -= 2.0 * cpow_int(sp.alpha1, l);
            break;
        case 4:
            value = 2.0 * chi0 + 3.0 * sym_power_sum(sp, l, 2) +
                    sym_power_sum(sp, l, 4);
            if (sp.ramified) value -= 3.0 * cpow_int(sp.alpha1, 2 * l);
            break;
        default:
            value = Cplx(0.0, 0.0);
    }
    if (std::abs(value.imag()) > 1e-10) {
        throw std::domain_error("lambda_power: non-real coefficient");
    }
    return value.real();
}

CosCoeffs cos_coeffs(const PolyParams& params) {
    const double g = params.gamma_coeff;
    const double a = params.a;
    const double b = params.b;
    CosCoeffs c;
    c.a0 = 0.5 * g * (0.75 + 4.0 * a * b + b * b + a * a * (1.0 + 2.0 * b * b));
    c.a1 = 0.5 * g * (a + b) * (3.0 + 4.0 * a * b);
    c.a2 = 0.5 * g * (1.0 + a * a + 4.0 * a * b + b * b);
    c.a3 = 0.5 * g * (a + b);
    c.a4 = g / 8.0;
    return c;
}

double p4_value(const PolyParams& params, double theta, double lam) {
    const double c = std::cos(theta);
    const double u = params.a + lam * c;
    const double v = params.b + lam * c;
    return params.gamma_coeff * u * u * v * v;
}

bool lam_in_deligne_range(double lam) { return std::abs(lam) <= 2.0; }

double prop41_residual(const PolyParams& params, double theta, double lam) {
    const CosCoeffs c = cos_coeffs(params);
    const double ga2b2 = params.gamma_coeff * params.a * params.a *
                         params.b * params.b;
    const double l2 = lam * lam;
    const double l3 = l2 * lam;
    const double l4 = l2 * l2;
    const double expansion =
        ga2b2 + (c.a2 - 4.0 * c.a4) * l2 + 3.0 * c.a4 * l4 +
        ((c.a1 - 3.0 * c.a3) * lam + 3.0 * c.a3 * l3) * std::cos(theta) +
        ((c.a2 - 4.0 * c.a4) * l2 + 4.0 * c.a4 * l4) * std::cos(2.0 * theta) +
        c.a3 * l3 * std::cos(3.0 * theta) + c.a4 * l4 * std::cos(4.0 * theta);
    return expansion - p4_value(params, theta, lam);
}

double objective(const PolyParams& params) {
    const CosCoeffs c = cos_coeffs(params);
    const double ga2b2 = params.gamma_coeff * params.a * params.a *
                         params.b * params.b;
    const double A = c.a1 + 3.0 * c.a3;
    const double B = ga2b2 + c.a2 + 2.0 * c.a4;
    const double C = c.a1 + 2.0 * c.a2 + 13.0 * c.a3 + 32.0 * c.a4;
    if (A * B < 0.0) {
        throw std::domain_error("objective: AB < 0");
    }
    return (A + B - 2.0 * std::sqrt(A * B)) / (C * kKappa);
}

namespace {

// Score used by the optimizer: the method only produces a positive radius
// when A > B, so candidates with A <= B are worthless.
double objective_at(double a, double b) {
    const PolyParams params{8.0, a, b};
    const CosCoeffs c = cos_coeffs(params);
    const double A = c.a1 + 3.0 * c.a3;
    const double B = 8.0 * a * a * b * b + c.a2 + 2.0 * c.a4;
    if (A <= B) return 0.0;
    return objective(params);
}

// Golden-section maximization of objective_at along one coordinate.
double golden_line_max(double lo, double hi, double other, bool vary_a) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    auto eval = [&](double x) {
        return vary_a ? objective_at(x, other) : objective_at(other, x);
    };
    double f1 = eval(x1);
    double f2 = eval(x2);
    while (hi - lo > 1e-7) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = eval(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = eval(x1);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

AbOptimum optimize_ab(double a_lo, double a_hi, double b_lo, double b_hi) {
    if (!(a_lo < a_hi) || !(b_lo < b_hi)) {
        throw std::invalid_argument("optimize_ab: empty box");
    }
    if (a_lo < 0.0 || b_lo < 0.0 || a_hi > 3.0 || b_hi > 3.0) {
        throw std::invalid_argument("optimize_ab: box must lie inside [0, 3]^2");
    }

    constexpr double kGridStep = 1e-2;
    AbOptimum best;
    best.objective = -1.0;
    const int na = static_cast<int>(std::floor((a_hi - a_lo) / kGridStep)) + 1;
    const int nb = static_cast<int>(std::floor((b_hi - b_lo) / kGridStep)) + 1;
    for (int i = 0; i <= na; ++i) {
        const double a = std::min(a_lo + i * kGridStep, a_hi);
        for (int j = 0; j <= nb; ++j) {
            const double b = std::min(b_lo + j * kGridStep, b_hi);
            const double val = objective_at(a, b);
            if (val > best.objective) {
                best = {a, b, val, false};
            }
        }
    }

    // Alternating per-coordinate refinement on a shrinking window.
    double window = 2.0 * kGridStep;
    while (window > 1e-6) {
        const double a_l = std::max(a_lo, best.a - window);
        const double a_h = std::min(a_hi, best.a + window);
        best.a = golden_line_max(a_l, a_h, best.b, /*vary_a=*/true);
        const double b_l = std::max(b_lo, best.b - window);
        const double b_h = std::min(b_hi, best.b + window);
        best.b = golden_line_max(b_l, b_h, best.a, /*vary_a=*/false);
        window *= 0.5;
    }
    best.objective = objective_at(best.a, best.b);
    best.on_boundary = (best.a - a_lo <= 1e-6 || a_hi - best.a <= 1e-6 ||
                        best.b - b_lo <= 1e-6 || b_hi - best.b <= 1e-6);
    return best;
}

}  // namespace zfr
