#include "zfr/steckin.hpp"

#include <cmath>
#include <stdexcept>

namespace zfr {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

void validate_pair(const SigmaPair& pair) {
    require(pair.consistent(), "SigmaPair: sigma1 inconsistent with sigma");
    require(pair.sigma > 1.0 && pair.sigma < kPhi + 1e-12,
            "SigmaPair: sigma outside (1, phi)");
}

double re_inv(Complex w) {
    if (w == Complex(0.0, 0.0)) {
        throw std::domain_error("pole in 1/(s-1+conj z)");
    }
    return (1.0 / w).real();
}

}  // namespace

SigmaPair SigmaPair::from_sigma(double sigma) {
    SigmaPair pair;
    pair.sigma = sigma;
    pair.sigma1 = 0.5 + 0.5 * std::sqrt(1.0 + 4.0 * sigma * sigma);
    return pair;
}

bool SigmaPair::consistent() const {
    const double expected = 0.5 + 0.5 * std::sqrt(1.0 + 4.0 * sigma * sigma);
    return std::abs(sigma1 - expected) <= 1e-12 * std::max(1.0, expected);
}

double f_pair(Complex s, Complex z) {
    const Complex d1 = s - z;
    const Complex d2 = s - 1.0 + std::conj(z);
    if (d1 == Complex(0.0, 0.0) || d2 == Complex(0.0, 0.0)) {
        throw std::domain_error("f_pair: evaluation at a pole");
    }
    return (1.0 / d1).real() + (1.0 / d2).real();
}

Verdict check_lemma31a(const SigmaPair& pair, double t, Complex z,
                       const TolerancePolicy& policy) {
    validate_pair(pair);
    require(z.real() > 0.0 && z.real() < 1.0,
            "lemma31a: requires 0 < Re(z) < 1");
    const Complex s(pair.sigma, t);
    const Complex s1(pair.sigma1, t);
    const double diff = f_pair(s, z) - f_pair(s1, z) / kSqrt5;
    return leq_with_policy(-diff, 0.0, policy);
}

Verdict check_lemma31b(const SigmaPair& pair, double t, Complex z,
                       const TolerancePolicy& policy) {
    validate_pair(pair);
    require(z.real() >= 0.5 && z.real() < 1.0,
            "lemma31b: requires 1/2 <= Re(z) < 1");
    require(z.imag() == t, "lemma31b: requires Im(z) = t");
    const Complex s(pair.sigma, t);
    const Complex s1(pair.sigma1, t);
    const double diff =
        re_inv(s - 1.0 + std::conj(z)) - f_pair(s1, z) / kSqrt5;
    return leq_with_policy(-diff, 0.0, policy);
}

double lemma32_lower(const SigmaPair& pair, Complex z) {
    validate_pair(pair);
    require(z.real() >= 0.5 && z.real() <= 1.0,
            "lemma32: requires 1/2 <= Re(z) <= 1");
    require(std::abs(z.imag()) < 1.0, "lemma32: requires |Im(z)| < 1");
    const Complex s(pair.sigma, 0.0);
    const Complex s1(pair.sigma1, 0.0);
    return re_inv(s - 1.0 + std::conj(z)) - f_pair(s1, z) / kSqrt5;
}

double lemma33_lower(const SigmaPair& pair, Complex z) {
    validate_pair(pair);
    require(z.real() >= 0.5 && z.real() < 1.0,
            "lemma33: requires 1/2 <= Re(z) < 1");
    const Complex s(pair.sigma, 3.0 * z.imag());
    const Complex s1(pair.sigma1, 3.0 * z.imag());
    return re_inv(s - 1.0 + std::conj(z)) - f_pair(s1, z) / kSqrt5;
}

double gamma_steckin_bound(double a, int m, double t, const SigmaPair& pair) {
    validate_pair(pair);
    require(a >= 0.0, "gamma_steckin_bound: requires a >= 0");
    require(m >= 0, "gamma_steckin_bound: requires m >= 0");

    const double pa = kPhi + a;
    if (m == 0) {
        return kKappa * std::log(pa) + 1.0 / (kSqrt5 * pa);
    }
    const double tail = 0.5 / (1.0 + a) + 0.5 / (kSqrt5 * pa);
    const double mm = static_cast<double>(m);
    if (std::abs(t) < 1.0) {
        const double two_pa = 2.0 * pa;
        return 0.5 * kKappa * std::log(pa * pa + mm * mm) -
               kKappa * two_pa / (two_pa * two_pa + 4.0 * mm * mm) + tail;
    }
    const double mt = mm * std::abs(t);
    const double ratio = pa / mt;
    return kKappa * std::log(mt) +
           0.5 * kKappa * std::log1p(ratio * ratio) + tail;
}

MCValue mc_table(double a, int m, double t, int k) {
    if (k < 2 || k % 2 != 0) {
        throw std::invalid_argument("mc_table: k must be even and >= 2");
    }
    if (m < 0) throw std::invalid_argument("mc_table: m must be >= 0");

    const double km1 = static_cast<double>(k - 1);
    const bool a_is_zero = (a == 0.0);
    if (!a_is_zero) {
        const double shifts[4] = {0.5 * km1, km1, 1.5 * km1, 2.0 * km1};
        bool ok = false;
        for (double s : shifts) ok = ok || std::abs(a - s) <= 1e-12;
        if (!ok) {
            throw std::invalid_argument(
                "mc_table: shift must be 0 or one of "
                "(k-1)/2, k-1, 3(k-1)/2, 2(k-1)");
        }
    }

    const double pa = kPhi + a;
    const double kk = static_cast<double>(k);
    MCValue out;

    if (m == 0) {
        if (a_is_zero) {
            out.case_id = MCCase::m0_a0;
            out.main_term = 0.0;
            out.error_term = 1.0 / (kSqrt5 * kPhi) + kKappa * std::log(kPhi);
        } else {
            out.case_id = MCCase::m0_a_nonzero;
            out.main_term = kKappa * std::log(kk);
            out.error_term =
                1.0 / (kSqrt5 * pa) + kKappa * std::log(pa / kk);
        }
        return out;
    }

    const double mm = static_cast<double>(m);
    const double tail = a_is_zero
                            ? 0.5 + 0.5 / (kSqrt5 * kPhi)
                            : 0.5 / (1.0 + a) + 0.5 / (kSqrt5 * pa);

    if (std::abs(t) >= 1.0) {
        const double mt = mm * std::abs(t);
        if (a_is_zero) {
            out.case_id = MCCase::t_ge_1_a0;
            out.main_term = kKappa * std::log(std::abs(t));
            const double ratio = kPhi / mt;
            out.error_term = tail + kKappa * std::log(mm) +
                             0.5 * kKappa * std::log1p(ratio * ratio);
        } else {
            out.case_id = MCCase::t_ge_1_a_nonzero;
            out.main_term =
                kKappa * std::log(std::abs(t)) + kKappa * std::log(kk);
            const double ratio = pa / (kk * mt);
            out.error_term =
                tail + kKappa * std::log(mm) +
                0.5 * kKappa * std::log(1.0 / (kk * kk) + ratio * ratio);
        }
    } else {
        if (a_is_zero) {
            out.case_id = MCCase::t_lt_1_a0;
            out.main_term = 0.0;
            out.error_term =
                -kKappa * kPhi / (2.0 * kPhi * kPhi + 2.0 * mm * mm) + tail +
                0.5 * kKappa * std::log(kPhi * kPhi + mm * mm);
        } else {
            out.case_id = MCCase::t_lt_1_a_nonzero;
            out.main_term = kKappa * std::log(kk);
            const double two_pa = 2.0 * pa;
            out.error_term =
                -kKappa * two_pa / (two_pa * two_pa + 4.0 * mm * mm) + tail +
                0.5 * kKappa * std::log((pa * pa + mm * mm) / (kk * kk));
        }
    }
    return out;
}

}  // namespace zfr
