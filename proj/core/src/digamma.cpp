#include "zfr/digamma.hpp"

#include <cmath>
#include <stdexcept>

#include "zfr/constants.hpp"

namespace zfr {

namespace {

// B_{2k}/(2k) for k = 1..8.
constexpr double kBernoulliOver2k[8] = {
    1.0 / 12.0,      -1.0 / 120.0,    1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,     -691.0 / 32760.0, 1.0 / 12.0,  -3617.0 / 8160.0,
};

constexpr double kShiftThreshold = 16.0;

}  // namespace

Complex digamma_ref(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::domain_error("digamma_ref: non-finite argument");
    }
    if (!(z.real() > 0.0)) {
        throw std::domain_error("digamma_ref: requires Re(z) > 0");
    }

    Complex shift = 0.0;
    while (z.real() < kShiftThreshold) {
        shift -= 1.0 / z;
        z += 1.0;
    }

    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex power = inv2;
    for (double coeff : kBernoulliOver2k) {
        series += coeff * power;
        power *= inv2;
    }
    return shift + std::log(z) - 0.5 * inv - series;
}

double digamma_ref(double x) {
    return digamma_ref(Complex(x, 0.0)).real();
}

double digamma_linear_upper(double x) {
    const double value_at_tangent = 2.0 - kEulerGamma - 2.0 * std::log(2.0);
    const double slope = kPi * kPi / 4.0 - 2.0;
    return value_at_tangent + slope * (2.0 * x - 3.0);
}

}  // namespace zfr
