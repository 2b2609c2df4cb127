#pragma once

// Fixed constants of the Steckin differencing setup.
//
// The two-point evaluation couples s = sigma + it with s1 = sigma1 + it via
//   sigma1 = 1/2 + 1/2 * sqrt(1 + 4*sigma^2),
// and the difference weight is 1/sqrt(5).  Everything downstream is phrased
// in terms of kappa = 1 - 1/sqrt(5) and the golden ratio phi = (1+sqrt(5))/2,
// which is the sup of the admissible sigma range (1, phi).

#include <cmath>
#include <complex>

namespace zfr {

using Complex = std::complex<double>;

inline const double kSqrt5 = std::sqrt(5.0);
inline const double kPhi = (1.0 + kSqrt5) / 2.0;
inline const double kKappa = 1.0 - 1.0 / kSqrt5;

// Euler-Mascheroni constant, rounded to nearest double.
inline constexpr double kEulerGamma = 0.57721566490153286061;

inline constexpr double kPi = 3.14159265358979323846;

struct FixedConstants {
    double kappa = kKappa;
    double phi = kPhi;
};

}  // namespace zfr
