#pragma once

// Complex log-gamma via the Stirling series, with the argument recursively
// shifted until Re(z) >= 10 so ten Bernoulli terms reach ~1e-15. Valid off
// the nonpositive real axis; everything here stays in the right half plane.

#include <complex>
#include <stdexcept>

namespace zetalab {

// B_{2n} for n = 1..12
inline constexpr double kBernoulli2n[12] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
};

inline std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() <= 0.0 && z.imag() == 0.0)
        throw std::domain_error("log_gamma: nonpositive real argument");

    constexpr double kShiftThreshold = 10.0;
    std::complex<double> shift{0.0, 0.0};
    while (z.real() < kShiftThreshold) {
        shift -= std::log(z);
        z += 1.0;
    }

    const std::complex<double> log_z = std::log(z);
    std::complex<double> result = (z - 0.5) * log_z - z + 0.9189385332046727417803297;  // log(2*pi)/2

    const std::complex<double> inv_z2 = 1.0 / (z * z);
    std::complex<double> zpow = 1.0 / z;
    for (int n = 1; n <= 10; ++n) {
        result += kBernoulli2n[n - 1] / (2.0 * n * (2.0 * n - 1.0)) * zpow;
        zpow *= inv_z2;
    }
    return result + shift;
}

}  // namespace zetalab
