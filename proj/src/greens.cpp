#include "gainscatter/greens.hpp"

#include <cmath>
#include <stdexcept>

#include "gainscatter/params.hpp"

namespace gainscatter {

GreenTensor green_dyadic(const Vec3& displacement, double omega) {
    const double r2 = displacement[0] * displacement[0] +
                      displacement[1] * displacement[1] +
                      displacement[2] * displacement[2];
    const double r = std::sqrt(r2);
    if (!(r > 0.0))
        throw std::invalid_argument(
            "green_dyadic needs |R| > 0; the R -> 0+ imaginary part is "
            "im_green_coincident");
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");

    const double k = omega;  // c = 1
    const double x = k * r;
    const std::complex<double> phase(std::cos(x), std::sin(x));
    const std::complex<double> prefactor = -k * phase / (4.0 * pi);

    GreenTensor g;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double rr = displacement[i] * displacement[j] / r2;
            const double delta = (i == j) ? 1.0 : 0.0;
            const double p = delta - rr;        // transverse projector
            const double q = delta - 3.0 * rr;  // near-field tensor
            const std::complex<double> terms(p / x - q / (x * x * x), q / (x * x));
            g(i, j) = prefactor * terms;
        }
    }
    return g;
}

double im_green_coincident(double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    return -omega / (6.0 * pi);
}

double decay_rate(double omega, double dipole_sq) {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    if (!(dipole_sq > 0.0)) throw std::invalid_argument("dipole_sq must be positive");
    return dipole_sq * omega * omega * omega / (3.0 * pi);
}

}  // namespace gainscatter
