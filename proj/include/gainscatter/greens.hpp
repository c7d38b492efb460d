#pragma once

#include <array>
#include <complex>

namespace gainscatter {

using Vec3 = std::array<double, 3>;

// Free-space electric-field dyadic evaluated at a displacement R.
// Stored with its full prefactor, so the components are those of the
// propagator itself. Symmetric in (i, j) by construction.
struct GreenTensor {
    std::array<std::complex<double>, 9> m{};

    std::complex<double>& operator()(int i, int j) { return m[3 * i + j]; }
    std::complex<double> operator()(int i, int j) const { return m[3 * i + j]; }
};

// Dyadic of a radiating dipole at frequency omega, |R| > 0. The R -> 0+
// imaginary part is handled by im_green_coincident instead.
GreenTensor green_dyadic(const Vec3& displacement, double omega);

// mu_hat . Im{G} . mu_hat in the coincidence limit R -> 0+. Finite and
// isotropic: -k / (6 pi) with k = omega (c = 1). The divergent real part is
// a transition-frequency renormalization and is not represented here.
double im_green_coincident(double omega);

// Free-space spontaneous decay rate dipole_sq * omega^3 / (3 pi).
double decay_rate(double omega, double dipole_sq);

}  // namespace gainscatter
