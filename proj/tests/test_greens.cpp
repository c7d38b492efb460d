#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "gainscatter/greens.hpp"
#include "gainscatter/params.hpp"

using namespace gainscatter;

namespace {

// Polarization-averaged u.Im{G}.u = tr Im{G} / 3; the near-field tensor is
// traceless, so the average has a clean O((kR)^2) approach to the limit.
double averaged_im(const GreenTensor& g) {
    return (g(0, 0).imag() + g(1, 1).imag() + g(2, 2).imag()) / 3.0;
}

}  // namespace

TEST_CASE("projector structure along z") {
    // R along z: transverse projector diag(1, 1, 0), near-field diag(1, 1, -2)
    const double omega = 2.0;
    const double r = 3.0;
    const GreenTensor g = green_dyadic({0.0, 0.0, r}, omega);
    const double x = omega * r;
    const std::complex<double> phase(std::cos(x), std::sin(x));
    const std::complex<double> pre = -omega * phase / (4.0 * pi);

    const std::complex<double> transverse =
        pre * (std::complex<double>(1.0 / x - 1.0 / (x * x * x), 1.0 / (x * x)));
    const std::complex<double> longitudinal =
        pre * (std::complex<double>(2.0 / (x * x * x), -2.0 / (x * x)));

    CHECK(std::abs(g(0, 0) - transverse) <= 1e-16);
    CHECK(std::abs(g(1, 1) - transverse) <= 1e-16);
    CHECK(std::abs(g(2, 2) - longitudinal) <= 1e-16);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(g(i, j) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("far field is the radiation term") {
    const double omega = 1.0;
    const double r = 1.0e6;  // kR = 1e6
    const GreenTensor g = green_dyadic({0.0, 0.0, r}, omega);
    const double x = omega * r;
    const std::complex<double> phase(std::cos(x), std::sin(x));
    const std::complex<double> leading = -omega * phase / (4.0 * pi * x);
    // transverse projection; corrections are 1/(kR) down
    CHECK(std::abs(g(0, 0) - leading) / std::abs(leading) <= 1.5e-6);
    CHECK(std::abs(g(0, 0) - leading) / std::abs(leading) >= 1.0e-7);
}

TEST_CASE("coincidence limit by Richardson extrapolation") {
    const double omega = 1.7;
    // kR = 1e-1, 1e-2, 1e-3 on an oblique direction
    const Vec3 direction{0.48, -0.6, 0.64};
    double avg[3];
    double x[3] = {1e-1, 1e-2, 1e-3};
    for (int i = 0; i < 3; ++i) {
        const double r = x[i] / omega;
        avg[i] = averaged_im(green_dyadic(
            {direction[0] * r, direction[1] * r, direction[2] * r}, omega));
    }
    const double limit = im_green_coincident(omega);
    CHECK(limit == doctest::Approx(-omega / (6.0 * pi)).epsilon(1e-15));

    // plain values approach the limit at second order
    const double err0 = std::abs(avg[0] - limit);
    const double err1 = std::abs(avg[1] - limit);
    const double err2 = std::abs(avg[2] - limit);
    CHECK(err0 / err1 == doctest::Approx(100.0).epsilon(0.05));
    CHECK(err1 / err2 == doctest::Approx(100.0).epsilon(0.05));

    // eliminating the x^2 term reproduces the analytic limit
    const double extrapolated =
        avg[2] + (avg[2] - avg[1]) * (x[2] * x[2]) / (x[1] * x[1] - x[2] * x[2]);
    CHECK(extrapolated == doctest::Approx(limit).epsilon(1e-8));
}

TEST_CASE("symmetry and reciprocity") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> freq(0.2, 5.0);
    for (int n = 0; n < 100; ++n) {
        Vec3 r{coord(rng), coord(rng), coord(rng)};
        if (r[0] == 0.0 && r[1] == 0.0 && r[2] == 0.0) continue;
        const double omega = freq(rng);
        const GreenTensor g = green_dyadic(r, omega);
        const GreenTensor g_flip = green_dyadic({-r[0], -r[1], -r[2]}, omega);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                CHECK(g(i, j) == g(j, i));
                CHECK(g(i, j) == g_flip(i, j));
            }
        }
    }
}

TEST_CASE("coincidence scalar is linear in frequency") {
    const double base = im_green_coincident(0.75);
    CHECK(im_green_coincident(1.5) == 2.0 * base);
    CHECK(base < 0.0);
}

TEST_CASE("decay rate") {
    AtomParams atom;

    SUBCASE("reproduces gamma0 at omega0") {
        CHECK(decay_rate(atom.omega0, atom.mu_parallel_sq()) ==
              doctest::Approx(atom.gamma0).epsilon(1e-14));
    }

    SUBCASE("cubic frequency scaling") {
        const double rate = decay_rate(2.0, 0.3);
        CHECK(decay_rate(4.0, 0.3) == 8.0 * rate);
    }

    SUBCASE("closes the upper-state linewidth relation") {
        // dipole chosen so the emission at omega_u - omega0 gives gamma_u
        const double omega_ue = atom.omega_u - atom.omega0;
        const double dipole_sq = 3.0 * pi * atom.gamma_u / (omega_ue * omega_ue * omega_ue);
        CHECK(decay_rate(omega_ue, dipole_sq) ==
              doctest::Approx(atom.gamma_u).epsilon(1e-14));
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(green_dyadic({0.0, 0.0, 0.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(green_dyadic({1.0, 0.0, 0.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(im_green_coincident(0.0), std::invalid_argument);
    CHECK_THROWS_AS(decay_rate(1.0, 0.0), std::invalid_argument);
}
