#include "gainscatter/oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "gainscatter/response.hpp"
#include "parallel_for.hpp"

namespace gainscatter {

namespace {

using cplx = std::complex<double>;

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

int even_count(int n) { return n + (n % 2); }

// (exp(z t) - 1) / z, stable through z = 0.
cplx growth(cplx z, double t) {
    if (std::abs(z) * t < 1.0e-6) {
        const cplx w = z * t;
        return t * (1.0 + 0.5 * w + w * w / 6.0);
    }
    return (std::exp(z * t) - 1.0) / z;
}

double simpson(const std::vector<double>& f, double h) {
    const std::size_t n = f.size() - 1;  // even number of intervals
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t i = 1; i < n; i += 2) odd += f[i];
    for (std::size_t i = 2; i < n; i += 2) even += f[i];
    return h / 3.0 * (f.front() + f.back() + 4.0 * odd + 2.0 * even);
}

void check_steady(const DerivedRates& r, const QuadratureSpec& spec) {
    require(spec.t_end > 0.0 && spec.n_time >= 8 && spec.n_freq >= 8,
            "quadrature spec: degenerate grid");
    require(r.big_gamma * spec.t_end >= 50.0 * (1.0 - 1.0e-12),
            "steady condition: Gamma * t_end must be >= 50");
}

// |integral_0^t ds exp((i q - Gamma/2) s)|^2 by composite Simpson on the
// co-rotated integrand (the overall optical phase has unit modulus and is
// dropped, leaving only the detuning-scale phase q).
double probe_kernel_sq(double q, double big_gamma, double t_end, int n_time) {
    const int n = even_count(n_time);
    const double h = t_end / n;
    const auto f = [&](int i) {
        const double s = h * i;
        return std::exp(cplx(-0.5 * big_gamma * s, q * s));
    };
    cplx odd = 0.0;
    cplx even = 0.0;
    for (int i = 1; i < n; i += 2) odd += f(i);
    for (int i = 2; i < n; i += 2) even += f(i);
    const cplx integral = h / 3.0 * (f(0) + f(n) + 4.0 * odd + 2.0 * even);
    return std::norm(integral);
}

void check_time_resolution(const DerivedRates& r, const QuadratureSpec& spec) {
    const double fastest = std::max(std::abs(r.detuning), r.big_gamma);
    require(spec.n_time >= 20.0 * spec.t_end * fastest / (2.0 * pi),
            "n_time too small to resolve the fastest surviving phase");
}

}  // namespace

QuadratureSpec QuadratureSpec::steady(const DerivedRates& rates) {
    QuadratureSpec s;
    s.t_end = 50.0 / rates.big_gamma;
    s.n_time = 4000;
    s.freq_window = 40.0;
    s.n_freq = 20000;
    return s;
}

QuadratureSpec QuadratureSpec::golden_rule(const DerivedRates& rates) {
    QuadratureSpec s;
    s.t_end = 0.004 / rates.gamma;
    s.n_time = 4000;
    s.freq_window = 20.0;
    // the natural line (width gamma) must be resolved across the full
    // oscillation window of half-width ~ freq_window / t_end
    const double half = (std::max(1L, std::lround(s.freq_window / pi - 0.5)) + 0.5) *
                        pi / s.t_end;
    s.n_freq = even_count(static_cast<int>(std::ceil(2.0 * half / (0.1 * rates.gamma))));
    return s;
}

double quad_absorption_w3(const DerivedRates& r, const DriveParams& d,
                          const QuadratureSpec& spec) {
    check_steady(r, spec);
    check_time_resolution(r, spec);
    const double kernel = probe_kernel_sq(r.detuning, r.big_gamma, spec.t_end, spec.n_time);
    return r.omega_factor * d.rabi_probe * d.rabi_probe * r.gamma * kernel /
           (4.0 * r.gamma0);
}

double quad_stimulated_w4(const DerivedRates& r, const DriveParams& d,
                          const QuadratureSpec& spec) {
    check_steady(r, spec);
    check_time_resolution(r, spec);
    const double kernel = probe_kernel_sq(-r.detuning, r.big_gamma, spec.t_end, spec.n_time);
    return -r.omega_factor * d.rabi_probe * d.rabi_probe * r.pump_rate * kernel /
           (4.0 * r.gamma0);
}

ScatteringQuadrature quad_scattering(const DerivedRates& r, const DriveParams& d,
                                     const QuadratureSpec& spec) {
    check_steady(r, spec);
    require(spec.freq_window >= 20.0, "freq_window must be >= 20 line widths");

    const double big_gamma = r.big_gamma;
    const double omega = r.omega_probe;
    const double half = spec.freq_window * big_gamma;
    require(omega - half > 0.0, "frequency window extends below zero frequency");

    const int n = even_count(spec.n_freq);
    require(n >= 16.0 * half * spec.t_end / pi,
            "n_freq too small to resolve the energy-conserving kernel");

    const double h = 2.0 * half / n;
    const double dt = 5.0e-4 / big_gamma;  // centered difference, Gamma dt <= 1e-3
    const double t_lo = spec.t_end - dt;
    const double t_hi = spec.t_end + dt;

    // resolvent of the probe route; constant across emitted frequencies
    const cplx probe_pole(0.5 * big_gamma, -r.detuning);
    const double probe_pole_sq = std::norm(probe_pole);

    std::vector<double> g_lo(n + 1), g_hi(n + 1), e_lo(n + 1), e_hi(n + 1);
    detail::parallel_for(static_cast<std::size_t>(n) + 1, [&](std::size_t j) {
        const double omega_em = (j == static_cast<std::size_t>(n))
                                    ? omega + half
                                    : omega - half + h * static_cast<double>(j);
        const double dp = omega_em - omega;
        const double ratio = omega_em / r.omega0;
        const double density = ratio * ratio * ratio * ratio;  // omega'^3 times photon energy
        // emission-line resolvent of the excited route
        const cplx line_pole(0.5 * big_gamma, omega_em - r.omega0);
        const double line_pole_sq = std::norm(line_pole);
        const cplx z(0.0, dp);

        const auto fill = [&](double t, double& ground, double& excited) {
            const cplx free_part = growth(z, t);
            const double t_ground = std::norm(free_part - growth(z - probe_pole, t));
            const double t_excited = std::norm(free_part - growth(z - line_pole, t));
            ground = density * t_ground / probe_pole_sq;
            excited = density * t_excited / line_pole_sq;
        };
        fill(t_lo, g_lo[j], e_lo[j]);
        fill(t_hi, g_hi[j], e_hi[j]);
    });

    const double probe_sq = d.rabi_probe * d.rabi_probe;
    const double scale = probe_sq / (8.0 * pi);
    const double w_ground = (r.gamma / big_gamma) * scale *
                            (simpson(g_hi, h) - simpson(g_lo, h)) / (2.0 * dt);
    const double w_excited = (r.pump_rate / big_gamma) * scale *
                             (simpson(e_hi, h) - simpson(e_lo, h)) / (2.0 * dt);

    ScatteringQuadrature out;
    out.w_ground = w_ground;
    out.w_excited = w_excited;
    out.total = w_ground + w_excited;
    return out;
}

double quad_gamma0(const DerivedRates& r, const QuadratureSpec& spec,
                   double dipole_sq_scale) {
    require(spec.t_end > 0.0 && spec.n_freq >= 8, "quadrature spec: degenerate grid");
    require(r.gamma * spec.t_end <= 0.01 * (1.0 + 1.0e-12),
            "decay-rate window: gamma * t_end must be <= 0.01");
    require(r.omega0 >= 1.0e3 * r.gamma, "omega0 must dominate the decay rate");

    const double t = spec.t_end;
    // Window snapped so that cos(half * t) = 0; the leading truncation terms
    // of the oscillatory tail are proportional to that cosine.
    const long lobes = std::max(1L, std::lround(spec.freq_window / pi - 0.5));
    const double half = (static_cast<double>(lobes) + 0.5) * pi / t;
    require(half < r.omega0, "frequency window extends below zero frequency");

    const int n = even_count(spec.n_freq);
    const double h = 2.0 * half / n;
    require(h <= r.gamma / 8.0, "n_freq too small to resolve the natural line");

    const double g = r.gamma;
    const double decay_half = std::exp(-0.5 * g * t);
    const double decay_full = std::exp(-g * t);

    std::vector<double> f(n + 1);
    detail::parallel_for(static_cast<std::size_t>(n) + 1, [&](std::size_t j) {
        const double delta = -half + h * static_cast<double>(j);
        const double lor = delta * delta + 0.25 * g * g;
        const double rate =
            (decay_half * (g * std::cos(delta * t) + 2.0 * delta * std::sin(delta * t)) -
             g * decay_full) /
            lor;
        const double ratio = (r.omega0 + delta) / r.omega0;
        f[j] = ratio * ratio * ratio * rate;
    });

    return dipole_sq_scale * r.gamma0 / (2.0 * pi) * simpson(f, h);
}

double emission_line_density(const DerivedRates& r, double detuning_prime,
                             const QuadratureSpec& spec) {
    const double big_gamma = r.big_gamma;
    const double lor = detuning_prime * detuning_prime + 0.25 * big_gamma * big_gamma;
    const cplx damp = std::exp(cplx(-0.5 * big_gamma * spec.t_end,
                                    -detuning_prime * spec.t_end));
    const double kernel = std::norm(1.0 - damp) / lor;
    const double ratio = (r.omega0 + detuning_prime) / r.omega0;
    return r.pump_rate / (2.0 * pi) * ratio * ratio * ratio * ratio * kernel;
}

double quad_spontaneous_w5(const DerivedRates& r, const QuadratureSpec& spec) {
    check_steady(r, spec);
    require(spec.freq_window >= 20.0, "freq_window must be >= 20 line widths");
    require(r.omega0 >= 100.0 * r.big_gamma, "omega0 must dominate the line width");
    const double half = spec.freq_window * r.big_gamma;
    require(r.omega0 - half > 0.0, "frequency window extends below zero frequency");

    const int n = even_count(spec.n_freq);
    const double h = 2.0 * half / n;
    std::vector<double> f(n + 1);
    detail::parallel_for(static_cast<std::size_t>(n) + 1, [&](std::size_t j) {
        const double delta = -half + h * static_cast<double>(j);
        f[j] = emission_line_density(r, delta, spec);
    });
    return simpson(f, h);
}

std::vector<OracleResult> run_oracle_suite(const AtomParams& atom,
                                           const DriveParams& drive,
                                           GammaOmegaMode mode) {
    const auto rates_at = [&](double detuning) {
        DriveParams d = drive;
        d.detuning = detuning;
        return derive_rates(atom, d, mode);
    };
    const DerivedRates base = rates_at(drive.detuning);
    const double big_gamma = base.big_gamma;

    std::vector<OracleResult> report;
    const auto record = [&report](std::string target, double closed, double quad,
                                  double tolerance) {
        OracleResult res;
        res.target = std::move(target);
        res.closed_form = closed;
        res.quadrature = quad;
        res.rel_error = closed == 0.0 ? std::abs(quad) : std::abs(quad / closed - 1.0);
        res.tolerance = tolerance;
        res.pass = res.rel_error <= tolerance;
        report.push_back(res);
    };

    for (double detuning : {0.0, big_gamma}) {
        DriveParams d = drive;
        d.detuning = detuning;
        const DerivedRates r = rates_at(detuning);
        const QuadratureSpec spec = QuadratureSpec::steady(r);
        const double lor = lorentzian_denominator(r.detuning, r.big_gamma);
        const double w3_closed = r.omega_factor * d.rabi_probe * d.rabi_probe *
                                 r.gamma / (4.0 * lor * r.gamma0);
        const double w4_closed = -r.omega_factor * d.rabi_probe * d.rabi_probe *
                                 r.pump_rate / (4.0 * lor * r.gamma0);
        const std::string suffix = detuning == 0.0 ? "@delta=0" : "@delta=Gamma";
        record("absorption_w3" + suffix, w3_closed, quad_absorption_w3(r, d, spec), 1.0e-3);
        record("stimulated_w4" + suffix, w4_closed, quad_stimulated_w4(r, d, spec), 1.0e-3);
    }

    int index = 0;
    for (double detuning : {0.0, 0.5 * big_gamma, big_gamma}) {
        DriveParams d = drive;
        d.detuning = detuning;
        const DerivedRates r = rates_at(detuning);
        const QuadratureSpec spec = QuadratureSpec::steady(r);
        static const char* names[] = {"scattering@delta=0", "scattering@delta=Gamma/2",
                                      "scattering@delta=Gamma"};
        record(names[index++], scattered_power(r, d), quad_scattering(r, d, spec).total,
               1.0e-2);
    }

    {
        const QuadratureSpec spec = QuadratureSpec::golden_rule(base);
        record("decay_rate_gamma0", base.gamma0, quad_gamma0(base, spec), 1.0e-2);
    }
    {
        const DerivedRates r = rates_at(0.0);
        const QuadratureSpec spec = QuadratureSpec::steady(r);
        const double closed = r.pump_rate / r.big_gamma;
        record("spontaneous_w5", closed, quad_spontaneous_w5(r, spec), 1.0e-2);
    }
    return report;
}

}  // namespace gainscatter
