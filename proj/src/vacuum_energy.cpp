#include "dielfet/vacuum_energy.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "dielfet/dispersion.hpp"
#include "dielfet/errors.hpp"
#include "dielfet/quadrature.hpp"
#include "dielfet/units.hpp"

namespace dielfet::vacuum {

namespace {

double surface_scale(double force_pa, double gap_m, double M_ev) {
    return std::fabs(force_pa) * units::hbar_c_ev_m / (gap_m * M_ev);
}

// Dimensionless regulated mode sum at cutoff ratio u = delta/L:
//   S(u) = sum_{m>=1} g(m*pi) + g(0)/2 - 3/(pi^2 u^4),
//   g(mu) = exp(-u*mu) ((u*mu)^2 + 2 u*mu + 2) / (2 pi u^3),
// where g is the transverse integral int d^2k/(2pi)^2 k exp(-delta k) above
// threshold mu, in units of 1/L^3. The half-weight m = 0 term carries the
// single polarization of that mode; the subtracted integral is the same
// spectrum without plates. S(u) -> -pi^2/720 as u -> 0, with only even
// powers of u in the remainder. Accumulated in long double: the sum and the
// continuum agree to ~12 digits before cancelling.
long double regulated_sum(double u) {
    const long double ul = u;
    const long double t = ul * static_cast<long double>(M_PI);
    const long double prefactor =
        1.0L / (2.0L * static_cast<long double>(M_PI) * ul * ul * ul);

    const long long m_max = static_cast<long long>(std::ceil(60.0 / static_cast<double>(t)));
    long double sum = 0.0L;
    for (long long m = m_max; m >= 1; --m) { // small terms first
        const long double tm = t * static_cast<long double>(m);
        sum += std::exp(-tm) * (tm * tm + 2.0L * tm + 2.0L);
    }
    sum += 1.0L; // half of g(0)*2*pi*u^3 = 2
    sum *= prefactor;
    sum -= 3.0L / (static_cast<long double>(M_PI) * static_cast<long double>(M_PI) * ul * ul * ul * ul);
    return sum;
}

// Least-squares polynomial fit in x = (u/u_max)^2, returning the value at
// u = 0. Normal equations in long double; the system is tiny (degree <= 5).
double extrapolate_to_zero(const std::vector<double>& us,
                           const std::vector<long double>& values, int degree) {
    const int n = static_cast<int>(us.size());
    const int p = degree + 1;
    const long double x_max = static_cast<long double>(us[0]) * us[0];

    std::vector<std::vector<long double>> ata(p, std::vector<long double>(p, 0.0L));
    std::vector<long double> aty(p, 0.0L);
    for (int i = 0; i < n; ++i) {
        long double xi = static_cast<long double>(us[i]) * us[i] / x_max;
        std::vector<long double> row(p);
        row[0] = 1.0L;
        for (int j = 1; j < p; ++j) row[j] = row[j - 1] * xi;
        for (int j = 0; j < p; ++j) {
            aty[j] += row[j] * values[i];
            for (int l = 0; l < p; ++l) ata[j][l] += row[j] * row[l];
        }
    }

    // Gaussian elimination with partial pivoting.
    for (int col = 0; col < p; ++col) {
        int pivot = col;
        for (int r = col + 1; r < p; ++r)
            if (std::fabs(static_cast<double>(ata[r][col])) >
                std::fabs(static_cast<double>(ata[pivot][col])))
                pivot = r;
        std::swap(ata[col], ata[pivot]);
        std::swap(aty[col], aty[pivot]);
        if (ata[col][col] == 0.0L)
            throw numerical_error("singular extrapolation fit");
        for (int r = col + 1; r < p; ++r) {
            const long double factor = ata[r][col] / ata[col][col];
            for (int c2 = col; c2 < p; ++c2) ata[r][c2] -= factor * ata[col][c2];
            aty[r] -= factor * aty[col];
        }
    }
    std::vector<long double> coef(p);
    for (int r = p - 1; r >= 0; --r) {
        long double s = aty[r];
        for (int c2 = r + 1; c2 < p; ++c2) s -= ata[r][c2] * coef[c2];
        coef[r] = s / ata[r][r];
    }
    return static_cast<double>(coef[0]); // value at u = 0
}

} // namespace

CasimirResult casimir_closed(double gap_m, const Medium& medium) {
    if (!(gap_m > 0.0)) throw validation_error("L <= 0");
    const double pi2 = M_PI * M_PI;
    const double l3 = gap_m * gap_m * gap_m;

    CasimirResult r;
    r.method = "closed";
    r.energy_per_area_j_per_m2 = -pi2 * units::hbar_c_j_m / (720.0 * medium.n * l3);
    r.force_per_area_pa = -pi2 * units::hbar_c_j_m / (240.0 * medium.n * l3 * gap_m);
    r.surface_scale_estimate_pa = surface_scale(r.force_per_area_pa, gap_m, medium.M);
    r.regulator_info = "none (closed form)";
    r.converged = true;
    return r;
}

CasimirResult casimir_numeric(double gap_m, const Medium& medium,
                              const CasimirRegulator& regulator) {
    if (!(gap_m > 0.0)) throw validation_error("L <= 0");
    if (!(regulator.cutoff_start > 0.0) || regulator.cutoff_steps <= 0 ||
        regulator.poly_degree <= 0)
        throw validation_error("regulator parameters must be positive");

    std::vector<double> us(regulator.cutoff_steps);
    std::vector<long double> values(regulator.cutoff_steps);
    for (int j = 0; j < regulator.cutoff_steps; ++j) {
        us[j] = regulator.cutoff_start / std::pow(2.0, j);
        values[j] = regulated_sum(us[j]);
    }

    // Extrapolate over growing rung prefixes; the fit needs at least one
    // more point than coefficients, and convergence needs two candidates.
    std::vector<double> candidates;
    for (int j = regulator.poly_degree + 1; j < regulator.cutoff_steps; ++j) {
        std::vector<double> u_sub(us.begin(), us.begin() + j + 1);
        std::vector<long double> v_sub(values.begin(), values.begin() + j + 1);
        candidates.push_back(extrapolate_to_zero(u_sub, v_sub, regulator.poly_degree));
    }
    if (candidates.size() < 2) {
        std::ostringstream msg;
        msg << "regulator ladder too short to verify convergence: cutoff_steps="
            << regulator.cutoff_steps << " with poly_degree=" << regulator.poly_degree
            << " (need cutoff_steps >= poly_degree + 3)";
        throw numerical_error(msg.str());
    }
    const double last = candidates.back();
    const double prev = candidates[candidates.size() - 2];
    if (std::fabs(last - prev) > 1e-4 * std::fabs(last)) {
        std::ostringstream msg;
        msg << "casimir mode-sum extrapolations did not settle: ";
        for (double c : candidates) msg << c << " ";
        throw numerical_error(msg.str());
    }

    const double l3 = gap_m * gap_m * gap_m;
    CasimirResult r;
    r.method = "numeric";
    r.energy_per_area_j_per_m2 = units::hbar_c_j_m / medium.n * last / l3;
    r.force_per_area_pa = 3.0 * r.energy_per_area_j_per_m2 / gap_m; // E/A ~ 1/L^3
    r.surface_scale_estimate_pa = surface_scale(r.force_per_area_pa, gap_m, medium.M);
    r.converged = true;
    {
        std::ostringstream info;
        info << "exponential wavenumber cutoff exp(-delta k); k_z = m*pi/L modes, two "
                "polarizations for m >= 1 and one for m = 0; continuum subtraction; "
                "ladder delta/L = "
             << us.front() << "..." << us.back() << " (" << regulator.cutoff_steps
             << " rungs), degree-" << regulator.poly_degree
             << " polynomial extrapolation in delta^2";
        r.regulator_info = info.str();
    }
    return r;
}

double stefan_boltzmann_density(double t_kelvin, const Medium& medium) {
    if (!(t_kelvin > 0.0)) throw validation_error("T <= 0");
    const double kt = units::temperature_to_ev(t_kelvin);
    const double n3 = medium.n * medium.n * medium.n;
    const double u_nat = n3 * M_PI * M_PI / 15.0 * kt * kt * kt * kt;
    return units::energy_density_natural_to_si(u_nat);
}

ThermalResult blackbody_density(double t_kelvin, const Medium& medium,
                                bool dispersive, int spectrum_samples) {
    if (!(t_kelvin > 0.0)) throw validation_error("T <= 0");
    const double kt = units::temperature_to_ev(t_kelvin);
    const double n3 = medium.n * medium.n * medium.n;
    const double omega_cap = medium.M / 2.0;

    // Mode density rho(omega) = n(omega)^2 * n_g(omega): phase index squared
    // times group index, the isotropic density of states for omega(k).
    const auto rho_exact = [&](double omega) {
        const auto p = dispersion::point_from_omega(omega, medium);
        return p.phase_index * p.phase_index * p.group_index;
    };
    const double rho_cap = dispersive ? rho_exact(omega_cap) : n3;
    const auto rho = [&](double omega) {
        if (!dispersive) return n3;
        return omega <= omega_cap ? rho_exact(omega) : rho_cap;
    };

    const auto integrand = [&](double x) { // x = omega/kT
        return rho(x * kt) * x * x * x / std::expm1(x);
    };

    // Split at the cap when it sits inside the thermal support so the kink in
    // the frozen integrand never crosses a quadrature segment.
    const double x_max = 50.0;
    const double x_cap = omega_cap / kt;
    double integral = 0.0;
    if (dispersive && x_cap < x_max) {
        integral = quadrature::integrate(integrand, 0.0, x_cap, 1e-10).value +
                   quadrature::integrate(integrand, x_cap, x_max, 1e-10).value;
    } else {
        integral = quadrature::integrate(integrand, 0.0, x_max, 1e-10).value;
    }
    const double u_nat = kt * kt * kt * kt / (M_PI * M_PI) * integral;

    ThermalResult r;
    r.dispersive = dispersive;
    r.total_energy_density_j_per_m3 = units::energy_density_natural_to_si(u_nat);
    r.correction_factor =
        r.total_energy_density_j_per_m3 / stefan_boltzmann_density(t_kelvin, medium);

    // Bound on the relative weight of the frozen-rho region: first Boltzmann
    // term of the Bose tail, int_x^inf s^3 e^{-s}/(1-e^{-s}) ds bounded by
    // e^{-x}(x^3+3x^2+6x+6)/(1-e^{-x}).
    {
        const double x = x_cap;
        double tail = 0.0;
        if (x < 700.0)
            tail = rho_cap * std::exp(-x) * (x * x * x + 3.0 * x * x + 6.0 * x + 6.0) /
                   (1.0 - std::exp(-x));
        r.truncation_error_bound = dispersive && integral > 0.0 ? tail / integral : 0.0;
    }

    if (spectrum_samples > 0) {
        r.spectrum.reserve(spectrum_samples);
        for (int i = 1; i <= spectrum_samples; ++i) {
            const double omega = 15.0 * kt * i / spectrum_samples;
            const double u_omega = rho(omega) / (M_PI * M_PI) * omega * omega * omega /
                                   std::expm1(omega / kt);
            r.spectrum.push_back(SpectrumSample{omega, u_omega});
        }
    }
    return r;
}

double dispersive_correction_coefficient(const Medium& medium) {
    const double zeta_ratio = 2.0 * M_PI * M_PI / 21.0; // zeta(6)/zeta(4)
    return -100.0 * medium.d1 * zeta_ratio;
}

} // namespace dielfet::vacuum
