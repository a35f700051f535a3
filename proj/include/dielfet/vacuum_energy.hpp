#ifndef DIELFET_VACUUM_ENERGY_HPP
#define DIELFET_VACUUM_ENERGY_HPP

#include <string>
#include <vector>

#include "dielfet/medium.hpp"

namespace dielfet::vacuum {

struct CasimirResult {
    double energy_per_area_j_per_m2 = 0.0;
    double force_per_area_pa = 0.0; ///< negative: attractive
    std::string method;             ///< "closed" | "numeric"
    std::string regulator_info;
    double surface_scale_estimate_pa = 0.0; ///< |F| * hbar*c/(L*M), magnitude of a
                                            ///< possible surface-term correction
    bool converged = true;
};

/// Parallel-plate Casimir force in a dielectric, closed form:
///   F/A = -pi^2 hbar c / (240 n L^4),  E/A = -pi^2 hbar c / (720 n L^3).
CasimirResult casimir_closed(double gap_m, const Medium& medium);

/// Regulator for the mode-sum route: exponential wavenumber cutoff
/// exp(-delta*k) on a ladder delta_j = cutoff_start*L/2^j, continuum
/// subtraction, and a degree-poly_degree polynomial extrapolation in delta^2
/// to delta -> 0.
struct CasimirRegulator {
    double cutoff_start = 0.1; ///< coarsest delta as a fraction of L
    int cutoff_steps = 6;      ///< ladder rungs (halving)
    int poly_degree = 3;       ///< extrapolation fit degree
};

/// Independent mode-sum evaluation of the Casimir energy: zero-point sum over
/// the k_z = m*pi/L spectrum (two polarizations for m >= 1, one for m = 0)
/// with the transverse integral done in closed form under the cutoff. The
/// finite part is extracted by the regulator ladder; convergence requires the
/// last two ladder extrapolations to agree to 1e-4 relative.
CasimirResult casimir_numeric(double gap_m, const Medium& medium,
                              const CasimirRegulator& regulator = {});

struct SpectrumSample {
    double omega_ev = 0.0;
    double u_natural = 0.0; ///< spectral energy density [eV^3]
};

struct ThermalResult {
    double total_energy_density_j_per_m3 = 0.0;
    std::vector<SpectrumSample> spectrum;
    bool dispersive = false;
    double correction_factor = 1.0;      ///< total / (n^3 Stefan-Boltzmann)
    double truncation_error_bound = 0.0; ///< relative bound from the omega = M/2 cap
};

/// Closed-form n^3 Stefan-Boltzmann energy density [J/m^3].
double stefan_boltzmann_density(double t_kelvin, const Medium& medium);

/// Blackbody energy density by adaptive quadrature of
///   u(omega) = rho(omega)/pi^2 * omega^3/(e^{omega/kT} - 1),
/// where rho = n^3 without dispersion and rho = n(omega)^2 n_g(omega) with
/// it (frozen at its omega = M/2 value beyond the validity cap). Relative
/// quadrature tolerance 1e-10.
ThermalResult blackbody_density(double t_kelvin, const Medium& medium,
                                bool dispersive, int spectrum_samples = 0);

/// First-order coefficient c of the dispersive enhancement,
/// correction_factor = 1 + c*(kB*T/M)^2 + O((kB*T/M)^4):
/// c = -100 * d1 * zeta(6)/zeta(4) with zeta(6)/zeta(4) = 2 pi^2/21.
double dispersive_correction_coefficient(const Medium& medium);

} // namespace dielfet::vacuum

#endif
