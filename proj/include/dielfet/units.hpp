#ifndef DIELFET_UNITS_HPP
#define DIELFET_UNITS_HPP

/// Physical constants and the bridge between SI quantities and the
/// Heaviside-Lorentz natural units (hbar = c = eps0 = 1, energies in eV)
/// in which every formula of the library is evaluated.
///
/// Conversion table (all factors derived from the constants below, never
/// hard-coded):
///
///   quantity        SI unit   natural unit   SI -> natural
///   --------------  --------  -------------  -------------------------------
///   length          m         eV^-1          L / hbar_c_ev_m
///   photon energy   m (wl.)   eV             2*pi*hbar_c_ev_m / lambda
///   temperature     K         eV             kB*T / e
///   energy density  J/m^3     eV^4           u / ev4_in_joule_per_m3
///   E field         V/m       eV^2           E * sqrt(eps0/ev4_in_joule_per_m3)
///   intensity       W/m^2     eV^4           (I/c) / ev4_in_joule_per_m3
///
/// where ev4_in_joule_per_m3 = e / (hbar*c/eV)^3 = 20.852... J/m^3. The E
/// field map is fixed by requiring E_nat^2 (an energy density in eV^4) to
/// equal eps0*E_SI^2; intensities map through u = I/c.

#include <cmath>

#include "dielfet/errors.hpp"

namespace dielfet::units {

/// Fixed constants, CODATA 2018. e, c, kB are exact by SI definition.
struct Constants {
    double hbar_c_ev_nm = 197.3269804;                ///< hbar*c [eV nm]
    double electron_volt_j = 1.602176634e-19;         ///< 1 eV [J], exact
    double vacuum_permittivity_f_per_m = 8.8541878128e-12; ///< eps0 [F/m]
    double speed_of_light_m_per_s = 299792458.0;      ///< c [m/s], exact
    double boltzmann_j_per_k = 1.380649e-23;          ///< kB [J/K], exact
};

inline constexpr Constants constants{};

inline constexpr double hbar_c_ev_m = constants.hbar_c_ev_nm * 1e-9;

/// 1 eV^4 of energy density expressed in J/m^3 (about 20.852).
inline constexpr double ev4_in_joule_per_m3 =
    constants.electron_volt_j / (hbar_c_ev_m * hbar_c_ev_m * hbar_c_ev_m);

/// hbar*c in J m, used by the Casimir closed form.
inline constexpr double hbar_c_j_m = hbar_c_ev_m * constants.electron_volt_j;

// --- photon kinematics ------------------------------------------------------

/// Photon energy hbar*omega = 2*pi*hbar*c/lambda in eV.
inline double wavelength_to_photon_energy(double lambda_m) {
    if (!(lambda_m > 0.0)) throw validation_error("wavelength <= 0");
    return 2.0 * M_PI * hbar_c_ev_m / lambda_m;
}

inline double photon_energy_to_wavelength(double energy_ev) {
    if (!(energy_ev > 0.0)) throw validation_error("photon energy <= 0");
    return 2.0 * M_PI * hbar_c_ev_m / energy_ev;
}

// --- lengths and temperatures ----------------------------------------------

inline double length_si_to_natural(double length_m) { return length_m / hbar_c_ev_m; }
inline double length_natural_to_si(double length_inv_ev) { return length_inv_ev * hbar_c_ev_m; }

/// Thermal energy kB*T in eV.
inline double temperature_to_ev(double t_kelvin) {
    return constants.boltzmann_j_per_k * t_kelvin / constants.electron_volt_j;
}

// --- energy densities, fields, intensities ----------------------------------

inline double energy_density_natural_to_si(double u_ev4) {
    return u_ev4 * ev4_in_joule_per_m3;
}

inline double energy_density_si_to_natural(double u_j_per_m3) {
    return u_j_per_m3 / ev4_in_joule_per_m3;
}

/// E field V/m -> eV^2, sign preserving; E_nat^2 = eps0*E_SI^2 as an energy
/// density in eV^4.
inline double efield_si_to_natural(double e_v_per_m) {
    const double scale =
        std::sqrt(constants.vacuum_permittivity_f_per_m / ev4_in_joule_per_m3);
    return e_v_per_m * scale;
}

inline double efield_natural_to_si(double e_ev2) {
    const double scale =
        std::sqrt(constants.vacuum_permittivity_f_per_m / ev4_in_joule_per_m3);
    return e_ev2 / scale;
}

/// Beam intensity W/m^2 -> energy density eV^4 via u = I/c.
inline double intensity_si_to_natural(double i_w_per_m2) {
    if (i_w_per_m2 < 0.0) throw validation_error("negative intensity");
    return energy_density_si_to_natural(i_w_per_m2 / constants.speed_of_light_m_per_s);
}

inline double intensity_natural_to_si(double i_ev4) {
    return energy_density_natural_to_si(i_ev4) * constants.speed_of_light_m_per_s;
}

} // namespace dielfet::units

#endif
