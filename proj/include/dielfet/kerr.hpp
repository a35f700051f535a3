#ifndef DIELFET_KERR_HPP
#define DIELFET_KERR_HPP

#include <utility>

#include "dielfet/medium.hpp"

namespace dielfet::kerr {

/// DC and AC Kerr response of a medium at one wavelength, in natural and SI
/// units. The exact identity lambdaK = 2 n^2 n2 (natural units) ties the two
/// constants together; consistency_residual monitors it against unit drift.
struct KerrReport {
    double n_dc = 0.0;             ///< n(E_ext)
    double n_ac = 0.0;             ///< n(I)
    double lambda_k_natural = 0.0; ///< lambda*K = 2a/(n M^4) [eV^-4]
    double k_si = 0.0;             ///< Kerr constant K [m/V^2]
    double n2_natural = 0.0;       ///< n2 = a/(n^3 M^4) [eV^-4]
    double n2_si = 0.0;            ///< [m^2/W]
    double consistency_residual = 0.0; ///< |lambdaK - 2 n^2 n2| / lambdaK (0 when a = 0)
};

/// DC Kerr index n(E) = n + 2 a E^2/(n M^4), external field in natural units
/// (eV^2).
double dc_kerr_index(double e_ext_natural, const Medium& medium);

/// Same with the external field in V/m.
double dc_kerr_index_si(double e_ext_v_per_m, const Medium& medium);

/// (lambda*K in eV^-4, K in m/V^2) at the given wavelength. K scales as
/// 1/lambda at fixed coupling.
std::pair<double, double> kerr_constant(const Medium& medium, double lambda_m);

/// AC Kerr index n(I) = n + n2*I, beam intensity in natural units (eV^4).
double ac_kerr_index(double intensity_natural, const Medium& medium);

/// Same with the intensity in W/m^2.
double ac_kerr_index_si(double intensity_w_per_m2, const Medium& medium);

/// (n2 in eV^-4, n2 in m^2/W); the nonlinear index n2 = a/(n^3 M^4).
std::pair<double, double> n2_coefficient(const Medium& medium);

/// Full report at one wavelength, one DC field and one beam intensity
/// (both SI).
KerrReport kerr_report(const Medium& medium, double lambda_m,
                       double e_ext_v_per_m, double intensity_w_per_m2);

} // namespace dielfet::kerr

#endif
