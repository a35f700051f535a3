#include "dielfet/kerr.hpp"

#include <cmath>

#include "dielfet/errors.hpp"
#include "dielfet/units.hpp"

namespace dielfet::kerr {

namespace {

double m4(const Medium& m) {
    const double M2 = m.M * m.M;
    return M2 * M2;
}

// 1 (V/m)^2 expressed as eV^4 of field energy density; converts lambda*K
// from eV^-4 to m^2/V^2.
double efield_sq_si_to_natural() {
    return units::constants.vacuum_permittivity_f_per_m / units::ev4_in_joule_per_m3;
}

} // namespace

double dc_kerr_index(double e_ext_natural, const Medium& medium) {
    if (!std::isfinite(e_ext_natural)) throw validation_error("non-finite field");
    return medium.n +
           2.0 * medium.a * e_ext_natural * e_ext_natural / (medium.n * m4(medium));
}

double dc_kerr_index_si(double e_ext_v_per_m, const Medium& medium) {
    return dc_kerr_index(units::efield_si_to_natural(e_ext_v_per_m), medium);
}

std::pair<double, double> kerr_constant(const Medium& medium, double lambda_m) {
    if (!(lambda_m > 0.0)) throw validation_error("lambda <= 0");
    const double lambda_k_nat = 2.0 * medium.a / (medium.n * m4(medium));
    const double lambda_k_si = lambda_k_nat * efield_sq_si_to_natural(); // m^2/V^2
    return {lambda_k_nat, lambda_k_si / lambda_m};
}

double ac_kerr_index(double intensity_natural, const Medium& medium) {
    if (intensity_natural < 0.0) throw validation_error("negative intensity");
    const double n2 = medium.a / (medium.n * medium.n * medium.n * m4(medium));
    return medium.n + n2 * intensity_natural;
}

double ac_kerr_index_si(double intensity_w_per_m2, const Medium& medium) {
    return ac_kerr_index(units::intensity_si_to_natural(intensity_w_per_m2), medium);
}

std::pair<double, double> n2_coefficient(const Medium& medium) {
    const double n2_nat = medium.a / (medium.n * medium.n * medium.n * m4(medium));
    // n(I) = n + n2_nat * I_nat = n + n2_si * I_si
    const double n2_si = n2_nat * units::intensity_si_to_natural(1.0);
    return {n2_nat, n2_si};
}

KerrReport kerr_report(const Medium& medium, double lambda_m,
                       double e_ext_v_per_m, double intensity_w_per_m2) {
    KerrReport r;
    r.n_dc = dc_kerr_index_si(e_ext_v_per_m, medium);
    r.n_ac = ac_kerr_index_si(intensity_w_per_m2, medium);
    std::tie(r.lambda_k_natural, r.k_si) = kerr_constant(medium, lambda_m);
    std::tie(r.n2_natural, r.n2_si) = n2_coefficient(medium);
    r.consistency_residual =
        (medium.a == 0.0)
            ? 0.0
            : std::fabs(r.lambda_k_natural - 2.0 * medium.n * medium.n * r.n2_natural) /
                  r.lambda_k_natural;
    return r;
}

} // namespace dielfet::kerr
