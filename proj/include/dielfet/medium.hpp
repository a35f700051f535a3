#ifndef DIELFET_MEDIUM_HPP
#define DIELFET_MEDIUM_HPP

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "dielfet/vec3.hpp"

namespace dielfet {

/// Warnings accumulated by operations that accept marginal inputs.
using Warnings = std::vector<std::string>;

/// An isotropic dielectric: lowest-order indices (n, eps, mu), the energy
/// scale M of the microscopic physics integrated out, and the three
/// dimensionless couplings of the quadratic/quartic corrections.
///
/// eps is always derived as n^2/mu so that n = sqrt(eps*mu) holds exactly;
/// construct through make_medium.
struct Medium {
    std::string name;
    double n = 1.0;       ///< refractive index, >= 1
    double epsilon = 1.0; ///< permittivity (natural units), = n^2/mu
    double mu = 1.0;      ///< permeability
    double M = 10.0;      ///< cutoff energy scale [eV]
    double d1 = 0.0;      ///< dispersive coupling (negative for normal dispersion)
    double d2 = 0.0;      ///< quartic-gradient coupling
    double a = 0.0;       ///< four-field (Kerr) coupling
};

/// Validates inputs and derives eps = n^2/mu. Out-of-range M, d1 or a only
/// warn: the expected magnitudes (M ~ 5-10 eV, |d1| <~ 1, a ~ 1e-6) are
/// order-of-magnitude estimates, not hard bounds.
Medium make_medium(std::string name, double n, double mu, double M,
                   double d1, double d2, double a, Warnings* warnings = nullptr);

Medium make_medium(double n, double mu, double M, double d1, double d2, double a,
                   Warnings* warnings = nullptr);

/// Quadratic field observables of the lowest-order theory.
struct FieldObservables {
    double energy_density = 0.0; ///< (n^2 E^2 + B^2)/(2 mu)  [eV^4]
    Vec3 poynting;               ///< N = E x H                [eV^4]
    Vec3 momentum_density;       ///< G = D x B = n^2 N        [eV^4]
};

FieldObservables field_observables(Vec3 e_field, Vec3 b_field, const Medium& medium);

/// Four-vector of the material Lorentz group, metric (+,-,-,-) with the
/// in-medium light speed as the invariant speed.
struct MaterialFourVector {
    double time_component = 0.0; ///< n*E [eV]
    Vec3 spatial;                ///< p   [eV]

    double norm_squared() const {
        return time_component * time_component - dielfet::norm_squared(spatial);
    }
};

/// Photon of wave vector k: energy omega = |k|/n, momentum k, so the
/// four-momentum (n*omega, k) is null under the material metric.
MaterialFourVector photon_four_momentum(Vec3 k, const Medium& medium);

/// One row of the materials database: the medium (couplings not yet fitted)
/// plus the measured optical observables used by calibration.
struct MaterialRow {
    Medium medium;
    double cauchy_b_m2 = 0.0;
    std::optional<double> kerr_k_m_per_v2;
    std::optional<double> n2_m2_per_w;
    double lambda_ref_m = 0.0;
};

/// Loads the materials CSV. Schema (exact header, `#` comment lines allowed):
///   name,n,M_eV,cauchy_B_m2,kerr_K_m_per_V2,n2_m2_per_W,lambda_ref_m
/// The two Kerr columns may be empty; everything else is required. Errors
/// name the offending line.
std::vector<MaterialRow> load_materials(const std::string& path);
std::vector<MaterialRow> parse_materials(std::istream& in);

} // namespace dielfet

#endif
