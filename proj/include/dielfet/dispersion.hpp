#ifndef DIELFET_DISPERSION_HPP
#define DIELFET_DISPERSION_HPP

#include "dielfet/medium.hpp"

namespace dielfet::dispersion {

/// A point on the dispersion curve with both indices attached.
struct DispersionPoint {
    double omega = 0.0;       ///< angular frequency [eV]
    double k = 0.0;           ///< wave number [eV]
    double phase_index = 1.0; ///< k/omega
    double group_index = 1.0; ///< dk/domega
};

/// Empirical dispersion law n(lambda) = A + B/lambda^2 + C/lambda^4.
struct CauchyCoefficients {
    double A = 1.0;    ///< dimensionless, = n of the generating medium
    double B_m2 = 0.0; ///< [m^2], positive for normal dispersion (d1 < 0)
    double C_m4 = 0.0; ///< [m^4], from the omega^4 term of the exact expansion
};

/// F(omega, k) = n^2 w^2 - k^2 - (2 d1/M^2) w^2 k^2 + (2 d2/M^4) w^2 k^4,
/// normalized by n^2 w^2 + k^2. Zero on shell.
double dispersion_residual(double omega, double k, const Medium& medium);

/// Dielectric operator symbol n^2 - 2 d1 k^2/M^2 + 2 d2 k^4/M^4; the squared
/// phase index of the mode with wave number k.
double symbol(double k, const Medium& medium);

/// Exact root omega(k) = k/sqrt(symbol(k)) with the group index from implicit
/// differentiation of F. Throws validity_error when the symbol is not
/// positive (wave number at or beyond the theory's reach, k ~ M).
DispersionPoint solve_omega(double k, const Medium& medium);

/// Inverse dispersion: the propagating root k(omega) of F(omega, k) = 0,
/// found by bracketed safeguarded Newton seeded at k = n*omega (relative
/// tolerance 1e-14, at most 100 iterations). A warning is attached above the
/// validity bound omega = M/2.
double solve_wavenumber(double omega, const Medium& medium, Warnings* warnings = nullptr);

/// Exact dispersion point at given frequency (k from solve_wavenumber).
DispersionPoint point_from_omega(double omega, const Medium& medium,
                                 Warnings* warnings = nullptr);

enum class IndexOrder { exact, first_order };

/// Phase index n(omega). first_order evaluates n*(1 - d1*omega^2/M^2); exact
/// solves F(omega, k) = 0 for k and returns k/omega.
double phase_index(double omega, const Medium& medium, IndexOrder order,
                   Warnings* warnings = nullptr);

/// Cauchy coefficients of the low-frequency expansion
///   n(lambda) = n - n*d1*x + n*(3/2*d1^2 + n^2*d2)*x^2,  x = (2*pi*hbar*c)^2/(lambda^2*M^2).
CauchyCoefficients cauchy_from_eft(const Medium& medium);

struct EftCouplings {
    double n = 1.0;
    double d1 = 0.0;
};

/// Exact algebraic inverse of cauchy_from_eft on (A, B): n = A,
/// d1 = -B*M^2/(A*(2*pi*hbar*c)^2).
EftCouplings eft_from_cauchy(double A, double B_m2, double M_ev);

} // namespace dielfet::dispersion

#endif
