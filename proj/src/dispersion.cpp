#include "dielfet/dispersion.hpp"

#include <cmath>

#include "dielfet/errors.hpp"
#include "dielfet/units.hpp"

namespace dielfet::dispersion {

namespace {

// Unnormalized F and its partials; F = 0 defines the shell.
double shell_function(double omega, double k, const Medium& m) {
    const double w2 = omega * omega, k2 = k * k;
    const double M2 = m.M * m.M, M4 = M2 * M2;
    return m.n * m.n * w2 - k2 - 2.0 * m.d1 / M2 * w2 * k2 + 2.0 * m.d2 / M4 * w2 * k2 * k2;
}

double shell_domega(double omega, double k, const Medium& m) {
    const double k2 = k * k;
    const double M2 = m.M * m.M, M4 = M2 * M2;
    return 2.0 * m.n * m.n * omega - 4.0 * m.d1 / M2 * omega * k2 +
           4.0 * m.d2 / M4 * omega * k2 * k2;
}

double shell_dk(double omega, double k, const Medium& m) {
    const double w2 = omega * omega;
    const double M2 = m.M * m.M, M4 = M2 * M2;
    return -2.0 * k - 4.0 * m.d1 / M2 * w2 * k + 8.0 * m.d2 / M4 * w2 * k * k * k;
}

double group_index_at(double omega, double k, const Medium& m) {
    if (omega == 0.0 && k == 0.0) return m.n; // long-wavelength limit
    return -shell_domega(omega, k, m) / shell_dk(omega, k, m);
}

} // namespace

double dispersion_residual(double omega, double k, const Medium& medium) {
    if (!std::isfinite(omega) || !std::isfinite(k))
        throw validation_error("non-finite (omega, k)");
    const double scale = medium.n * medium.n * omega * omega + k * k;
    if (scale == 0.0) return 0.0;
    return shell_function(omega, k, medium) / scale;
}

double symbol(double k, const Medium& medium) {
    const double M2 = medium.M * medium.M;
    const double r = k * k / M2;
    return medium.n * medium.n - 2.0 * medium.d1 * r + 2.0 * medium.d2 * r * r;
}

DispersionPoint solve_omega(double k, const Medium& medium) {
    if (!(k >= 0.0) || !std::isfinite(k)) throw validation_error("k must be finite and >= 0");
    if (k == 0.0) return DispersionPoint{0.0, 0.0, medium.n, medium.n};

    const double ell = symbol(k, medium);
    if (ell <= 0.0)
        throw validity_error("dispersion denominator n^2 - 2 d1 k^2/M^2 + 2 d2 k^4/M^4 "
                             "not positive; the effective theory needs k << M");
    const double omega = k / std::sqrt(ell);
    return DispersionPoint{omega, k, k / omega, group_index_at(omega, k, medium)};
}

double solve_wavenumber(double omega, const Medium& medium, Warnings* warnings) {
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw validation_error("omega must be finite and >= 0");
    if (omega == 0.0) return 0.0;
    if (warnings && omega > medium.M / 2.0)
        warnings->push_back("omega above the validity bound M/2; result extrapolates "
                            "beyond the theory's reach");

    // Bracket the propagating (smallest positive) root. F(omega, 0) > 0; march
    // outward in steps of n*omega/8 until the sign flips.
    const double seed = medium.n * omega;
    const double step = seed / 8.0;
    double k_lo = 0.0, k_hi = 0.0;
    bool bracketed = false;
    for (int j = 1; j <= 64; ++j) {
        const double k = j * step;
        if (shell_function(omega, k, medium) <= 0.0) {
            k_lo = (j - 1) * step;
            k_hi = k;
            bracketed = true;
            break;
        }
    }
    if (!bracketed)
        throw validity_error("no propagating root k(omega); omega beyond the dispersion "
                             "relation's validity range");

    // Safeguarded Newton: bisection fallback whenever the Newton step leaves
    // the bracket or stalls.
    double k = std::min(std::max(seed, k_lo), k_hi);
    for (int it = 0; it < 100; ++it) {
        const double f = shell_function(omega, k, medium);
        if (f > 0.0)
            k_lo = k;
        else
            k_hi = k;
        const double df = shell_dk(omega, k, medium);
        double k_next = (df != 0.0) ? k - f / df : 0.5 * (k_lo + k_hi);
        if (!(k_next > k_lo && k_next < k_hi)) k_next = 0.5 * (k_lo + k_hi);
        const double change = std::fabs(k_next - k);
        k = k_next;
        if (change <= 1e-14 * k) return k;
    }
    throw numerical_error("k(omega) iteration did not converge in 100 steps");
}

DispersionPoint point_from_omega(double omega, const Medium& medium, Warnings* warnings) {
    if (omega == 0.0) return DispersionPoint{0.0, 0.0, medium.n, medium.n};
    const double k = solve_wavenumber(omega, medium, warnings);
    return DispersionPoint{omega, k, k / omega, group_index_at(omega, k, medium)};
}

double phase_index(double omega, const Medium& medium, IndexOrder order, Warnings* warnings) {
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw validation_error("omega must be finite and >= 0");
    if (omega == 0.0) return medium.n;

    if (order == IndexOrder::first_order) {
        if (warnings && omega > medium.M / 2.0)
            warnings->push_back("omega above the validity bound M/2; result extrapolates "
                                "beyond the theory's reach");
        const double x = omega * omega / (medium.M * medium.M);
        return medium.n * (1.0 - medium.d1 * x);
    }
    return solve_wavenumber(omega, medium, warnings) / omega;
}

CauchyCoefficients cauchy_from_eft(const Medium& medium) {
    const double two_pi_hbarc = 2.0 * M_PI * units::hbar_c_ev_m; // eV m
    const double y = two_pi_hbarc * two_pi_hbarc / (medium.M * medium.M); // m^2
    CauchyCoefficients c;
    c.A = medium.n;
    c.B_m2 = -medium.n * medium.d1 * y;
    c.C_m4 = medium.n * (1.5 * medium.d1 * medium.d1 + medium.n * medium.n * medium.d2) * y * y;
    return c;
}

EftCouplings eft_from_cauchy(double A, double B_m2, double M_ev) {
    if (!(A >= 1.0)) throw validation_error("Cauchy A < 1");
    if (!(M_ev > 0.0)) throw validation_error("M <= 0");
    const double two_pi_hbarc = 2.0 * M_PI * units::hbar_c_ev_m;
    const double y = two_pi_hbarc * two_pi_hbarc / (M_ev * M_ev);
    return EftCouplings{A, -B_m2 / (A * y)};
}

} // namespace dielfet::dispersion
