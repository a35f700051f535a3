#ifndef DIELFET_QUADRATURE_HPP
#define DIELFET_QUADRATURE_HPP

#include <functional>

namespace dielfet::quadrature {

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b].
/// Splits the segment with the largest error estimate until the accumulated
/// estimate satisfies max(abs_tol, rel_tol*|integral|). Throws
/// numerical_error when max_segments is exhausted first. Deterministic:
/// fixed node order and a fixed splitting rule.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol = 0.0, int max_segments = 4000);

} // namespace dielfet::quadrature

#endif
