#include "dielfet/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dielfet/errors.hpp"

namespace dielfet::quadrature {

namespace {

// 15-point Kronrod abscissae/weights and the embedded 7-point Gauss weights
// (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
};

Segment evaluate(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double result_gauss = kWg[3] * fc;
    double result_kronrod = kWgk[7] * fc;

    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        result_kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
    }
    result_gauss *= half;
    result_kronrod *= half;

    return Segment{a, b, result_kronrod, std::fabs(result_kronrod - result_gauss)};
}

} // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, int max_segments) {
    std::vector<Segment> segments{evaluate(f, a, b)};
    int evaluations = 15;

    for (;;) {
        double total = 0.0, total_err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segments.size(); ++i) {
            total += segments[i].value;
            total_err += segments[i].error;
            if (segments[i].error > segments[worst].error) worst = i;
        }
        if (total_err <= std::max(abs_tol, rel_tol * std::fabs(total)))
            return Result{total, total_err, evaluations};
        if (static_cast<int>(segments.size()) >= max_segments)
            throw numerical_error("adaptive quadrature exhausted " +
                                  std::to_string(max_segments) + " segments");

        const Segment s = segments[worst];
        const double mid = 0.5 * (s.a + s.b);
        segments[worst] = evaluate(f, s.a, mid);
        segments.push_back(evaluate(f, mid, s.b));
        evaluations += 30;
    }
}

} // namespace dielfet::quadrature
