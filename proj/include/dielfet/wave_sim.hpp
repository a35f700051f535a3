#ifndef DIELFET_WAVE_SIM_HPP
#define DIELFET_WAVE_SIM_HPP

/// 1D pseudo-spectral solver for the nonlinear wave equation of a single
/// transverse polarization on a periodic domain, in internal units M = 1.
///
/// Varying the action of
///   L = (n^2 E^2 - B^2)/2 + d1 E E'' + d2 (E'')^2 + a E^4      (E = -dA/dt)
/// in temporal gauge gives the equation of motion
///   d^2Q/dt^2 = d^2E/dz^2,
///   Q = n^2 E + 2 d1 E'' + 2 d2 E'''' + 4 a E^3,
/// which is integrated by a leapfrog on Q with spectral spatial derivatives;
/// E is recovered from Q each step by a fixed-point inversion diagonal in
/// Fourier space. B rides along on Faraday's law dB/dt = -dE/dz, staggered
/// half a step, and only enters diagnostics.

#include <complex>
#include <cstddef>
#include <istream>
#include <variant>
#include <vector>

#include "dielfet/spectral.hpp"

namespace dielfet::sim {

struct PlaneWaveInit {
    double amplitude = 0.0;
    std::size_t mode_index = 1;
};

struct GaussianInit {
    double amplitude = 0.0;
    double center = 0.0;
    double width = 1.0; ///< 1/e half-width of the envelope
    std::size_t carrier_mode = 8;
};

struct SimConfig {
    double n = 1.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double a = 0.0;
    std::size_t grid_points = 512; ///< power of two
    double domain_length = 2.0 * 3.14159265358979323846;
    double dt = 1e-3;              ///< must satisfy dt <= 0.5 n dz
    std::size_t steps = 1000;
    std::variant<PlaneWaveInit, GaussianInit> initial_condition = PlaneWaveInit{};
    std::size_t output_every = 10;
};

/// Throws validation_error on any violated config invariant.
void validate(const SimConfig& config);

/// Parses the flat key-value run-config format (`key = value`, `#` comments;
/// keys named exactly after the SimConfig fields, plus `initial_condition`
/// = plane|gaussian with `amplitude`, `mode_index`, `center`, `width`,
/// `carrier_mode`).
SimConfig parse_sim_config(std::istream& in);
SimConfig load_sim_config(const std::string& path);

struct FieldState {
    std::vector<double> E;          ///< at time `time`
    std::vector<double> B;          ///< staggered, at time - dt/2
    std::vector<double> Q_current;  ///< at time
    std::vector<double> Q_previous; ///< at time - dt
    double time = 0.0;
};

/// Scratch buffers and FFT plans reused across steps of one run.
class Workspace {
public:
    explicit Workspace(std::size_t grid_points) : fft(grid_points) {}
    spectral::RealFft fft;
    std::vector<std::complex<double>> spec_a, spec_b;
    std::vector<double> real_a, real_b;
};

/// E from the initial condition; B consistent with a right-moving wave;
/// Q from E; Q_previous back-filled by an exact linear back-step in
/// Fourier space.
FieldState init_state(const SimConfig& config);

struct InversionTrace {
    std::vector<double> residuals;
};

/// Solves Q = (n^2 + 2 d1 dz^2 + 2 d2 dz^4)E + 4 a E^3 for E by fixed-point
/// iteration with the linear operator inverted spectrally. Max-norm residual
/// tolerance 1e-12 (relative to max(1, |Q|)), at most 50 iterations.
std::vector<double> invert_auxiliary(const std::vector<double>& q, const SimConfig& config,
                                     const std::vector<double>& guess, Workspace& ws,
                                     InversionTrace* trace = nullptr);

struct DiagnosticsSample {
    double time = 0.0;
    double energy = 0.0;   ///< (1/2) sum (n^2 E^2 + B^2) dz
    double momentum = 0.0; ///< sum n^2 E B dz
    double peak_amplitude = 0.0;
};

struct ModeSample {
    double time = 0.0;
    std::complex<double> amplitude; ///< physical amplitude of the carrier bin
    double dominance = 1.0;         ///< carrier fraction of non-DC spectral power
};

/// One leapfrog step. When `sample` is non-null it receives the diagnostics
/// of the *pre-step* integer time (B averaged across the step) and, via
/// `mode`, the carrier-bin spectral amplitude.
void step(FieldState& state, const SimConfig& config, Workspace& ws,
          DiagnosticsSample* sample = nullptr, ModeSample* mode = nullptr,
          std::size_t mode_index = 0);

/// Convenience single-step with a throwaway workspace.
void step(FieldState& state, const SimConfig& config);

struct ModeSeries {
    std::size_t mode_index = 0;
    double k = 0.0;
    std::vector<double> times;
    std::vector<std::complex<double>> amplitude;
    double min_dominance = 1.0;
};

struct RunResult {
    std::vector<DiagnosticsSample> diagnostics;
    ModeSeries carrier;
    FieldState final_state;
};

/// Runs `steps` leapfrog steps, sampling every `output_every`. Deterministic
/// for a fixed config.
RunResult run(const SimConfig& config);

struct PhaseMeasurement {
    double omega_measured = 0.0;
    double v_phase = 0.0;
    double delta_n_eff = 0.0;
};

/// Carrier frequency by linear regression on the unwrapped phase of the
/// dominant bin; delta_n_eff relative to a reference run at identical config
/// with a = 0. For a carrier of amplitude A the expected shift is
/// 3 a A^2/(2 n) (M = 1): the cubic term acts as (3A^2/4) E on the carrier.
PhaseMeasurement measure_phase_and_nonlinear_shift(const ModeSeries& series,
                                                   const ModeSeries& linear_reference);

/// Single-series variant: reference frequency from the analytic linear
/// dispersion of the config.
PhaseMeasurement measure_phase_and_nonlinear_shift(const ModeSeries& series,
                                                   const SimConfig& config);

} // namespace dielfet::sim

#endif
