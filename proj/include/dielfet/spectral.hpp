#ifndef DIELFET_SPECTRAL_HPP
#define DIELFET_SPECTRAL_HPP

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace dielfet::spectral {

/// Real 1D FFT pair of fixed size (FFTW r2c/c2r behind copy-in/copy-out
/// buffers). The inverse includes the 1/n normalization so
/// inverse(forward(x)) == x up to rounding. Plans are created with
/// FFTW_ESTIMATE: deterministic results for a fixed grid.
class RealFft {
public:
    explicit RealFft(std::size_t n);
    ~RealFft();
    RealFft(const RealFft&) = delete;
    RealFft& operator=(const RealFft&) = delete;

    std::size_t size() const { return n_; }
    std::size_t spectrum_size() const { return n_ / 2 + 1; }

    void forward(const std::vector<double>& in, std::vector<std::complex<double>>& out) const;
    void inverse(const std::vector<std::complex<double>>& in, std::vector<double>& out) const;

private:
    std::size_t n_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace dielfet::spectral

#endif
