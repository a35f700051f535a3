#include "dielfet/spectral.hpp"

#include <cstring>
#include <stdexcept>

#include <fftw3.h>

namespace dielfet::spectral {

struct RealFft::Impl {
    double* real_buf = nullptr;
    fftw_complex* complex_buf = nullptr;
    fftw_plan forward = nullptr;
    fftw_plan inverse = nullptr;

    ~Impl() {
        if (forward) fftw_destroy_plan(forward);
        if (inverse) fftw_destroy_plan(inverse);
        if (real_buf) fftw_free(real_buf);
        if (complex_buf) fftw_free(complex_buf);
    }
};

RealFft::RealFft(std::size_t n) : n_(n), impl_(std::make_unique<Impl>()) {
    if (n == 0) throw std::invalid_argument("RealFft: zero size");
    impl_->real_buf = fftw_alloc_real(n);
    impl_->complex_buf = fftw_alloc_complex(n / 2 + 1);
    impl_->forward = fftw_plan_dft_r2c_1d(static_cast<int>(n), impl_->real_buf,
                                          impl_->complex_buf, FFTW_ESTIMATE);
    impl_->inverse = fftw_plan_dft_c2r_1d(static_cast<int>(n), impl_->complex_buf,
                                          impl_->real_buf, FFTW_ESTIMATE);
    if (!impl_->forward || !impl_->inverse)
        throw std::runtime_error("RealFft: plan creation failed");
}

RealFft::~RealFft() = default;

void RealFft::forward(const std::vector<double>& in,
                      std::vector<std::complex<double>>& out) const {
    if (in.size() != n_) throw std::invalid_argument("RealFft::forward: size mismatch");
    std::memcpy(impl_->real_buf, in.data(), n_ * sizeof(double));
    fftw_execute(impl_->forward);
    out.resize(spectrum_size());
    std::memcpy(out.data(), impl_->complex_buf, spectrum_size() * sizeof(fftw_complex));
}

void RealFft::inverse(const std::vector<std::complex<double>>& in,
                      std::vector<double>& out) const {
    if (in.size() != spectrum_size())
        throw std::invalid_argument("RealFft::inverse: size mismatch");
    std::memcpy(impl_->complex_buf, in.data(), spectrum_size() * sizeof(fftw_complex));
    fftw_execute(impl_->inverse);
    out.resize(n_);
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = impl_->real_buf[i] * scale;
}

} // namespace dielfet::spectral
