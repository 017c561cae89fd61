#include "gielab/pde/spectral.hpp"

#include <complex>
#include <mutex>

#include <fftw3.h>

namespace gielab::pde {

namespace {

// The FFTW planner mutates global state; executions are thread-safe.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

struct SpectralWorkspace::Impl {
    int n = 0;
    fftw_complex* buf2d = nullptr;   // n * n
    fftw_complex* buf1d = nullptr;   // batch of n rows/cols, n * n
    fftw_complex* bufconv = nullptr; // 2n padded line
    fftw_complex* bufline = nullptr; // single length-n line
    fftw_plan fwd2d{}, bwd2d{};
    fftw_plan fwd_rows{}, bwd_rows{}; // contiguous length-n transforms, n batches
    fftw_plan fwd_conv{}, bwd_conv{};
    fftw_plan fwd_line{}, bwd_line{};

    explicit Impl(int n_) : n(n_) {
        buf2d = fftw_alloc_complex(static_cast<size_t>(n) * n);
        buf1d = fftw_alloc_complex(static_cast<size_t>(n) * n);
        bufconv = fftw_alloc_complex(static_cast<size_t>(2) * n);
        bufline = fftw_alloc_complex(static_cast<size_t>(n));
        std::lock_guard<std::mutex> lock(planner_mutex());
        // FFTW_ESTIMATE keeps plan selection deterministic run to run.
        fwd2d = fftw_plan_dft_2d(n, n, buf2d, buf2d, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd2d = fftw_plan_dft_2d(n, n, buf2d, buf2d, FFTW_BACKWARD, FFTW_ESTIMATE);
        const int dims[1] = {n};
        fwd_rows = fftw_plan_many_dft(1, dims, n, buf1d, nullptr, 1, n, buf1d, nullptr, 1, n,
                                      FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_rows = fftw_plan_many_dft(1, dims, n, buf1d, nullptr, 1, n, buf1d, nullptr, 1, n,
                                      FFTW_BACKWARD, FFTW_ESTIMATE);
        fwd_conv = fftw_plan_dft_1d(2 * n, bufconv, bufconv, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_conv = fftw_plan_dft_1d(2 * n, bufconv, bufconv, FFTW_BACKWARD, FFTW_ESTIMATE);
        fwd_line = fftw_plan_dft_1d(n, bufline, bufline, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_line = fftw_plan_dft_1d(n, bufline, bufline, FFTW_BACKWARD, FFTW_ESTIMATE);
    }

    ~Impl() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(fwd2d);
        fftw_destroy_plan(bwd2d);
        fftw_destroy_plan(fwd_rows);
        fftw_destroy_plan(bwd_rows);
        fftw_destroy_plan(fwd_conv);
        fftw_destroy_plan(bwd_conv);
        fftw_destroy_plan(fwd_line);
        fftw_destroy_plan(bwd_line);
        fftw_free(buf2d);
        fftw_free(buf1d);
        fftw_free(bufconv);
        fftw_free(bufline);
    }
};

SpectralWorkspace::SpectralWorkspace(const Grid1D& grid) : grid_(grid) {
    grid.validate();
    impl_ = std::make_unique<Impl>(grid.n);
}

SpectralWorkspace::~SpectralWorkspace() = default;

void SpectralWorkspace::fft2_forward(Eigen::MatrixXcd& a) {
    const int n = impl_->n;
    auto* dst = reinterpret_cast<std::complex<double>*>(impl_->buf2d);
    std::copy(a.data(), a.data() + static_cast<size_t>(n) * n, dst);
    fftw_execute(impl_->fwd2d);
    std::copy(dst, dst + static_cast<size_t>(n) * n, a.data());
}

void SpectralWorkspace::fft2_inverse(Eigen::MatrixXcd& a) {
    const int n = impl_->n;
    auto* dst = reinterpret_cast<std::complex<double>*>(impl_->buf2d);
    std::copy(a.data(), a.data() + static_cast<size_t>(n) * n, dst);
    fftw_execute(impl_->bwd2d);
    const double scale = 1.0 / (static_cast<double>(n) * n);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = dst[i] * scale;
}

Eigen::MatrixXcd SpectralWorkspace::derivative(const Eigen::MatrixXcd& a, int axis) {
    const int n = impl_->n;
    auto* buf = reinterpret_cast<std::complex<double>*>(impl_->buf1d);
    Eigen::MatrixXcd out(n, n);
    // Eigen matrices are column-major, so columns are the contiguous lines.
    // axis 0 (d/dx1, row index) differentiates along columns directly; axis 1
    // goes through a transpose.
    const bool transpose = axis == 1;
    const Eigen::MatrixXcd src = transpose ? Eigen::MatrixXcd(a.transpose()) : a;
    std::copy(src.data(), src.data() + static_cast<size_t>(n) * n, buf);
    fftw_execute(impl_->fwd_rows);
    const double scale = 1.0 / n;
    for (int col = 0; col < n; ++col) {
        std::complex<double>* line = buf + static_cast<size_t>(col) * n;
        for (int j = 0; j < n; ++j)
            line[j] *= std::complex<double>(0.0, grid_.k(j) * scale);
    }
    fftw_execute(impl_->bwd_rows);
    std::copy(buf, buf + static_cast<size_t>(n) * n, out.data());
    if (transpose) return out.transpose().eval();
    return out;
}

void SpectralWorkspace::fft_forward(Eigen::VectorXcd& a) {
    const int n = impl_->n;
    auto* buf = reinterpret_cast<std::complex<double>*>(impl_->bufline);
    std::copy(a.data(), a.data() + n, buf);
    fftw_execute(impl_->fwd_line);
    std::copy(buf, buf + n, a.data());
}

void SpectralWorkspace::fft_inverse(Eigen::VectorXcd& a) {
    const int n = impl_->n;
    auto* buf = reinterpret_cast<std::complex<double>*>(impl_->bufline);
    std::copy(a.data(), a.data() + n, buf);
    fftw_execute(impl_->bwd_line);
    const double scale = 1.0 / n;
    for (int j = 0; j < n; ++j) a(j) = buf[j] * scale;
}

Eigen::VectorXd SpectralWorkspace::convolve(const Eigen::VectorXd& rho,
                                            const std::function<double(double)>& kernel) {
    const int n = impl_->n;
    const int m = 2 * n;
    auto* buf = reinterpret_cast<std::complex<double>*>(impl_->bufconv);

    // Kernel spectrum at signed displacements j dx; index m - j holds -j dx.
    Eigen::VectorXcd kernel_hat(m);
    for (int j = 0; j < m; ++j) buf[j] = 0.0;
    buf[0] = kernel(0.0);
    for (int j = 1; j <= n - 1; ++j) {
        buf[j] = kernel(j * grid_.dx);
        buf[m - j] = kernel(-j * grid_.dx);
    }
    buf[n] = kernel(n * grid_.dx);
    fftw_execute(impl_->fwd_conv);
    for (int j = 0; j < m; ++j) kernel_hat(j) = buf[j];

    for (int j = 0; j < m; ++j) buf[j] = j < n ? std::complex<double>(rho(j), 0.0) : 0.0;
    fftw_execute(impl_->fwd_conv);
    for (int j = 0; j < m; ++j) buf[j] *= kernel_hat(j);
    fftw_execute(impl_->bwd_conv);

    Eigen::VectorXd out(n);
    const double scale = grid_.dx / m;
    for (int j = 0; j < n; ++j) out(j) = buf[j].real() * scale;
    return out;
}

} // namespace gielab::pde
