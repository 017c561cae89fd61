#pragma once

#include <functional>
#include <memory>

#include <Eigen/Dense>

#include "gielab/pde/grid.hpp"

namespace gielab::pde {

/// FFT working set bound to one grid size. Owns its FFTW plans and buffers;
/// instances are independent, so separate runs can transform concurrently.
/// Plan creation itself is serialized internally (the FFTW planner is global).
class SpectralWorkspace {
public:
    explicit SpectralWorkspace(const Grid1D& grid);
    ~SpectralWorkspace();

    SpectralWorkspace(const SpectralWorkspace&) = delete;
    SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

    /// In-place unnormalized forward 2D DFT.
    void fft2_forward(Eigen::MatrixXcd& a);
    /// In-place inverse 2D DFT, normalized by 1/n^2.
    void fft2_inverse(Eigen::MatrixXcd& a);

    /// Spectral partial derivative along the particle-1 axis (row index) or
    /// particle-2 axis (column index).
    Eigen::MatrixXcd derivative(const Eigen::MatrixXcd& a, int axis);

    /// In-place 1D transforms for single-particle factor propagation.
    void fft_forward(Eigen::VectorXcd& a);
    void fft_inverse(Eigen::VectorXcd& a);

    /// Zero-padded linear convolution with a displacement kernel:
    /// out[a] = sum_b kernel(x_a - x_b) rho[b] dx. No periodic wrap.
    Eigen::VectorXd convolve(const Eigen::VectorXd& rho,
                             const std::function<double(double)>& kernel);

    const Grid1D& grid() const noexcept { return grid_; }

private:
    Grid1D grid_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace gielab::pde
