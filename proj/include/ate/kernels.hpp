#pragma once

// Element-wise and per-line kernels on flat amplitude arrays.
//
// `serial` is the reference implementation kept for testing and benchmarking;
// `omp` is the OpenMP-parallel version used by StateVector. Both namespaces
// expose identical signatures and must agree to rounding.

#include "ate/fft.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ate::kernels {

using Amplitude = std::complex<double>;

/// One strided axis of `points` entries inside an array of `total` entries.
/// Lines start at outer*points*stride + inner for inner < stride.
struct AxisGeometry {
    std::size_t points;
    std::size_t stride;
    std::size_t total;

    std::size_t line_count() const noexcept { return total / points; }
    std::size_t line_start(std::size_t line) const noexcept {
        const std::size_t outer = line / stride;
        const std::size_t inner = line % stride;
        return outer * points * stride + inner;
    }
};

namespace serial {

/// amps[x] *= exp(-i diag[x] tau)
void apply_phase(std::span<Amplitude> amps, std::span<const double> diag, double tau);
/// Unitary centered transform on one axis: position -> momentum unless `inverse`.
void centered_transform(std::span<Amplitude> amps, const AxisGeometry& axis, const FftPlan& plan,
                        bool inverse);
/// Multiplies every momentum component on one axis by phases[q] (FFT bin order).
void momentum_phase(std::span<Amplitude> amps, const AxisGeometry& axis, const FftPlan& plan,
                    std::span<const Amplitude> phases);
/// exp(-i theta/2 X) on each of the low `qubits` bits of the index.
void rx_all(std::span<Amplitude> amps, unsigned qubits, double theta);
/// w[J] = sum of |amp|^2 over indices with index mod nuclear_dim == J.
std::vector<double> marginal_weights(std::span<const Amplitude> amps, std::size_t nuclear_dim);
Amplitude inner_product(std::span<const Amplitude> a, std::span<const Amplitude> b);
double norm_squared(std::span<const Amplitude> amps);
/// max |amp|^2, or +inf if any entry is non-finite.
double max_probability(std::span<const Amplitude> amps);

} // namespace serial

namespace omp {

/// Same contracts as serial.
void apply_phase(std::span<Amplitude> amps, std::span<const double> diag, double tau);
void centered_transform(std::span<Amplitude> amps, const AxisGeometry& axis, const FftPlan& plan,
                        bool inverse);
void momentum_phase(std::span<Amplitude> amps, const AxisGeometry& axis, const FftPlan& plan,
                    std::span<const Amplitude> phases);
void rx_all(std::span<Amplitude> amps, unsigned qubits, double theta);
std::vector<double> marginal_weights(std::span<const Amplitude> amps, std::size_t nuclear_dim);
Amplitude inner_product(std::span<const Amplitude> a, std::span<const Amplitude> b);
double norm_squared(std::span<const Amplitude> amps);
double max_probability(std::span<const Amplitude> amps);

} // namespace omp

/// Kinetic phase table exp(-i E_s tau) in FFT bin order for an N-point axis
/// with momentum step dp and mass m.
std::vector<Amplitude> kinetic_phases(std::size_t points, double momentum_step, double mass,
                                      double tau);

} // namespace ate::kernels
