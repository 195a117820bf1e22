#pragma once

#include "ate/fft.hpp"
#include "ate/grid.hpp"
#include "ate/kernels.hpp"

#include <complex>
#include <filesystem>
#include <memory>
#include <span>
#include <vector>

namespace ate {

using Amplitude = std::complex<double>;

/// Dense amplitude vector over a RegisterLayout.
///
/// Evolution steps mutate in place and keep the vector unit-norm. A
/// StateVector must not be shared mutably between threads; distinct
/// instances may evolve concurrently.
class StateVector {
  public:
    /// Computational basis state |0...0>.
    explicit StateVector(RegisterLayout layout);
    /// Takes ownership of `amplitudes`; throws on length mismatch or zero norm.
    /// With `normalize` the vector is rescaled to unit norm.
    StateVector(RegisterLayout layout, std::vector<Amplitude> amplitudes, bool normalize = false);

    static StateVector basis(RegisterLayout layout, std::size_t index);

    const RegisterLayout& layout() const noexcept { return layout_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
    std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }
    const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm() const;
    void normalize();

    /// amp[x] <- exp(-i diag[x] tau) amp[x].
    void apply_diagonal_phase(std::span<const double> diag, double tau);
    /// Centered transform on one electron axis; position -> momentum unless `inverse`.
    void centered_qft_axis(unsigned electron, unsigned axis, bool inverse);
    /// exp(-i T tau) for the full kinetic operator, every electron and axis.
    void kinetic_step(double tau);
    /// Exchanges the complete position registers of electrons i and j.
    void swap_electrons(unsigned i, unsigned j);
    /// R_x(theta) on every nuclear qubit.
    void rotate_nuclear_x(double theta);
    /// Marginal probability of each nuclear label J.
    std::vector<double> nuclear_weights() const;
    /// Largest |amp|^2, +inf on any non-finite entry.
    double max_probability() const;

  private:
    kernels::AxisGeometry axis_geometry(unsigned electron, unsigned axis) const;

    RegisterLayout layout_;
    std::vector<Amplitude> amplitudes_;
    std::shared_ptr<const FftPlan> plan_;
    double cached_tau_ = 0.0;
    std::vector<Amplitude> cached_phases_;
};

/// <a|b>; layouts must match.
Amplitude inner_product(const StateVector& a, const StateVector& b);
/// |<a|b>|^2, insensitive to global phase.
double fidelity(const StateVector& a, const StateVector& b);

/// Binary dump: "ATESTATE", u32 n_e, u32 log2(dimension), then little-endian
/// f64 (re, im) pairs in global-index order.
void write_state_dump(const std::filesystem::path& path, const StateVector& state);
StateVector read_state_dump(const std::filesystem::path& path, const RegisterLayout& layout);

} // namespace ate
