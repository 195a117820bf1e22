#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ate {

/// Uniform discretization of one spatial axis of length L with 2^n points.
///
/// Positions are x_k = k*dx, k in [0, N). Momenta use the centered index
/// s~ = s - N/2 so that p_s = s~ * dp covers [-N/2, N/2 - 1] * dp.
class GridSpec {
  public:
    GridSpec(double length, unsigned qubits, double mass = 1.0);

    double length() const noexcept { return length_; }
    unsigned qubits() const noexcept { return qubits_; }
    std::size_t points() const noexcept { return std::size_t{1} << qubits_; }
    double mass() const noexcept { return mass_; }
    double spacing() const noexcept { return length_ / static_cast<double>(points()); }
    double momentum_step() const noexcept;

    double position_of(std::size_t k) const;
    double momentum_of(std::size_t s) const;
    /// s~^2 dp^2 / (2m) for centered bin s.
    double kinetic_energy(std::size_t s) const;

    std::vector<double> positions() const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

  private:
    double length_;
    unsigned qubits_;
    double mass_;
};

/// Composition of electron position registers and the nuclear label register.
///
/// Global index = (((k_0 * N + k_1) * N + ...) * 2^n_qn) + J where k_a runs
/// over electron-major axes (electron 0 axis 0, electron 0 axis 1, ...).
/// The nuclear register is the least-significant block.
class RegisterLayout {
  public:
    RegisterLayout(GridSpec grid, unsigned electrons, unsigned dimension = 1,
                   unsigned nuclear_qubits = 0);

    const GridSpec& grid() const noexcept { return grid_; }
    unsigned electrons() const noexcept { return electrons_; }
    unsigned dimension() const noexcept { return dimension_; }
    unsigned nuclear_qubits() const noexcept { return nuclear_qubits_; }

    std::size_t axis_count() const noexcept { return std::size_t{electrons_} * dimension_; }
    std::size_t nuclear_dimension() const noexcept { return std::size_t{1} << nuclear_qubits_; }
    /// N^(d*n_e), the size of the electronic block.
    std::size_t electronic_dimension() const noexcept { return electronic_dim_; }
    std::size_t total_dimension() const noexcept { return electronic_dim_ * nuclear_dimension(); }
    unsigned total_qubits() const noexcept;

    /// Stride between consecutive grid indices on the given electron axis.
    std::size_t axis_stride(unsigned electron, unsigned axis) const;

    std::size_t flatten(std::span<const std::size_t> grid_indices, std::size_t config = 0) const;
    /// Writes axis_count() grid indices into `grid_indices` and returns J.
    std::size_t unflatten(std::size_t index, std::span<std::size_t> grid_indices) const;

    /// Same register with the nuclear block replaced.
    RegisterLayout with_nuclear_qubits(unsigned nuclear_qubits) const;

    friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;

  private:
    GridSpec grid_;
    unsigned electrons_;
    unsigned dimension_;
    unsigned nuclear_qubits_;
    std::size_t electronic_dim_;
};

} // namespace ate
