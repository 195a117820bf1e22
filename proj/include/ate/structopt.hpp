#pragma once

#include "ate/grid.hpp"
#include "ate/spectra.hpp"
#include "ate/statevector.hpp"

#include <cstdint>
#include <vector>

namespace ate {

/// Candidate H2+-like geometries: two unit-charge nuclei at (L -+ d_J)/2 on a
/// 1D cell, labelled J = 0..K-1 on the nuclear register.
class NuclearConfigSet {
  public:
    NuclearConfigSet(GridSpec grid, std::vector<double> bond_lengths, unsigned nuclear_qubits,
                     double softening = 1.0);

    const GridSpec& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return bond_lengths_.size(); }
    unsigned nuclear_qubits() const noexcept { return nuclear_qubits_; }
    const std::vector<double>& bond_lengths() const noexcept { return bond_lengths_; }
    /// Length 2^n_qn; unused labels hold kUnusedConfigPenalty.
    const std::vector<double>& v_nn() const noexcept { return v_nn_; }
    /// Electron potential for configuration J < size().
    const std::vector<double>& v_en(std::size_t j) const;

    /// Single-electron 1D layout carrying this nuclear register.
    RegisterLayout layout() const;

  private:
    GridSpec grid_;
    std::vector<double> bond_lengths_;
    unsigned nuclear_qubits_;
    std::vector<double> v_nn_;
    std::vector<std::vector<double>> v_en_;
};

struct TransverseField {
    double strength = 0.0; // J_x >= 0
    unsigned qubits = 0;
};

/// diag[(k, J)] = V_en,J(x_k) for J < K, kUnusedConfigPenalty otherwise.
std::vector<double> coupled_en_diagonal(const NuclearConfigSet& configs, const RegisterLayout& layout);
/// diag[(k, J)] = V_nn[J].
std::vector<double> coupled_nn_diagonal(const NuclearConfigSet& configs, const RegisterLayout& layout);

/// R_x(theta) = exp(-i theta/2 sigma_x) on every nuclear qubit.
void transverse_rotation(StateVector& state, double theta);
/// theta_m = -2 dt (1 - a6) J_x.
double rotation_angle(double dt, double a6, const TransverseField& field);

/// T_el + V_en,J + V_nn[J] on the single-electron grid.
ComplexMatrix hamiltonian_per_config(const NuclearConfigSet& configs, std::size_t j);

struct StructureResult {
    std::size_t best = 0;
    std::vector<double> weights;
    /// Labels within 1e-12 of the maximum weight; more than one entry means a tie.
    std::vector<std::size_t> tied;

    bool is_tie() const noexcept { return tied.size() > 1; }
};

StructureResult extract_optimum(const StateVector& state);

/// Multinomial measurement record of the nuclear register with a seeded generator.
std::vector<std::size_t> sample_configurations(std::span<const double> weights, std::size_t shots,
                                               std::uint64_t seed);

} // namespace ate
