#pragma once

#include "ate/grid.hpp"
#include "ate/statevector.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ate {

/// Single-particle eigenfunctions of T + harmonic well on the evolution grid,
/// sorted by total energy. 3D orbitals are products of per-axis functions.
struct OrbitalSet {
    GridSpec grid;
    unsigned dimension = 1;
    std::vector<std::array<unsigned, 3>> quantum_numbers;
    std::vector<double> energies;
    /// Each orbital has N^dimension real entries, x axis most significant.
    std::vector<std::vector<double>> orbitals;
};

/// Every amplitude equal to total_dimension^{-1/2}: H on every qubit.
StateVector uniform_state(const RegisterLayout& layout);

/// Lowest `count` orbitals; omegas holds one frequency per axis (1 or 3 entries).
/// Per-axis levels are limited to N/4 to stay well resolved.
OrbitalSet harmonic_orbitals(const GridSpec& grid, std::span<const double> omegas, std::size_t count);

/// Antisymmetrized product of the lowest layout.electrons() orbitals.
/// The layout must have no nuclear register and match the orbital grid.
StateVector slater_state(const OrbitalSet& orbitals, const RegisterLayout& layout);

struct InjectivityReport {
    bool injective = true;
    std::size_t violation_count = 0;
    /// Up to 16 example pairs (n, m) with n != m and eps(n) == eps(m).
    std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> witnesses;
};

/// Checks (n) != (m) => eps(n) != eps(m) for eps(n) = Sum_mu w_mu (n_mu + 1/2),
/// w_mu = sqrt(squared_frequencies[mu]), over 0 <= n_mu <= n_max. Exact: each
/// frequency is split into r sqrt(f) with f square-free, and two levels tie
/// only if their integer coefficients on every sqrt(f) agree.
InjectivityReport epsilon_injectivity_check(unsigned n_max,
                                            std::array<unsigned, 3> squared_frequencies = {1, 2, 3});

/// electron_state (x) |+>^{n_qn}.
StateVector initial_product_state(const StateVector& electron_state, unsigned nuclear_qubits);

} // namespace ate
