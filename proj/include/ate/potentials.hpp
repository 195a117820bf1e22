#pragma once

#include "ate/grid.hpp"

#include <array>
#include <span>
#include <vector>

namespace ate {

/// Energy assigned to nuclear labels that carry no configuration.
inline constexpr double kUnusedConfigPenalty = 1.0e3;

/// 0.5 m w^2 (x_k - center)^2 on one axis.
std::vector<double> harmonic_1d(const GridSpec& grid, double omega, double center);

/// Three harmonic diagonals centered at L/2; default frequencies (1, sqrt2, sqrt3)
/// give a non-degenerate single-particle spectrum.
std::array<std::vector<double>, 3> anisotropic_harmonic(const GridSpec& grid, double omega_x,
                                                        double omega_y, double omega_z);

/// Z1 Z2 / sqrt(r^2 + lambda^2).
double soft_coulomb(double z1, double z2, double lambda, double r);

/// Two unit-charge soft-Coulomb wells at (L -+ d)/2 seen by an electron.
std::vector<double> v_en_for_bondlength(const GridSpec& grid, double bond_length,
                                        double lambda = 1.0);

/// Nuclear repulsion 1/sqrt(d_J^2 + lambda^2) per label, padded to 2^nuclear_qubits
/// with kUnusedConfigPenalty.
std::vector<double> v_nn_table(std::span<const double> bond_lengths, unsigned nuclear_qubits,
                               double lambda = 1.0);

enum class TermKind { ExternalOneBody, ElectronElectron, ElectronNucleus, NucleusNucleus, InitialV0 };

/// Schedule slot controlling a term's weight. Slot A5 weights V0 with (1 - A5);
/// A6 drives the transverse field and never weights a diagonal.
enum class Slot { A1 = 0, A2, A3, A4, A5, A6, Fixed };

inline constexpr std::size_t kSlotCount = 6;

/// Instantaneous values A_1..A_6.
struct SlotValues {
    std::array<double, kSlotCount> a{};

    static SlotValues uniform(double value) {
        SlotValues v;
        v.a.fill(value);
        return v;
    }
    double operator[](Slot s) const { return a[static_cast<std::size_t>(s)]; }
};

struct PotentialTerm {
    TermKind kind;
    Slot slot;
    std::vector<double> diagonal; // over global indices
};

/// Term with its natural slot (A1 ext, A2 ee, A3 en, A4 nn, A5 v0).
PotentialTerm make_term(TermKind kind, std::vector<double> diagonal);
Slot default_slot(TermKind kind);
/// Throws ConfigError when the slot cannot carry the kind.
void validate_slot(TermKind kind, Slot slot);
double term_weight(const PotentialTerm& term, const SlotValues& values);

/// Sum_l Sum_axis v_axis(x) over every electron; per_axis.size() == layout.dimension().
std::vector<double> one_body_diagonal(const RegisterLayout& layout,
                                      std::span<const std::vector<double>> per_axis);
/// Sum_{l<l'} soft_coulomb(charge_product, lambda, |r_l - r_l'|).
std::vector<double> pair_interaction_diagonal(const RegisterLayout& layout, double charge_product,
                                              double lambda = 1.0);
/// table[J] broadcast over the electronic register.
std::vector<double> nuclear_diagonal(const RegisterLayout& layout, std::span<const double> table);

/// Weighted sum of all terms at the given slot values.
std::vector<double> assemble_diagonal(const RegisterLayout& layout,
                                      std::span<const PotentialTerm> terms,
                                      const SlotValues& values);
/// Allocation-free variant for per-step use; `out` must have total_dimension entries.
void assemble_diagonal_into(std::span<double> out, std::span<const PotentialTerm> terms,
                            const SlotValues& values);

} // namespace ate
