#include "ate/potentials.hpp"

#include "ate/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ate {

std::vector<double> harmonic_1d(const GridSpec& grid, double omega, double center) {
    if (!(omega > 0.0))
        throw ConfigError("harmonic frequency must be positive");
    std::vector<double> v(grid.points());
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double dx = grid.position_of(k) - center;
        v[k] = 0.5 * grid.mass() * omega * omega * dx * dx;
    }
    return v;
}

std::array<std::vector<double>, 3> anisotropic_harmonic(const GridSpec& grid, double omega_x,
                                                        double omega_y, double omega_z) {
    const double center = grid.length() / 2.0;
    return {harmonic_1d(grid, omega_x, center), harmonic_1d(grid, omega_y, center),
            harmonic_1d(grid, omega_z, center)};
}

double soft_coulomb(double z1, double z2, double lambda, double r) {
    if (!(lambda > 0.0))
        throw ConfigError("soft-Coulomb softening must be positive");
    return z1 * z2 / std::sqrt(r * r + lambda * lambda);
}

std::vector<double> v_en_for_bondlength(const GridSpec& grid, double bond_length, double lambda) {
    if (!(bond_length > 0.0) || !(bond_length < grid.length()))
        throw ConfigError("bond length " + std::to_string(bond_length) + " lies outside the cell");
    const double left = (grid.length() - bond_length) / 2.0;
    const double right = (grid.length() + bond_length) / 2.0;
    std::vector<double> v(grid.points());
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double x = grid.position_of(k);
        v[k] = soft_coulomb(-1.0, 1.0, lambda, x - right) + soft_coulomb(-1.0, 1.0, lambda, x - left);
    }
    return v;
}

std::vector<double> v_nn_table(std::span<const double> bond_lengths, unsigned nuclear_qubits,
                               double lambda) {
    if (bond_lengths.empty())
        throw ConfigError("at least one nuclear configuration is required");
    const std::size_t slots = std::size_t{1} << nuclear_qubits;
    if (bond_lengths.size() > slots)
        throw ConfigError(std::to_string(bond_lengths.size()) + " configurations do not fit in " +
                          std::to_string(nuclear_qubits) + " nuclear qubits");
    std::vector<double> table(slots, kUnusedConfigPenalty);
    for (std::size_t j = 0; j < bond_lengths.size(); ++j)
        table[j] = soft_coulomb(1.0, 1.0, lambda, bond_lengths[j]);
    return table;
}

Slot default_slot(TermKind kind) {
    switch (kind) {
    case TermKind::ExternalOneBody:
        return Slot::A1;
    case TermKind::ElectronElectron:
        return Slot::A2;
    case TermKind::ElectronNucleus:
        return Slot::A3;
    case TermKind::NucleusNucleus:
        return Slot::A4;
    case TermKind::InitialV0:
        return Slot::A5;
    }
    throw ConfigError("unknown potential kind");
}

void validate_slot(TermKind kind, Slot slot) {
    const bool ok = kind == TermKind::InitialV0 ? slot == Slot::A5
                                                : (slot == default_slot(kind) || slot == Slot::Fixed);
    if (!ok)
        throw ConfigError("potential term assigned to an incompatible schedule slot");
}

PotentialTerm make_term(TermKind kind, std::vector<double> diagonal) {
    return {kind, default_slot(kind), std::move(diagonal)};
}

double term_weight(const PotentialTerm& term, const SlotValues& values) {
    validate_slot(term.kind, term.slot);
    if (term.slot == Slot::Fixed)
        return 1.0;
    if (term.kind == TermKind::InitialV0)
        return 1.0 - values[Slot::A5];
    return values[term.slot];
}

std::vector<double> one_body_diagonal(const RegisterLayout& layout,
                                      std::span<const std::vector<double>> per_axis) {
    const unsigned d = layout.dimension();
    const std::size_t n = layout.grid().points();
    if (per_axis.size() != d)
        throw ConfigError("one-body potential needs one diagonal per spatial axis");
    for (const auto& v : per_axis)
        if (v.size() != n)
            throw ConfigError("one-body axis diagonal has the wrong length");
    std::vector<double> out(layout.total_dimension());
    std::vector<std::size_t> coords(layout.axis_count());
    for (std::size_t x = 0; x < out.size(); ++x) {
        layout.unflatten(x, coords);
        double sum = 0.0;
        for (std::size_t a = 0; a < coords.size(); ++a)
            sum += per_axis[a % d][coords[a]];
        out[x] = sum;
    }
    return out;
}

std::vector<double> pair_interaction_diagonal(const RegisterLayout& layout, double charge_product,
                                              double lambda) {
    const unsigned d = layout.dimension();
    const unsigned ne = layout.electrons();
    const double dx = layout.grid().spacing();
    std::vector<double> out(layout.total_dimension());
    std::vector<std::size_t> coords(layout.axis_count());
    for (std::size_t x = 0; x < out.size(); ++x) {
        layout.unflatten(x, coords);
        double sum = 0.0;
        for (unsigned l = 0; l < ne; ++l)
            for (unsigned m = l + 1; m < ne; ++m) {
                double r2 = 0.0;
                for (unsigned ax = 0; ax < d; ++ax) {
                    const double delta = (static_cast<double>(coords[l * d + ax]) -
                                          static_cast<double>(coords[m * d + ax])) * dx;
                    r2 += delta * delta;
                }
                sum += soft_coulomb(charge_product, 1.0, lambda, std::sqrt(r2));
            }
        out[x] = sum;
    }
    return out;
}

std::vector<double> nuclear_diagonal(const RegisterLayout& layout, std::span<const double> table) {
    if (table.size() != layout.nuclear_dimension())
        throw ConfigError("nuclear table length does not match the nuclear register");
    std::vector<double> out(layout.total_dimension());
    for (std::size_t x = 0; x < out.size(); ++x)
        out[x] = table[x % table.size()];
    return out;
}

void assemble_diagonal_into(std::span<double> out, std::span<const PotentialTerm> terms,
                            const SlotValues& values) {
    std::fill(out.begin(), out.end(), 0.0);
    for (const auto& term : terms) {
        if (term.diagonal.size() != out.size())
            throw ConfigError("potential term built on a different layout");
        const double w = term_weight(term, values);
        if (w == 0.0)
            continue;
        for (std::size_t x = 0; x < out.size(); ++x)
            out[x] += w * term.diagonal[x];
    }
}

std::vector<double> assemble_diagonal(const RegisterLayout& layout,
                                      std::span<const PotentialTerm> terms,
                                      const SlotValues& values) {
    std::vector<double> out(layout.total_dimension());
    assemble_diagonal_into(out, terms, values);
    return out;
}

} // namespace ate
