#include "ate/grid.hpp"

#include "ate/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ate {

namespace {
constexpr unsigned kMaxTotalQubits = 40;
}

GridSpec::GridSpec(double length, unsigned qubits, double mass)
    : length_(length), qubits_(qubits), mass_(mass) {
    if (!(length > 0.0) || !std::isfinite(length))
        throw ConfigError("grid length must be positive and finite");
    if (qubits < 1 || qubits > 24)
        throw ConfigError("grid qubit count must be in [1, 24], got " + std::to_string(qubits));
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw ConfigError("particle mass must be positive and finite");
}

double GridSpec::momentum_step() const noexcept { return 2.0 * std::numbers::pi / length_; }

double GridSpec::position_of(std::size_t k) const {
    if (k >= points())
        throw ConfigError("grid index " + std::to_string(k) + " out of range");
    return static_cast<double>(k) * spacing();
}

double GridSpec::momentum_of(std::size_t s) const {
    if (s >= points())
        throw ConfigError("momentum index " + std::to_string(s) + " out of range");
    const auto centered = static_cast<double>(s) - static_cast<double>(points() / 2);
    return centered * momentum_step();
}

double GridSpec::kinetic_energy(std::size_t s) const {
    const double p = momentum_of(s);
    return p * p / (2.0 * mass_);
}

std::vector<double> GridSpec::positions() const {
    std::vector<double> x(points());
    for (std::size_t k = 0; k < x.size(); ++k)
        x[k] = static_cast<double>(k) * spacing();
    return x;
}

RegisterLayout::RegisterLayout(GridSpec grid, unsigned electrons, unsigned dimension,
                               unsigned nuclear_qubits)
    : grid_(grid), electrons_(electrons), dimension_(dimension), nuclear_qubits_(nuclear_qubits),
      electronic_dim_(1) {
    if (electrons < 1)
        throw ConfigError("at least one electron is required");
    if (dimension != 1 && dimension != 3)
        throw ConfigError("spatial dimension must be 1 or 3");
    if (total_qubits() > kMaxTotalQubits)
        throw ConfigError("register of " + std::to_string(total_qubits()) +
                          " qubits exceeds the supported maximum");
    for (std::size_t a = 0; a < axis_count(); ++a)
        electronic_dim_ *= grid_.points();
}

unsigned RegisterLayout::total_qubits() const noexcept {
    return electrons_ * dimension_ * grid_.qubits() + nuclear_qubits_;
}

std::size_t RegisterLayout::axis_stride(unsigned electron, unsigned axis) const {
    if (electron >= electrons_ || axis >= dimension_)
        throw ConfigError("invalid register selection (electron " + std::to_string(electron) +
                          ", axis " + std::to_string(axis) + ")");
    const std::size_t a = std::size_t{electron} * dimension_ + axis;
    std::size_t stride = nuclear_dimension();
    for (std::size_t b = a + 1; b < axis_count(); ++b)
        stride *= grid_.points();
    return stride;
}

std::size_t RegisterLayout::flatten(std::span<const std::size_t> grid_indices,
                                    std::size_t config) const {
    if (grid_indices.size() != axis_count())
        throw ConfigError("expected " + std::to_string(axis_count()) + " grid indices");
    const std::size_t n = grid_.points();
    std::size_t index = 0;
    for (std::size_t k : grid_indices) {
        if (k >= n)
            throw ConfigError("grid index " + std::to_string(k) + " out of range");
        index = index * n + k;
    }
    if (config >= nuclear_dimension())
        throw ConfigError("nuclear label " + std::to_string(config) + " out of range");
    return index * nuclear_dimension() + config;
}

std::size_t RegisterLayout::unflatten(std::size_t index, std::span<std::size_t> grid_indices) const {
    if (index >= total_dimension())
        throw ConfigError("global index " + std::to_string(index) + " out of range");
    if (grid_indices.size() != axis_count())
        throw ConfigError("expected " + std::to_string(axis_count()) + " grid indices");
    const std::size_t config = index % nuclear_dimension();
    index /= nuclear_dimension();
    const std::size_t n = grid_.points();
    for (std::size_t a = grid_indices.size(); a-- > 0;) {
        grid_indices[a] = index % n;
        index /= n;
    }
    return config;
}

RegisterLayout RegisterLayout::with_nuclear_qubits(unsigned nuclear_qubits) const {
    return RegisterLayout(grid_, electrons_, dimension_, nuclear_qubits);
}

} // namespace ate
