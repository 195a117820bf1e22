#include "ate/structopt.hpp"

#include "ate/errors.hpp"
#include "ate/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace ate {

NuclearConfigSet::NuclearConfigSet(GridSpec grid, std::vector<double> bond_lengths,
                                   unsigned nuclear_qubits, double softening)
    : grid_(grid), bond_lengths_(std::move(bond_lengths)), nuclear_qubits_(nuclear_qubits),
      v_nn_(v_nn_table(bond_lengths_, nuclear_qubits, softening)) {
    if (nuclear_qubits == 0)
        throw ConfigError("structure search needs at least one nuclear qubit");
    std::vector<double> sorted = bond_lengths_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ConfigError("bond lengths must be distinct");
    for (double d : bond_lengths_)
        v_en_.push_back(v_en_for_bondlength(grid_, d, softening));
}

const std::vector<double>& NuclearConfigSet::v_en(std::size_t j) const {
    if (j >= v_en_.size())
        throw ConfigError("configuration label " + std::to_string(j) + " out of range");
    return v_en_[j];
}

RegisterLayout NuclearConfigSet::layout() const { return RegisterLayout(grid_, 1, 1, nuclear_qubits_); }

namespace {

void check_layout(const NuclearConfigSet& configs, const RegisterLayout& layout) {
    if (!(layout.grid() == configs.grid()) || layout.electrons() != 1 || layout.dimension() != 1 ||
        layout.nuclear_qubits() != configs.nuclear_qubits())
        throw ConfigError("layout does not match the nuclear configuration set");
}

} // namespace

std::vector<double> coupled_en_diagonal(const NuclearConfigSet& configs, const RegisterLayout& layout) {
    check_layout(configs, layout);
    const std::size_t nd = layout.nuclear_dimension();
    std::vector<double> out(layout.total_dimension());
    for (std::size_t x = 0; x < out.size(); ++x) {
        const std::size_t k = x / nd;
        const std::size_t j = x % nd;
        out[x] = j < configs.size() ? configs.v_en(j)[k] : kUnusedConfigPenalty;
    }
    return out;
}

std::vector<double> coupled_nn_diagonal(const NuclearConfigSet& configs, const RegisterLayout& layout) {
    check_layout(configs, layout);
    return nuclear_diagonal(layout, configs.v_nn());
}

void transverse_rotation(StateVector& state, double theta) { state.rotate_nuclear_x(theta); }

double rotation_angle(double dt, double a6, const TransverseField& field) {
    if (field.strength < 0.0)
        throw ConfigError("transverse strength must be non-negative");
    return -2.0 * dt * (1.0 - a6) * field.strength;
}

ComplexMatrix hamiltonian_per_config(const NuclearConfigSet& configs, std::size_t j) {
    const std::vector<double>& v = configs.v_en(j);
    std::vector<double> diag(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        diag[k] = v[k] + configs.v_nn()[j];
    return dense_hamiltonian(RegisterLayout(configs.grid(), 1, 1, 0), diag);
}

StructureResult extract_optimum(const StateVector& state) {
    StructureResult result;
    result.weights = state.nuclear_weights();
    const auto it = std::max_element(result.weights.begin(), result.weights.end());
    result.best = static_cast<std::size_t>(it - result.weights.begin());
    for (std::size_t j = 0; j < result.weights.size(); ++j)
        if (*it - result.weights[j] <= 1e-12)
            result.tied.push_back(j);
    return result;
}

std::vector<std::size_t> sample_configurations(std::span<const double> weights, std::size_t shots,
                                               std::uint64_t seed) {
    if (weights.empty())
        throw ConfigError("no weights to sample");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w))
            throw NumericalError("sampling weights must be finite and non-negative");
        total += w;
    }
    if (!(total > 0.0))
        throw NumericalError("sampling weights sum to zero");
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
    std::vector<std::size_t> counts(weights.size(), 0);
    for (std::size_t i = 0; i < shots; ++i)
        ++counts[dist(rng)];
    return counts;
}

} // namespace ate
