#include "ate/statevector.hpp"

#include "ate/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <string>
#include <utility>

namespace ate {

namespace {

constexpr std::array<char, 8> kDumpMagic{'A', 'T', 'E', 'S', 'T', 'A', 'T', 'E'};

template <typename T> void put_le(std::ostream& out, T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    std::array<unsigned char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(bytes.begin(), bytes.end());
    out.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <typename T> T get_le(std::istream& in) {
    std::array<unsigned char, sizeof(T)> bytes;
    if (!in.read(reinterpret_cast<char*>(bytes.data()), sizeof(T)))
        throw ConfigError("state dump truncated");
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(bytes.begin(), bytes.end());
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

} // namespace

StateVector::StateVector(RegisterLayout layout)
    : layout_(std::move(layout)), amplitudes_(layout_.total_dimension(), Amplitude{}),
      plan_(std::make_shared<const FftPlan>(layout_.grid().points())) {
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(RegisterLayout layout, std::vector<Amplitude> amplitudes, bool normalize)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)),
      plan_(std::make_shared<const FftPlan>(layout_.grid().points())) {
    if (amplitudes_.size() != layout_.total_dimension())
        throw ConfigError("amplitude count " + std::to_string(amplitudes_.size()) +
                          " does not match register dimension " +
                          std::to_string(layout_.total_dimension()));
    if (max_probability() == std::numeric_limits<double>::infinity())
        throw NumericalError("non-finite amplitude in state");
    if (!(norm() > 0.0))
        throw NumericalError("state has zero norm");
    if (normalize)
        this->normalize();
}

StateVector StateVector::basis(RegisterLayout layout, std::size_t index) {
    if (index >= layout.total_dimension())
        throw ConfigError("basis index out of range");
    StateVector state(std::move(layout));
    state.amplitudes_[0] = 0.0;
    state.amplitudes_[index] = 1.0;
    return state;
}

double StateVector::norm() const { return std::sqrt(kernels::omp::norm_squared(amplitudes_)); }

void StateVector::normalize() {
    const double n = norm();
    if (!(n > 0.0))
        throw NumericalError("cannot normalize a zero state");
    for (auto& a : amplitudes_)
        a /= n;
}

void StateVector::apply_diagonal_phase(std::span<const double> diag, double tau) {
    if (diag.size() != amplitudes_.size())
        throw ConfigError("diagonal length " + std::to_string(diag.size()) +
                          " does not match state length " + std::to_string(amplitudes_.size()));
    if (!std::isfinite(tau))
        throw ConfigError("phase duration must be finite");
    if (!std::all_of(diag.begin(), diag.end(), [](double v) { return std::isfinite(v); }))
        throw ConfigError("diagonal contains non-finite entries");
    kernels::omp::apply_phase(amplitudes_, diag, tau);
}

kernels::AxisGeometry StateVector::axis_geometry(unsigned electron, unsigned axis) const {
    return {layout_.grid().points(), layout_.axis_stride(electron, axis), amplitudes_.size()};
}

void StateVector::centered_qft_axis(unsigned electron, unsigned axis, bool inverse) {
    kernels::omp::centered_transform(amplitudes_, axis_geometry(electron, axis), *plan_, inverse);
}

void StateVector::kinetic_step(double tau) {
    if (tau == 0.0)
        return;
    const GridSpec& grid = layout_.grid();
    if (cached_phases_.empty() || cached_tau_ != tau) {
        cached_phases_ = kernels::kinetic_phases(grid.points(), grid.momentum_step(), grid.mass(), tau);
        cached_tau_ = tau;
    }
    for (unsigned e = 0; e < layout_.electrons(); ++e)
        for (unsigned ax = 0; ax < layout_.dimension(); ++ax)
            kernels::omp::momentum_phase(amplitudes_, axis_geometry(e, ax), *plan_, cached_phases_);
}

void StateVector::swap_electrons(unsigned i, unsigned j) {
    if (i == j || i >= layout_.electrons() || j >= layout_.electrons())
        throw ConfigError("invalid electron pair for exchange");
    const unsigned d = layout_.dimension();
    std::vector<Amplitude> out(amplitudes_.size());
    std::vector<std::size_t> coords(layout_.axis_count());
    for (std::size_t x = 0; x < amplitudes_.size(); ++x) {
        const std::size_t config = layout_.unflatten(x, coords);
        for (unsigned ax = 0; ax < d; ++ax)
            std::swap(coords[i * d + ax], coords[j * d + ax]);
        out[layout_.flatten(coords, config)] = amplitudes_[x];
    }
    amplitudes_ = std::move(out);
}

void StateVector::rotate_nuclear_x(double theta) {
    if (layout_.nuclear_qubits() == 0)
        throw ConfigError("state has no nuclear register");
    kernels::omp::rx_all(amplitudes_, layout_.nuclear_qubits(), theta);
}

std::vector<double> StateVector::nuclear_weights() const {
    if (layout_.nuclear_qubits() == 0)
        throw ConfigError("state has no nuclear register");
    return kernels::omp::marginal_weights(amplitudes_, layout_.nuclear_dimension());
}

double StateVector::max_probability() const { return kernels::omp::max_probability(amplitudes_); }

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (!(a.layout() == b.layout()))
        throw ConfigError("inner product of states with different layouts");
    return kernels::omp::inner_product(a.amplitudes(), b.amplitudes());
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner_product(a, b)); }

void write_state_dump(const std::filesystem::path& path, const StateVector& state) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot open " + path.string() + " for writing");
    out.write(kDumpMagic.data(), kDumpMagic.size());
    put_le<std::uint32_t>(out, state.layout().electrons());
    put_le<std::uint32_t>(out, state.layout().total_qubits());
    for (const auto& a : state.amplitudes()) {
        put_le<double>(out, a.real());
        put_le<double>(out, a.imag());
    }
    if (!out)
        throw ConfigError("failed writing " + path.string());
}

StateVector read_state_dump(const std::filesystem::path& path, const RegisterLayout& layout) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open " + path.string());
    std::array<char, 8> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kDumpMagic)
        throw ConfigError(path.string() + " is not a state dump");
    const auto electrons = get_le<std::uint32_t>(in);
    const auto qubits = get_le<std::uint32_t>(in);
    if (electrons != layout.electrons() || qubits != layout.total_qubits())
        throw ConfigError("state dump header does not match the requested layout");
    std::vector<Amplitude> amps(layout.total_dimension());
    for (auto& a : amps) {
        const double re = get_le<double>(in);
        const double im = get_le<double>(in);
        a = {re, im};
    }
    return StateVector(layout, std::move(amps));
}

} // namespace ate
