#include "ate/spectra.hpp"

#include "ate/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <string>

namespace ate {

namespace {

void check_cap(std::size_t dim, std::size_t cap) {
    if (dim > cap)
        throw DimensionCapError("dense oracle dimension " + std::to_string(dim) +
                                " exceeds the cap of " + std::to_string(cap));
}

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

} // namespace

ComplexMatrix kinetic_matrix_1d(const GridSpec& grid) {
    const std::size_t n = grid.points();
    ComplexMatrix f(idx(n), idx(n));
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::VectorXd energy(idx(n));
    for (std::size_t s = 0; s < n; ++s) {
        energy[idx(s)] = grid.kinetic_energy(s);
        const double p = grid.momentum_of(s);
        for (std::size_t k = 0; k < n; ++k)
            f(idx(s), idx(k)) = std::polar(norm, -p * grid.position_of(k));
    }
    ComplexMatrix t = f.adjoint() * energy.asDiagonal() * f;
    // Hermitian by construction; remove rounding asymmetry.
    return (t + t.adjoint()) * 0.5;
}

ComplexMatrix kinetic_matrix(const RegisterLayout& layout, std::size_t cap) {
    const std::size_t dim = layout.total_dimension();
    check_cap(dim, cap);
    const std::size_t n = layout.grid().points();
    const ComplexMatrix t1 = kinetic_matrix_1d(layout.grid());
    ComplexMatrix h = ComplexMatrix::Zero(idx(dim), idx(dim));
    for (unsigned e = 0; e < layout.electrons(); ++e)
        for (unsigned ax = 0; ax < layout.dimension(); ++ax) {
            const std::size_t stride = layout.axis_stride(e, ax);
            for (std::size_t x = 0; x < dim; ++x) {
                const std::size_t c = (x / stride) % n;
                const std::size_t base = x - c * stride;
                for (std::size_t c2 = 0; c2 < n; ++c2)
                    h(idx(x), idx(base + c2 * stride)) += t1(idx(c), idx(c2));
            }
        }
    return h;
}

ComplexMatrix transverse_matrix(const RegisterLayout& layout, std::size_t cap) {
    const std::size_t dim = layout.total_dimension();
    check_cap(dim, cap);
    ComplexMatrix x = ComplexMatrix::Zero(idx(dim), idx(dim));
    for (unsigned q = 0; q < layout.nuclear_qubits(); ++q) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t i = 0; i < dim; ++i)
            x(idx(i), idx(i ^ bit)) += 1.0;
    }
    return x;
}

ComplexMatrix dense_hamiltonian(const RegisterLayout& layout, std::span<const double> potential,
                                double transverse_weight, std::size_t cap) {
    const std::size_t dim = layout.total_dimension();
    check_cap(dim, cap);
    if (potential.size() != dim)
        throw ConfigError("potential diagonal does not match the register dimension");
    if (transverse_weight != 0.0 && layout.nuclear_qubits() == 0)
        throw ConfigError("transverse field requires a nuclear register");
    ComplexMatrix h = kinetic_matrix(layout, cap);
    for (std::size_t i = 0; i < dim; ++i)
        h(idx(i), idx(i)) += potential[i];
    if (transverse_weight != 0.0)
        h -= transverse_weight * transverse_matrix(layout, cap);
    return h;
}

SpectrumSlice eig_hermitian(const ComplexMatrix& h, double schedule_value) {
    if (h.rows() != h.cols() || h.rows() == 0)
        throw ConfigError("Hamiltonian must be a non-empty square matrix");
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw NumericalError("matrix is not Hermitian");

    SpectrumSlice slice;
    slice.schedule_value = schedule_value;
    if (h.imag().cwiseAbs().maxCoeff() <= 1e-14 * scale) {
        const Eigen::MatrixXd real = h.real();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(real);
        if (solver.info() != Eigen::Success)
            throw NumericalError("eigensolver failed to converge");
        slice.eigenvalues = solver.eigenvalues();
        slice.eigenvectors = solver.eigenvectors().cast<std::complex<double>>();
    } else {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
        if (solver.info() != Eigen::Success)
            throw NumericalError("eigensolver failed to converge");
        slice.eigenvalues = solver.eigenvalues();
        slice.eigenvectors = solver.eigenvectors();
    }
    return slice;
}

namespace {

double indicator_from_column(const SpectrumSlice& slice, const Eigen::VectorXcd& v_ground,
                             double gap_floor, double degeneracy_tol) {
    const auto n = slice.eigenvalues.size();
    if (n < 2)
        return 0.0;
    if (slice.gap(1) <= gap_floor)
        throw DegenerateSpectrumError("ground state gap " + std::to_string(slice.gap(1)) +
                                      " below floor at A=" + std::to_string(slice.schedule_value));
    const Eigen::VectorXcd elements = slice.eigenvectors.adjoint() * v_ground;
    double best = 0.0;
    Eigen::Index j = 1;
    while (j < n) {
        Eigen::Index end = j + 1;
        while (end < n && slice.eigenvalues[end] - slice.eigenvalues[j] <= degeneracy_tol)
            ++end;
        const double gap = slice.eigenvalues[j] - slice.eigenvalues[0];
        best = std::max(best, elements.segment(j, end - j).norm() / (gap * gap));
        j = end;
    }
    return best;
}

} // namespace

double adiabatic_indicator_f(const SpectrumSlice& slice, const ComplexMatrix& v, double gap_floor,
                             double degeneracy_tol) {
    if (v.rows() != slice.eigenvectors.rows() || v.cols() != v.rows())
        throw ConfigError("operator dimension does not match the spectrum");
    return indicator_from_column(slice, v * slice.eigenvectors.col(0), gap_floor, degeneracy_tol);
}

double adiabatic_indicator_f(const SpectrumSlice& slice, std::span<const double> v_diagonal,
                             double gap_floor, double degeneracy_tol) {
    if (idx(v_diagonal.size()) != slice.eigenvectors.rows())
        throw ConfigError("operator dimension does not match the spectrum");
    const Eigen::Map<const Eigen::VectorXd> d(v_diagonal.data(), idx(v_diagonal.size()));
    const Eigen::VectorXcd vg = d.cast<std::complex<double>>().cwiseProduct(slice.eigenvectors.col(0));
    return indicator_from_column(slice, vg, gap_floor, degeneracy_tol);
}

GroundSpace ground_state(const SpectrumSlice& slice, const RegisterLayout& layout,
                         double degeneracy_tol) {
    if (slice.eigenvectors.rows() != idx(layout.total_dimension()))
        throw ConfigError("spectrum does not match the register layout");
    GroundSpace space;
    space.energy = slice.eigenvalues[0];
    for (Eigen::Index j = 0; j < slice.eigenvalues.size(); ++j) {
        if (j > 0 && slice.eigenvalues[j] - slice.eigenvalues[0] > degeneracy_tol)
            break;
        const auto col = slice.eigenvectors.col(j);
        std::vector<Amplitude> amps(col.data(), col.data() + col.size());
        space.basis.emplace_back(layout, std::move(amps), true);
    }
    return space;
}

void apply_spectral_propagator(const SpectrumSlice& slice, double tau, StateVector& state) {
    if (idx(state.size()) != slice.eigenvectors.rows())
        throw ConfigError("state does not match the spectrum");
    Eigen::Map<Eigen::VectorXcd> psi(state.amplitudes().data(), idx(state.size()));
    Eigen::VectorXcd coeffs = slice.eigenvectors.adjoint() * psi;
    for (Eigen::Index j = 0; j < coeffs.size(); ++j)
        coeffs[j] *= std::polar(1.0, -slice.eigenvalues[j] * tau);
    psi = slice.eigenvectors * coeffs;
}

HamiltonianPath::HamiltonianPath(RegisterLayout layout, std::vector<double> initial_potential,
                                 std::vector<double> final_potential, double transverse_strength,
                                 std::size_t cap)
    : layout_(std::move(layout)), initial_(std::move(initial_potential)),
      final_(std::move(final_potential)), transverse_strength_(transverse_strength),
      kinetic_(kinetic_matrix(layout_, cap)) {
    const std::size_t dim = layout_.total_dimension();
    if (initial_.empty())
        initial_.assign(dim, 0.0);
    if (initial_.size() != dim || final_.size() != dim)
        throw ConfigError("path potentials do not match the register dimension");
    if (transverse_strength_ < 0.0)
        throw ConfigError("transverse strength must be non-negative");
    if (transverse_strength_ != 0.0) {
        if (layout_.nuclear_qubits() == 0)
            throw ConfigError("transverse field requires a nuclear register");
        transverse_ = transverse_matrix(layout_, cap);
    }
}

ComplexMatrix HamiltonianPath::at(double a) const {
    ComplexMatrix h = kinetic_;
    for (std::size_t i = 0; i < initial_.size(); ++i)
        h(idx(i), idx(i)) += (1.0 - a) * initial_[i] + a * final_[i];
    if (transverse_strength_ != 0.0)
        h -= (1.0 - a) * transverse_strength_ * transverse_;
    return h;
}

ComplexMatrix HamiltonianPath::derivative() const {
    const auto dim = idx(final_.size());
    ComplexMatrix v = ComplexMatrix::Zero(dim, dim);
    for (std::size_t i = 0; i < final_.size(); ++i)
        v(idx(i), idx(i)) = final_[i] - initial_[i];
    if (transverse_strength_ != 0.0)
        v += transverse_strength_ * transverse_;
    return v;
}

std::vector<IndicatorSample> indicator_table(const HamiltonianPath& path, std::size_t points,
                                             const SpectrumOptions& options) {
    if (points < 2)
        throw ConfigError("indicator grid needs at least two points");
    check_cap(path.layout().total_dimension(), options.dimension_cap);
    const ComplexMatrix v = path.derivative();
    std::vector<IndicatorSample> table(points);
    const auto count = static_cast<std::int64_t>(points);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const double a = static_cast<double>(i) / static_cast<double>(points - 1);
        try {
            const SpectrumSlice slice = path.slice(a);
            const double f = adiabatic_indicator_f(slice, v, options.gap_floor, options.degeneracy_tol);
            table[static_cast<std::size_t>(i)] = {a, f, slice.gap(1), slice.eigenvalues[0],
                                                  slice.eigenvalues[1]};
        } catch (...) {
#pragma omp critical(ate_indicator_error)
            failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return table;
}

} // namespace ate
