#pragma once

#include "ate/grid.hpp"
#include "ate/statevector.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace ate {

using ComplexMatrix = Eigen::MatrixXcd;

struct SpectrumOptions {
    std::size_t dimension_cap = 4096;
    double gap_floor = 1e-8;      // hartree
    double degeneracy_tol = 1e-6; // hartree
};

/// Eigenpairs of one instantaneous Hamiltonian, eigenvalues ascending,
/// eigenvectors as orthonormal columns.
struct SpectrumSlice {
    double schedule_value = 0.0;
    Eigen::VectorXd eigenvalues;
    ComplexMatrix eigenvectors;

    double gap(std::size_t j) const { return eigenvalues[static_cast<Eigen::Index>(j)] - eigenvalues[0]; }
};

/// F^dagger diag(E_kin) F for one axis, F[s,k] = exp(-i p_s x_k)/sqrt(N),
/// evaluated by direct sums (independent of the FFT path).
ComplexMatrix kinetic_matrix_1d(const GridSpec& grid);
/// Full kinetic operator on the register; identity on the nuclear block.
ComplexMatrix kinetic_matrix(const RegisterLayout& layout, std::size_t cap = 4096);
/// Sum_l X_l on the nuclear qubits, identity on electrons.
ComplexMatrix transverse_matrix(const RegisterLayout& layout, std::size_t cap = 4096);

/// T + diag(potential) - transverse_weight * Sum_l X_l.
ComplexMatrix dense_hamiltonian(const RegisterLayout& layout, std::span<const double> potential,
                                double transverse_weight = 0.0, std::size_t cap = 4096);

/// Full spectrum of a Hermitian matrix. Real-symmetric input takes the real solver.
SpectrumSlice eig_hermitian(const ComplexMatrix& h, double schedule_value = 0.0);

/// max_{j>=1} |<j|V|0>| / (e_j - e_0)^2 over the full spectrum. Levels within
/// degeneracy_tol of each other count as one, with |<j|V|0>| replaced by the
/// norm of V|0> projected onto that eigenspace, so the result does not depend
/// on the eigensolver's choice of basis.
/// Throws DegenerateSpectrumError when e_1 - e_0 <= gap_floor.
double adiabatic_indicator_f(const SpectrumSlice& slice, const ComplexMatrix& v, double gap_floor = 1e-8,
                             double degeneracy_tol = 1e-6);
double adiabatic_indicator_f(const SpectrumSlice& slice, std::span<const double> v_diagonal,
                             double gap_floor = 1e-8, double degeneracy_tol = 1e-6);

/// Lowest eigenvector plus an orthonormal basis of every eigenvector within
/// `degeneracy_tol` of e_0.
struct GroundSpace {
    std::vector<StateVector> basis;
    double energy = 0.0;

    const StateVector& state() const { return basis.front(); }
    std::size_t dimension() const noexcept { return basis.size(); }
};

GroundSpace ground_state(const SpectrumSlice& slice, const RegisterLayout& layout,
                         double degeneracy_tol = 1e-6);

/// exp(-i H tau) psi via the spectral decomposition.
void apply_spectral_propagator(const SpectrumSlice& slice, double tau, StateVector& state);

/// Interpolating Hamiltonian with one shared schedule value:
/// H(A) = T + diag((1-A) initial + A final) - (1-A) J_x Sum_l X_l.
class HamiltonianPath {
  public:
    HamiltonianPath(RegisterLayout layout, std::vector<double> initial_potential,
                    std::vector<double> final_potential, double transverse_strength = 0.0,
                    std::size_t cap = 4096);

    const RegisterLayout& layout() const noexcept { return layout_; }
    ComplexMatrix at(double a) const;
    /// dH/dA = diag(final - initial) + J_x Sum_l X_l.
    ComplexMatrix derivative() const;
    SpectrumSlice slice(double a) const { return eig_hermitian(at(a), a); }

  private:
    RegisterLayout layout_;
    std::vector<double> initial_;
    std::vector<double> final_;
    double transverse_strength_;
    ComplexMatrix kinetic_;
    ComplexMatrix transverse_;
};

struct IndicatorSample {
    double a;
    double f;
    double gap1;
    double e0;
    double e1;
};

/// f(A) on a uniform grid of `points` values covering [0, 1]; slices are
/// diagonalized concurrently.
std::vector<IndicatorSample> indicator_table(const HamiltonianPath& path, std::size_t points,
                                             const SpectrumOptions& options = {});

} // namespace ate
