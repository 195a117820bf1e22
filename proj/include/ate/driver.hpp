#pragma once

#include "ate/potentials.hpp"
#include "ate/scheduling.hpp"
#include "ate/spectra.hpp"
#include "ate/statevector.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ate {

/// Trotter: phase, (rotation), kinetic per step. Exact: exp(-i H(t_m) dt) from
/// the dense spectrum of the instantaneous Hamiltonian, for separating the
/// splitting error from the finite-step error.
enum class StepMode { Trotter, Exact };

struct AteRun {
    RegisterLayout layout;
    SlotSchedules schedules;
    double dt = 0.1;
    std::size_t steps = 0;
    std::vector<PotentialTerm> terms;
    double transverse_strength = 0.0; // J_x
    /// Steps m at which observables are recorded; empty selects log spacing.
    std::vector<std::size_t> checkpoints;
    StepMode mode = StepMode::Trotter;

    double final_time() const noexcept { return dt * static_cast<double>(steps); }
};

struct Checkpoint {
    std::size_t step = 0;
    double time = 0.0;
    double norm = 1.0;
    std::optional<double> infidelity;
    std::vector<double> weights; // empty without a nuclear register
};

struct AteResult {
    StateVector state;
    std::vector<Checkpoint> checkpoints;
};

/// About `per_decade` logarithmically spaced steps in [1, steps], always including `steps`.
std::vector<std::size_t> log_checkpoints(std::size_t steps, std::size_t per_decade = 5);

/// prod_{m=N..1} exp(-i T dt) exp(-i V(t_m) dt) |initial>, with V(t_m) assembled
/// from the run's terms at s = m/N.
AteResult evolve_electronic(const AteRun& run, StateVector initial,
                            const GroundSpace* target = nullptr);

/// Structure-search circuit: per step the diagonal phases, then R_x(theta_m) on
/// every nuclear qubit with theta_m = -2 dt (1 - A6(t_m)) J_x, then the kinetic step.
AteResult evolve_structopt(const AteRun& run, StateVector initial,
                           const GroundSpace* target = nullptr);

/// 1 - Sum_v |<v|psi>|^2 over the target ground eigenspace basis.
double infidelity(const StateVector& state, const GroundSpace& target);

struct SweepSpec {
    AteRun base; // steps is overridden per sweep point
    StateVector initial;
    std::optional<GroundSpace> target;
    bool structure_search = false;
};

struct SweepRow {
    std::size_t steps = 0;
    double final_time = 0.0;
    std::optional<double> infidelity;
    std::vector<double> weights;
};

/// One independent evolution per N (schedules depend on s = t/t_f, so runs are
/// not prefixes of one another). Points run on `jobs` threads.
std::vector<SweepRow> sweep_over_N(const SweepSpec& spec, std::span<const std::size_t> n_list,
                                   int jobs = 1);

} // namespace ate
