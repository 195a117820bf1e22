#include "ate/driver.hpp"

#include "ate/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <string>

namespace ate {

namespace {

constexpr double kOverflowProbability = 10.0;

void guard(const StateVector& state, std::size_t step) {
    if (!(state.max_probability() <= kOverflowProbability))
        throw NumericalError("amplitude overflow at step " + std::to_string(step));
}

Checkpoint record(const StateVector& state, std::size_t step, double dt, const GroundSpace* target) {
    guard(state, step);
    Checkpoint cp;
    cp.step = step;
    cp.time = dt * static_cast<double>(step);
    cp.norm = state.norm();
    if (target)
        cp.infidelity = infidelity(state, *target);
    if (state.layout().nuclear_qubits() > 0)
        cp.weights = state.nuclear_weights();
    return cp;
}

AteResult evolve(const AteRun& run, StateVector state, const GroundSpace* target, bool transverse) {
    if (!(state.layout() == run.layout))
        throw ConfigError("initial state does not match the run layout");
    if (!(run.dt > 0.0) || !std::isfinite(run.dt))
        throw ConfigError("dt must be positive and finite");
    for (const auto& term : run.terms) {
        validate_slot(term.kind, term.slot);
        if (term.diagonal.size() != run.layout.total_dimension())
            throw ConfigError("potential term built on a different layout");
    }

    std::vector<std::size_t> marks = run.checkpoints.empty() ? log_checkpoints(run.steps) : run.checkpoints;
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    std::erase_if(marks, [&](std::size_t m) { return m > run.steps; });
    if (marks.empty() || marks.back() != run.steps)
        marks.push_back(run.steps);

    AteResult result{std::move(state), {}};
    StateVector& psi = result.state;
    std::size_t next_mark = 0;
    if (marks.front() == 0) {
        result.checkpoints.push_back(record(psi, 0, run.dt, target));
        ++next_mark;
    }

    std::vector<double> diag(run.layout.total_dimension());
    const double n = static_cast<double>(run.steps);
    for (std::size_t m = 1; m <= run.steps; ++m) {
        const double s = static_cast<double>(m) / n;
        const SlotValues values = run.schedules.at(s);
        assemble_diagonal_into(diag, run.terms, values);
        const double transverse_weight = transverse ? (1.0 - values[Slot::A6]) * run.transverse_strength : 0.0;
        if (run.mode == StepMode::Exact) {
            const SpectrumSlice slice =
                eig_hermitian(dense_hamiltonian(run.layout, diag, transverse_weight), s);
            apply_spectral_propagator(slice, run.dt, psi);
        } else {
            psi.apply_diagonal_phase(diag, run.dt);
            if (transverse)
                psi.rotate_nuclear_x(-2.0 * run.dt * transverse_weight);
            psi.kinetic_step(run.dt);
        }
        while (next_mark < marks.size() && marks[next_mark] == m) {
            result.checkpoints.push_back(record(psi, m, run.dt, target));
            ++next_mark;
        }
    }
    return result;
}

} // namespace

std::vector<std::size_t> log_checkpoints(std::size_t steps, std::size_t per_decade) {
    std::vector<std::size_t> marks;
    if (steps == 0)
        return {0};
    const double decades = std::log10(static_cast<double>(steps));
    const auto count = static_cast<std::size_t>(std::ceil(decades * static_cast<double>(per_decade)));
    for (std::size_t i = 0; i <= count; ++i) {
        const double v = std::pow(10.0, static_cast<double>(i) / static_cast<double>(per_decade));
        const auto m = static_cast<std::size_t>(std::llround(v));
        if (m <= steps && (marks.empty() || marks.back() != m))
            marks.push_back(m);
    }
    if (marks.back() != steps)
        marks.push_back(steps);
    return marks;
}

AteResult evolve_electronic(const AteRun& run, StateVector initial, const GroundSpace* target) {
    if (run.transverse_strength != 0.0)
        throw ConfigError("the electronic circuit has no transverse field; use the structure search");
    return evolve(run, std::move(initial), target, false);
}

AteResult evolve_structopt(const AteRun& run, StateVector initial, const GroundSpace* target) {
    if (run.layout.nuclear_qubits() == 0)
        throw ConfigError("structure search requires a nuclear register");
    if (run.transverse_strength < 0.0)
        throw ConfigError("transverse strength must be non-negative");
    return evolve(run, std::move(initial), target, true);
}

double infidelity(const StateVector& state, const GroundSpace& target) {
    double captured = 0.0;
    for (const auto& v : target.basis)
        captured += fidelity(v, state);
    return std::clamp(1.0 - captured, 0.0, 1.0);
}

std::vector<SweepRow> sweep_over_N(const SweepSpec& spec, std::span<const std::size_t> n_list, int jobs) {
    if (!std::is_sorted(n_list.begin(), n_list.end()))
        throw ConfigError("sweep step counts must be ascending");
    std::vector<SweepRow> rows(n_list.size());
    const GroundSpace* target = spec.target ? &*spec.target : nullptr;
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(n_list.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1))
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            AteRun run = spec.base;
            run.steps = n_list[static_cast<std::size_t>(i)];
            run.checkpoints = {run.steps};
            const AteResult result = spec.structure_search ? evolve_structopt(run, spec.initial, target)
                                                           : evolve_electronic(run, spec.initial, target);
            const Checkpoint& last = result.checkpoints.back();
            rows[static_cast<std::size_t>(i)] = {run.steps, run.final_time(), last.infidelity, last.weights};
        } catch (...) {
#pragma omp critical(ate_sweep_error)
            failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

} // namespace ate
