#pragma once

#include "ate/config.hpp"
#include "ate/driver.hpp"
#include "ate/spectra.hpp"
#include "ate/structopt.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ate {

/// Everything a run needs, built once from a config.
struct Problem {
    RunConfig config;
    RegisterLayout layout;
    std::vector<PotentialTerm> terms;
    /// Diagonals of the A = 0 and A = 1 potentials for the dense oracle.
    std::vector<double> initial_potential;
    std::vector<double> final_potential;
    StateVector initial_state;
    std::optional<NuclearConfigSet> nuclear;

    bool oracle_fits() const noexcept { return layout.total_dimension() <= config.dimension_cap; }
    HamiltonianPath path() const;
};

Problem build_problem(const RunConfig& config);

struct SpectrumData {
    std::vector<IndicatorSample> samples;
    double f_max = 0.0;
    double c = 0.0;
    Schedule optimal = Schedule::linear();
};

/// Throws DimensionCapError when the dense oracle exceeds the cap.
SpectrumData compute_spectrum(const Problem& problem);

struct Summary {
    std::optional<double> c;
    std::optional<double> f_max;
    std::optional<double> final_delta;
    std::optional<std::size_t> j_star;
};

/// Shortest round-trip-free rendering with 12 significant digits, '.' decimal.
std::string format_number(double value);

/// Each writes its CSV into `out_dir` and returns the path.
std::filesystem::path write_spectrum(const Problem& problem, const SpectrumData& spectrum,
                                     const std::filesystem::path& out_dir);
std::filesystem::path write_schedule(const Problem& problem, const SpectrumData& spectrum,
                                     const std::filesystem::path& out_dir);
void write_summary(const Problem& problem, const Summary& summary, const std::filesystem::path& out_dir);

/// N sweep of the electronic circuit; writes ate_run.csv and summary.json.
Summary run_ate(const Problem& problem, const std::filesystem::path& out_dir, int jobs);
/// N sweep of the structure-search circuit; writes structopt.csv and summary.json.
Summary run_structopt(const Problem& problem, const std::filesystem::path& out_dir, int jobs);

/// Small-instance invariant suite; one line per check. Returns true when all pass.
bool run_invariant_checks(std::ostream& out);

} // namespace ate
