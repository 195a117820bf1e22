#include "ate/experiment.hpp"

#include "ate/errors.hpp"
#include "ate/initial_state.hpp"
#include "ate/kernels.hpp"
#include "ate/potentials.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <random>
#include <sstream>

namespace ate {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::vector<double> zeros(const RegisterLayout& layout) { return std::vector<double>(layout.total_dimension(), 0.0); }

void accumulate(std::vector<double>& into, const std::vector<double>& term) {
    for (std::size_t i = 0; i < into.size(); ++i)
        into[i] += term[i];
}

std::vector<double> harmonic_one_body(const RegisterLayout& layout, std::span<const double> omegas) {
    const GridSpec& g = layout.grid();
    std::vector<std::vector<double>> per_axis;
    for (double w : omegas)
        per_axis.push_back(harmonic_1d(g, w, g.length() / 2.0));
    return one_body_diagonal(layout, per_axis);
}

std::string hash_hex(const RunConfig& config) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, config.hash(), 16);
    (void)ec;
    return std::string(buf, end);
}

std::string hash_line(const RunConfig& config) { return "# config_hash=" + hash_hex(config) + "\n"; }

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write " + path.string());
    return out;
}

Schedule run_schedule(const Problem& problem, const std::optional<SpectrumData>& spectrum) {
    if (problem.config.schedule == ScheduleChoice::Linear)
        return Schedule::linear();
    if (!spectrum)
        throw DimensionCapError("the optimal schedule needs the dense oracle, which exceeds dimension_cap");
    return spectrum->optimal;
}

struct Sweep {
    std::vector<SweepRow> rows;
    std::optional<SpectrumData> spectrum;
};

Sweep sweep(const Problem& problem, bool structure_search, int jobs) {
    Sweep result;
    std::optional<GroundSpace> target;
    if (problem.oracle_fits()) {
        result.spectrum = compute_spectrum(problem);
        const HamiltonianPath path = problem.path();
        target = ground_state(path.slice(1.0), problem.layout);
    }
    AteRun run{problem.layout,
               SlotSchedules(run_schedule(problem, result.spectrum)),
               problem.config.dt,
               0,
               problem.terms,
               structure_search ? problem.config.transverse : 0.0,
               {},
               problem.config.step_mode};
    SweepSpec spec{std::move(run), problem.initial_state, std::move(target), structure_search};
    result.rows = sweep_over_N(spec, problem.config.steps, jobs);
    return result;
}

void fill_spectrum_summary(Summary& summary, const std::optional<SpectrumData>& spectrum) {
    if (spectrum) {
        summary.c = spectrum->c;
        summary.f_max = spectrum->f_max;
    }
}

} // namespace

HamiltonianPath Problem::path() const {
    return HamiltonianPath(layout, initial_potential, final_potential, config.transverse, config.dimension_cap);
}

Problem build_problem(const RunConfig& config) {
    const GridSpec grid(config.length, config.qubits, config.mass);
    switch (config.problem) {
    case ProblemKind::Parabolic: {
        RegisterLayout layout(grid, config.electrons, config.dimension, 0);
        std::vector<double> ext = harmonic_one_body(layout, config.omega);
        std::vector<PotentialTerm> terms{make_term(TermKind::ExternalOneBody, ext)};
        if (config.electrons > 1)
            throw ConfigError("field 'electrons': the parabolic problem is single-electron; use 'custom'");
        StateVector initial = uniform_state(layout);
        return Problem{config, layout, std::move(terms), zeros(layout), std::move(ext), std::move(initial), {}};
    }
    case ProblemKind::H2Plus: {
        NuclearConfigSet configs(grid, config.bond_lengths, config.nuclear_qubits, config.softening);
        RegisterLayout layout = configs.layout();
        std::vector<double> en = coupled_en_diagonal(configs, layout);
        std::vector<double> nn = coupled_nn_diagonal(configs, layout);
        std::vector<double> fin = en;
        accumulate(fin, nn);
        std::vector<PotentialTerm> terms{make_term(TermKind::ElectronNucleus, std::move(en)),
                                         make_term(TermKind::NucleusNucleus, std::move(nn))};
        StateVector initial = initial_product_state(uniform_state(configs.layout().with_nuclear_qubits(0)),
                                                    config.nuclear_qubits);
        return Problem{config, layout, std::move(terms), zeros(layout), std::move(fin), std::move(initial),
                       std::move(configs)};
    }
    case ProblemKind::Custom: {
        RegisterLayout layout(grid, config.electrons, config.dimension, 0);
        std::vector<PotentialTerm> terms;
        std::vector<double> fin = zeros(layout);
        std::vector<double> init = zeros(layout);
        if (!config.omega.empty()) {
            std::vector<double> ext = harmonic_one_body(layout, config.omega);
            accumulate(fin, ext);
            terms.push_back(make_term(TermKind::ExternalOneBody, std::move(ext)));
        }
        if (config.interaction && config.electrons > 1) {
            std::vector<double> ee = pair_interaction_diagonal(layout, config.interaction->charge_product,
                                                               config.interaction->softening);
            accumulate(fin, ee);
            terms.push_back(make_term(TermKind::ElectronElectron, std::move(ee)));
        }
        std::optional<StateVector> initial;
        if (!config.v0_omega.empty()) {
            std::vector<double> v0 = harmonic_one_body(layout, config.v0_omega);
            accumulate(init, v0);
            terms.push_back(make_term(TermKind::InitialV0, std::move(v0)));
            initial = slater_state(harmonic_orbitals(grid, config.v0_omega, config.electrons), layout);
        } else {
            initial = uniform_state(layout);
        }
        return Problem{config, layout, std::move(terms), std::move(init), std::move(fin), std::move(*initial), {}};
    }
    }
    throw ConfigError("unknown problem kind");
}

SpectrumData compute_spectrum(const Problem& problem) {
    if (!problem.oracle_fits())
        throw DimensionCapError("dense oracle dimension " + std::to_string(problem.layout.total_dimension()) +
                                " exceeds dimension_cap " + std::to_string(problem.config.dimension_cap));
    SpectrumOptions options;
    options.dimension_cap = problem.config.dimension_cap;
    SpectrumData data;
    data.samples = indicator_table(problem.path(), problem.config.indicator_points, options);
    std::vector<double> a, f;
    for (const auto& s : data.samples) {
        a.push_back(s.a);
        f.push_back(s.f);
    }
    data.f_max = *std::max_element(f.begin(), f.end());
    data.optimal = optimal_schedule(a, f);
    data.c = *data.optimal.constant();
    return data;
}

std::string format_number(double value) {
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    (void)ec;
    return std::string(buf, end);
}

fs::path write_spectrum(const Problem& problem, const SpectrumData& spectrum, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    const fs::path path = out_dir / "spectrum.csv";
    std::ofstream out = open_output(path);
    out << hash_line(problem.config) << "A,f,gap1,eps0,eps1\n";
    for (const auto& s : spectrum.samples)
        out << format_number(s.a) << ',' << format_number(s.f) << ',' << format_number(s.gap1) << ','
            << format_number(s.e0) << ',' << format_number(s.e1) << '\n';
    return path;
}

fs::path write_schedule(const Problem& problem, const SpectrumData& spectrum, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    const fs::path path = out_dir / "schedule.csv";
    std::ofstream out = open_output(path);
    out << hash_line(problem.config) << "# c=" << format_number(spectrum.c) << '\n' << "s,A_lin,A_opt\n";
    const std::size_t points = problem.config.indicator_points;
    for (std::size_t i = 0; i < points; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(points - 1);
        out << format_number(s) << ',' << format_number(s) << ',' << format_number(spectrum.optimal(s)) << '\n';
    }
    return path;
}

void write_summary(const Problem& problem, const Summary& summary, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
    json j;
    j["problem"] = to_string(problem.config.problem);
    j["config_hash"] = hash_hex(problem.config);
    j["c"] = opt(summary.c);
    j["f_max"] = opt(summary.f_max);
    j["final_delta"] = opt(summary.final_delta);
    j["J_star"] = opt(summary.j_star);
    std::ofstream out = open_output(out_dir / "summary.json");
    out << j.dump(2) << '\n';
}

Summary run_ate(const Problem& problem, const fs::path& out_dir, int jobs) {
    Sweep result = sweep(problem, false, jobs);
    fs::create_directories(out_dir);
    std::ofstream out = open_output(out_dir / "ate_run.csv");
    out << hash_line(problem.config) << "N,t_f,delta_N\n";
    for (const auto& row : result.rows)
        out << row.steps << ',' << format_number(row.final_time) << ','
            << (row.infidelity ? format_number(*row.infidelity) : "") << '\n';
    Summary summary;
    fill_spectrum_summary(summary, result.spectrum);
    if (!result.rows.empty())
        summary.final_delta = result.rows.back().infidelity;
    write_summary(problem, summary, out_dir);
    return summary;
}

Summary run_structopt(const Problem& problem, const fs::path& out_dir, int jobs) {
    if (!problem.nuclear)
        throw ConfigError("field 'problem': structure search needs a problem with a nuclear register");
    Sweep result = sweep(problem, true, jobs);
    const std::size_t k = problem.nuclear->size();
    const RunConfig& cfg = problem.config;
    fs::create_directories(out_dir);
    std::ofstream out = open_output(out_dir / "structopt.csv");
    out << hash_line(cfg) << "N";
    for (std::size_t j = 0; j < k; ++j)
        out << ",w_" << j;
    out << ",J_star,delta_N";
    if (cfg.shots > 0)
        for (std::size_t j = 0; j < k; ++j)
            out << ",count_" << j;
    out << '\n';
    Summary summary;
    fill_spectrum_summary(summary, result.spectrum);
    for (std::size_t r = 0; r < result.rows.size(); ++r) {
        const SweepRow& row = result.rows[r];
        const auto best = static_cast<std::size_t>(
            std::max_element(row.weights.begin(), row.weights.begin() + static_cast<std::ptrdiff_t>(k)) -
            row.weights.begin());
        out << row.steps;
        for (std::size_t j = 0; j < k; ++j)
            out << ',' << format_number(row.weights[j]);
        out << ',' << best << ',' << (row.infidelity ? format_number(*row.infidelity) : "");
        if (cfg.shots > 0) {
            const auto counts = sample_configurations(row.weights, cfg.shots, cfg.seed + r);
            for (std::size_t j = 0; j < k; ++j)
                out << ',' << counts[j];
        }
        out << '\n';
        summary.j_star = best;
        summary.final_delta = row.infidelity;
    }
    write_summary(problem, summary, out_dir);
    return summary;
}

bool run_invariant_checks(std::ostream& out) {
    bool all = true;
    auto report = [&](const std::string& name, bool ok, double value) {
        out << (ok ? "PASS " : "FAIL ") << name << " (" << format_number(value) << ")\n";
        all = all && ok;
    };
    std::mt19937_64 rng(7);
    std::normal_distribution<double> normal;
    auto random_state = [&](const RegisterLayout& layout) {
        std::vector<Amplitude> amps(layout.total_dimension());
        for (auto& a : amps)
            a = {normal(rng), normal(rng)};
        return StateVector(layout, std::move(amps), true);
    };

    const GridSpec grid(10.0, 4);
    const RegisterLayout one(grid, 1, 1, 0);

    {
        std::vector<PotentialTerm> terms{make_term(TermKind::ExternalOneBody, harmonic_one_body(one, std::vector{1.0}))};
        AteRun run{one, SlotSchedules(Schedule::linear()), 0.1, 1000, terms, 0.0, {1000}, StepMode::Trotter};
        const AteResult r = evolve_electronic(run, random_state(one));
        const double drift = std::abs(r.state.norm() - 1.0);
        report("norm conserved over 1000 steps", drift <= 1e-8, drift);
    }
    {
        StateVector a = random_state(one);
        StateVector b = a;
        a.kinetic_step(0.3);
        apply_spectral_propagator(eig_hermitian(kinetic_matrix(one)), 0.3, b);
        const double err = 1.0 - fidelity(a, b);
        report("split kinetic step matches dense kinetic operator", std::abs(err) <= 1e-10, err);
    }
    {
        const HamiltonianPath path(one, zeros(one), harmonic_one_body(one, std::vector{1.0}));
        const GroundSpace g = ground_state(path.slice(0.0), one);
        const double err = 1.0 - fidelity(uniform_state(one), g.state());
        report("uniform state is the A=0 ground state", std::abs(err) <= 1e-10, err);
    }
    {
        NuclearConfigSet configs(GridSpec(15.0, 4), {2.0, 4.0, 6.0}, 2);
        const RegisterLayout layout = configs.layout();
        std::vector<Amplitude> amps(layout.total_dimension());
        for (auto& a : amps)
            a = {normal(rng), normal(rng)};
        StateVector psi(layout, std::move(amps), true);
        const std::vector<double> before = psi.nuclear_weights();
        std::vector<PotentialTerm> terms{make_term(TermKind::ElectronNucleus, coupled_en_diagonal(configs, layout)),
                                         make_term(TermKind::NucleusNucleus, coupled_nn_diagonal(configs, layout))};
        AteRun run{layout, SlotSchedules(Schedule::linear()), 0.1, 200, terms, 0.0, {200}, StepMode::Trotter};
        const AteResult r = evolve_structopt(run, psi);
        double worst = 0.0;
        for (std::size_t j = 0; j < before.size(); ++j)
            worst = std::max(worst, std::abs(r.state.nuclear_weights()[j] - before[j]));
        report("nuclear weights conserved without transverse field", worst <= 1e-10, worst);
    }
    {
        const GridSpec small(10.0, 3);
        const RegisterLayout two(small, 2, 1, 0);
        const std::vector<double> w{1.0};
        const StateVector psi0 = slater_state(harmonic_orbitals(small, w, 2), two);
        std::vector<PotentialTerm> terms{make_term(TermKind::ExternalOneBody, harmonic_one_body(two, std::vector{0.7})),
                                         make_term(TermKind::ElectronElectron, pair_interaction_diagonal(two, 1.0)),
                                         make_term(TermKind::InitialV0, harmonic_one_body(two, w))};
        AteRun run{two, SlotSchedules(Schedule::linear()), 0.1, 100, terms, 0.0, {100}, StepMode::Trotter};
        const AteResult r = evolve_electronic(run, psi0);
        StateVector swapped = r.state;
        swapped.swap_electrons(0, 1);
        const double overlap = inner_product(swapped, r.state).real();
        report("two-electron state stays antisymmetric", std::abs(overlap + 1.0) <= 1e-8, overlap);
    }
    {
        const InjectivityReport good = epsilon_injectivity_check(20, {1, 2, 3});
        const InjectivityReport bad = epsilon_injectivity_check(20, {1, 1, 1});
        report("harmonic levels injective for (1, sqrt2, sqrt3) and not for (1, 1, 1)",
               good.injective && !bad.injective && !bad.witnesses.empty(),
               static_cast<double>(bad.violation_count));
    }
    {
        const RegisterLayout big(GridSpec(10.0, 7), 2, 1, 0);
        StateVector a = random_state(big);
        std::vector<Amplitude> s(a.amplitudes().begin(), a.amplitudes().end());
        std::vector<Amplitude> p = s;
        const FftPlan plan(big.grid().points());
        for (unsigned axis = 0; axis < 2; ++axis) {
            const kernels::AxisGeometry geo{big.grid().points(), big.axis_stride(axis, 0), big.total_dimension()};
            kernels::serial::centered_transform(s, geo, plan, false);
            kernels::omp::centered_transform(p, geo, plan, false);
        }
        double diff = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i)
            diff = std::max(diff, std::abs(s[i] - p[i]));
        report("serial and parallel kernels agree", diff <= 1e-12, diff);
    }
    return all;
}

} // namespace ate
