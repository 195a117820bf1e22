#include "ate/initial_state.hpp"

#include "ate/errors.hpp"
#include "ate/potentials.hpp"
#include "ate/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace ate {

StateVector uniform_state(const RegisterLayout& layout) {
    const std::size_t dim = layout.total_dimension();
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    return StateVector(layout, std::vector<Amplitude>(dim, Amplitude{amp, 0.0}));
}

namespace {

struct AxisLevels {
    std::vector<double> energies;
    std::vector<std::vector<double>> functions;
};

AxisLevels axis_levels(const GridSpec& grid, double omega, std::size_t levels) {
    const Eigen::MatrixXd t = kinetic_matrix_1d(grid).real();
    const std::vector<double> v = harmonic_1d(grid, omega, grid.length() / 2.0);
    Eigen::MatrixXd h = t;
    for (std::size_t k = 0; k < v.size(); ++k)
        h(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) += v[k];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success)
        throw NumericalError("orbital eigensolver failed");
    AxisLevels out;
    for (std::size_t n = 0; n < levels; ++n) {
        const auto col = solver.eigenvectors().col(static_cast<Eigen::Index>(n));
        std::vector<double> phi(col.data(), col.data() + col.size());
        // Fix the sign: largest-magnitude entry positive.
        const auto peak = std::max_element(phi.begin(), phi.end(),
                                           [](double a, double b) { return std::abs(a) < std::abs(b); });
        if (*peak < 0.0)
            for (auto& p : phi)
                p = -p;
        out.energies.push_back(solver.eigenvalues()[static_cast<Eigen::Index>(n)]);
        out.functions.push_back(std::move(phi));
    }
    return out;
}

} // namespace

OrbitalSet harmonic_orbitals(const GridSpec& grid, std::span<const double> omegas, std::size_t count) {
    if (omegas.size() != 1 && omegas.size() != 3)
        throw ConfigError("harmonic orbitals need one or three frequencies");
    const unsigned d = static_cast<unsigned>(omegas.size());
    const std::size_t per_axis = grid.points() / 4;
    std::size_t available = 1;
    for (unsigned a = 0; a < d; ++a)
        available *= per_axis;
    if (count == 0 || count > available)
        throw ConfigError("requested " + std::to_string(count) + " orbitals but the grid resolves only " +
                          std::to_string(available));

    std::vector<AxisLevels> axes;
    for (double w : omegas)
        axes.push_back(axis_levels(grid, w, std::min(per_axis, count)));
    const std::size_t levels = axes.front().energies.size();

    struct Candidate {
        double energy;
        std::array<unsigned, 3> n;
    };
    std::vector<Candidate> candidates;
    if (d == 1) {
        for (unsigned i = 0; i < levels; ++i)
            candidates.push_back({axes[0].energies[i], {i, 0, 0}});
    } else {
        for (unsigned i = 0; i < levels; ++i)
            for (unsigned j = 0; j < levels; ++j)
                for (unsigned k = 0; k < levels; ++k)
                    candidates.push_back(
                        {axes[0].energies[i] + axes[1].energies[j] + axes[2].energies[k], {i, j, k}});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.energy < b.energy; });

    OrbitalSet set{grid, d, {}, {}, {}};
    const std::size_t n = grid.points();
    for (std::size_t c = 0; c < count; ++c) {
        const auto& cand = candidates[c];
        set.quantum_numbers.push_back(cand.n);
        set.energies.push_back(cand.energy);
        if (d == 1) {
            set.orbitals.push_back(axes[0].functions[cand.n[0]]);
            continue;
        }
        const auto& fx = axes[0].functions[cand.n[0]];
        const auto& fy = axes[1].functions[cand.n[1]];
        const auto& fz = axes[2].functions[cand.n[2]];
        std::vector<double> phi(n * n * n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    phi[(x * n + y) * n + z] = fx[x] * fy[y] * fz[z];
        set.orbitals.push_back(std::move(phi));
    }
    return set;
}

StateVector slater_state(const OrbitalSet& orbitals, const RegisterLayout& layout) {
    const unsigned ne = layout.electrons();
    const unsigned d = layout.dimension();
    if (layout.nuclear_qubits() != 0)
        throw ConfigError("Slater state is built on the electronic register only");
    if (!(layout.grid() == orbitals.grid) || d != orbitals.dimension)
        throw ConfigError("orbital grid does not match the register layout");
    if (ne > orbitals.orbitals.size())
        throw ConfigError("not enough orbitals for " + std::to_string(ne) + " electrons");

    for (unsigned a = 0; a < ne; ++a)
        for (unsigned b = 0; b <= a; ++b) {
            const auto& pa = orbitals.orbitals[a];
            const auto& pb = orbitals.orbitals[b];
            const double overlap = std::inner_product(pa.begin(), pa.end(), pb.begin(), 0.0);
            if (std::abs(overlap - (a == b ? 1.0 : 0.0)) > 1e-8)
                throw ConfigError("orbitals are not orthonormal");
        }

    std::vector<unsigned> perm(ne);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::pair<std::vector<unsigned>, double>> permutations;
    do {
        int inversions = 0;
        for (unsigned i = 0; i < ne; ++i)
            for (unsigned j = i + 1; j < ne; ++j)
                inversions += perm[i] > perm[j] ? 1 : 0;
        permutations.emplace_back(perm, inversions % 2 ? -1.0 : 1.0);
    } while (std::next_permutation(perm.begin(), perm.end()));

    const std::size_t n = layout.grid().points();
    const double norm = 1.0 / std::sqrt(static_cast<double>(permutations.size()));
    std::vector<Amplitude> amps(layout.total_dimension());
    std::vector<std::size_t> coords(layout.axis_count());
    std::vector<std::size_t> site(ne);
    for (std::size_t x = 0; x < amps.size(); ++x) {
        layout.unflatten(x, coords);
        for (unsigned l = 0; l < ne; ++l) {
            std::size_t r = 0;
            for (unsigned ax = 0; ax < d; ++ax)
                r = r * n + coords[l * d + ax];
            site[l] = r;
        }
        double sum = 0.0;
        for (const auto& [p, sign] : permutations) {
            double term = sign;
            for (unsigned l = 0; l < ne; ++l)
                term *= orbitals.orbitals[p[l]][site[l]];
            sum += term;
        }
        amps[x] = sum * norm;
    }
    return StateVector(layout, std::move(amps), true);
}

namespace {

// q = r^2 f with f square-free.
std::pair<long long, long long> split_square_free(unsigned q) {
    long long r = 1;
    long long f = q;
    for (long long p = 2; p * p <= f; ++p)
        while (f % (p * p) == 0) {
            f /= p * p;
            r *= p;
        }
    return {r, f};
}

} // namespace

InjectivityReport epsilon_injectivity_check(unsigned n_max, std::array<unsigned, 3> squared_frequencies) {
    if (n_max < 1)
        throw ConfigError("n_max must be at least 1");
    std::array<long long, 3> radical{};
    std::array<long long, 3> free_part{};
    std::vector<long long> bases;
    for (std::size_t mu = 0; mu < 3; ++mu) {
        if (squared_frequencies[mu] == 0)
            throw ConfigError("frequencies must be positive");
        std::tie(radical[mu], free_part[mu]) = split_square_free(squared_frequencies[mu]);
        if (std::find(bases.begin(), bases.end(), free_part[mu]) == bases.end())
            bases.push_back(free_part[mu]);
    }

    // The common 1/2 offsets cancel in any difference and are left out of the key.
    std::map<std::vector<long long>, std::vector<std::array<int, 3>>> groups;
    const int top = static_cast<int>(n_max);
    for (int nx = 0; nx <= top; ++nx)
        for (int ny = 0; ny <= top; ++ny)
            for (int nz = 0; nz <= top; ++nz) {
                const std::array<int, 3> n{nx, ny, nz};
                std::vector<long long> key(bases.size(), 0);
                for (std::size_t mu = 0; mu < 3; ++mu) {
                    const auto b = static_cast<std::size_t>(
                        std::find(bases.begin(), bases.end(), free_part[mu]) - bases.begin());
                    key[b] += radical[mu] * n[mu];
                }
                groups[key].push_back(n);
            }

    InjectivityReport report;
    for (const auto& [key, members] : groups) {
        if (members.size() < 2)
            continue;
        report.injective = false;
        report.violation_count += members.size() * (members.size() - 1) / 2;
        for (std::size_t i = 1; i < members.size() && report.witnesses.size() < 16; ++i)
            report.witnesses.emplace_back(members[0], members[i]);
    }
    return report;
}

StateVector initial_product_state(const StateVector& electron_state, unsigned nuclear_qubits) {
    if (nuclear_qubits == 0)
        return electron_state;
    if (electron_state.layout().nuclear_qubits() != 0)
        throw ConfigError("input already carries a nuclear register");
    if (std::abs(electron_state.norm() - 1.0) > 1e-10)
        throw ConfigError("electron state must be normalized");
    const RegisterLayout layout = electron_state.layout().with_nuclear_qubits(nuclear_qubits);
    const std::size_t nd = layout.nuclear_dimension();
    const double amp = 1.0 / std::sqrt(static_cast<double>(nd));
    std::vector<Amplitude> amps(layout.total_dimension());
    for (std::size_t e = 0; e < electron_state.size(); ++e)
        for (std::size_t j = 0; j < nd; ++j)
            amps[e * nd + j] = electron_state[e] * amp;
    return StateVector(layout, std::move(amps));
}

} // namespace ate
