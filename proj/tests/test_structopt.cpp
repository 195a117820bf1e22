#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ate/driver.hpp"
#include "ate/errors.hpp"
#include "ate/initial_state.hpp"
#include "ate/structopt.hpp"
#include "support.hpp"

#include <numeric>

using namespace ate;

namespace {
const GridSpec kGrid(15.0, 6);
}

TEST_CASE("configuration set") {
    NuclearConfigSet configs(kGrid, {2.0, 4.0, 6.0, 8.0}, 2);
    CHECK(configs.size() == 4);
    CHECK(configs.layout().total_dimension() == 256);
    CHECK(configs.v_en(0)[32] == doctest::Approx(-1.41421).epsilon(1e-5));
    CHECK_THROWS_AS(configs.v_en(4), ConfigError);
    CHECK_THROWS_AS(NuclearConfigSet(kGrid, {2.0, 2.0}, 1), ConfigError);
    CHECK_THROWS_AS(NuclearConfigSet(kGrid, {2.0, 3.0, 4.0}, 1), ConfigError);
    CHECK_THROWS_AS(NuclearConfigSet(kGrid, {2.0}, 0), ConfigError);
}

TEST_CASE("coupled diagonals") {
    SUBCASE("single configuration") {
        NuclearConfigSet configs(kGrid, {3.0}, 1);
        const RegisterLayout l = configs.layout();
        const auto en = coupled_en_diagonal(configs, l);
        for (std::size_t k = 0; k < 64; ++k) {
            CHECK(en[k * 2] == configs.v_en(0)[k]);
            CHECK(en[k * 2 + 1] == kUnusedConfigPenalty);
        }
        CHECK(coupled_nn_diagonal(configs, l)[1] == kUnusedConfigPenalty);
    }
    SUBCASE("center point at d = 2") {
        NuclearConfigSet configs(kGrid, {2.0, 4.0, 6.0, 8.0}, 2);
        const auto en = coupled_en_diagonal(configs, configs.layout());
        CHECK(en[32 * 4 + 0] == doctest::Approx(-2.0 / std::sqrt(2.0)));
        const auto nn = coupled_nn_diagonal(configs, configs.layout());
        CHECK(nn[32 * 4 + 3] == doctest::Approx(1.0 / std::sqrt(65.0)));
    }
    SUBCASE("layout mismatch") {
        NuclearConfigSet configs(kGrid, {2.0, 4.0}, 1);
        CHECK_THROWS_AS(coupled_en_diagonal(configs, RegisterLayout(kGrid, 1, 1, 2)), ConfigError);
    }
}

TEST_CASE("transverse rotation") {
    CHECK(rotation_angle(0.1, 0.0, {0.1, 2}) == doctest::Approx(-0.02));
    CHECK(rotation_angle(0.1, 1.0, {0.1, 2}) == 0.0);
    CHECK_THROWS_AS(rotation_angle(0.1, 0.0, {-0.1, 2}), ConfigError);

    const RegisterLayout l(GridSpec(8.0, 3), 1, 1, 2);
    StateVector psi = test::random_state(l, 1);
    const StateVector ref = psi;
    transverse_rotation(psi, 0.0);
    CHECK(test::max_abs_diff(psi.amplitudes(), ref.amplitudes()) == 0.0);

    const StateVector plus = initial_product_state(test::random_state(l.with_nuclear_qubits(0), 2), 2);
    for (double theta : {-0.02, 0.5, 3.0}) {
        StateVector p = plus;
        transverse_rotation(p, theta);
        CHECK(fidelity(p, plus) == doctest::Approx(1.0));
    }

    // exp(-i theta/2 Sum X) from the dense transverse operator.
    StateVector dense = ref;
    transverse_rotation(psi, 0.3);
    const SpectrumSlice x = eig_hermitian(transverse_matrix(l));
    apply_spectral_propagator(x, 0.15, dense);
    CHECK(test::max_abs_diff(psi.amplitudes(), dense.amplitudes()) < 1e-12);
}

TEST_CASE("per-configuration Hamiltonians") {
    NuclearConfigSet configs(kGrid, {2.0, 4.0, 6.0, 8.0}, 2);
    const RegisterLayout el = configs.layout().with_nuclear_qubits(0);
    for (std::size_t j = 0; j < 4; ++j) {
        const SpectrumSlice with = eig_hermitian(hamiltonian_per_config(configs, j));
        const SpectrumSlice without = eig_hermitian(dense_hamiltonian(el, configs.v_en(j)));
        const double d = configs.bond_lengths()[j];
        for (Eigen::Index i = 0; i < 5; ++i)
            CHECK(with.eigenvalues[i] - without.eigenvalues[i] == doctest::Approx(1.0 / std::sqrt(d * d + 1.0)));
    }
}

TEST_CASE("optimum extraction") {
    const RegisterLayout l(GridSpec(8.0, 3), 1, 1, 2);
    const StateVector one = StateVector::basis(l, 4 * 5 + 1);
    const StructureResult r = extract_optimum(one);
    CHECK(r.best == 1);
    CHECK(r.weights == std::vector<double>{0.0, 1.0, 0.0, 0.0});
    CHECK_FALSE(r.is_tie());

    const StructureResult tie = extract_optimum(uniform_state(l));
    CHECK(tie.is_tie());
    CHECK(tie.tied.size() == 4);
    CHECK_THROWS_AS(extract_optimum(StateVector(RegisterLayout(GridSpec(8.0, 3), 1, 1, 0))), ConfigError);
}

TEST_CASE("sampling") {
    const std::vector<double> w{0.7, 0.2, 0.1, 0.0};
    const auto a = sample_configurations(w, 10000, 42);
    const auto b = sample_configurations(w, 10000, 42);
    CHECK(a == b);
    CHECK(std::accumulate(a.begin(), a.end(), std::size_t{0}) == 10000);
    CHECK(a[3] == 0);
    CHECK(std::abs(double(a[0]) / 10000.0 - 0.7) < 0.03);
    CHECK(sample_configurations(w, 0, 1) == std::vector<std::size_t>(4, 0));
    CHECK_THROWS_AS(sample_configurations(std::vector<double>{}, 10, 1), ConfigError);
}

TEST_CASE("structure search selects the shortest bond") {
    NuclearConfigSet configs(kGrid, {2.0, 4.0, 6.0, 8.0}, 2);
    const RegisterLayout l = configs.layout();
    AteRun run{l,
               SlotSchedules(Schedule::linear()),
               0.1,
               3000,
               {make_term(TermKind::ElectronNucleus, coupled_en_diagonal(configs, l)),
                make_term(TermKind::NucleusNucleus, coupled_nn_diagonal(configs, l))},
               0.1,
               {},
               StepMode::Trotter};
    const AteResult r = evolve_structopt(run, uniform_state(l));
    const StructureResult best = extract_optimum(r.state);
    CHECK(best.best == 0);
    CHECK(best.weights[0] > 0.9);
    CHECK(std::abs(r.state.norm() - 1.0) < 1e-10);
}
