#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ate/errors.hpp"
#include "ate/grid.hpp"

#include <numbers>
#include <random>
#include <vector>

using namespace ate;

TEST_CASE("grid positions") {
    const GridSpec g(10.0, 6);
    CHECK(g.points() == 64);
    CHECK(g.spacing() == doctest::Approx(0.15625));
    CHECK(g.position_of(0) == 0.0);
    CHECK(g.position_of(32) == doctest::Approx(5.0));
    CHECK(g.position_of(63) == doctest::Approx(9.84375));
    CHECK_THROWS_AS(g.position_of(64), ConfigError);
    CHECK(g.positions().size() == 64);
}

TEST_CASE("grid momenta are centered") {
    const GridSpec g(10.0, 6);
    const double dp = 2.0 * std::numbers::pi / 10.0;
    CHECK(g.momentum_step() == doctest::Approx(dp));
    CHECK(g.momentum_of(32) == doctest::Approx(0.0));
    CHECK(g.momentum_of(0) == doctest::Approx(-20.1062).epsilon(1e-5));
    CHECK(g.momentum_of(63) == doctest::Approx(19.4779).epsilon(1e-5));
    CHECK(g.kinetic_energy(32) == 0.0);
    CHECK(g.kinetic_energy(36) == doctest::Approx(16.0 * dp * dp / 2.0));
    CHECK_THROWS_AS(g.momentum_of(64), ConfigError);
}

TEST_CASE("mass enters the kinetic energy") {
    const GridSpec heavy(10.0, 4, 2.0);
    const GridSpec light(10.0, 4, 1.0);
    CHECK(heavy.kinetic_energy(0) == doctest::Approx(light.kinetic_energy(0) / 2.0));
}

TEST_CASE("grid rejects bad parameters") {
    CHECK_THROWS_AS(GridSpec(0.0, 6), ConfigError);
    CHECK_THROWS_AS(GridSpec(-1.0, 6), ConfigError);
    CHECK_THROWS_AS(GridSpec(10.0, 0), ConfigError);
    CHECK_THROWS_AS(GridSpec(10.0, 25), ConfigError);
    CHECK_THROWS_AS(GridSpec(10.0, 6, 0.0), ConfigError);
}

TEST_CASE("layout dimensions") {
    const RegisterLayout l(GridSpec(10.0, 4), 2, 3, 2);
    CHECK(l.axis_count() == 6);
    CHECK(l.electronic_dimension() == (std::size_t{1} << 24));
    CHECK(l.nuclear_dimension() == 4);
    CHECK(l.total_qubits() == 26);
    CHECK_THROWS_AS(RegisterLayout(GridSpec(10.0, 4), 0, 1, 0), ConfigError);
    CHECK_THROWS_AS(RegisterLayout(GridSpec(10.0, 4), 1, 2, 0), ConfigError);
    CHECK_THROWS_AS(RegisterLayout(GridSpec(10.0, 8), 2, 3, 0), ConfigError);
}

TEST_CASE("flatten places the nuclear label last") {
    const RegisterLayout l(GridSpec(10.0, 6), 1, 1, 2);
    const std::vector<std::size_t> k{3};
    CHECK(l.flatten(k, 1) == 13);
    const std::vector<std::size_t> zero{0};
    CHECK(l.flatten(zero, 0) == 0);
    CHECK_THROWS_AS(l.flatten(k, 4), ConfigError);
    const std::vector<std::size_t> bad{64};
    CHECK_THROWS_AS(l.flatten(bad, 0), ConfigError);
}

TEST_CASE("strides follow electron-major axis order") {
    const RegisterLayout l(GridSpec(10.0, 3), 2, 3, 1);
    CHECK(l.axis_stride(1, 2) == 2);
    CHECK(l.axis_stride(1, 1) == 16);
    CHECK(l.axis_stride(0, 0) == (std::size_t{1} << 16));
}

TEST_CASE("unflatten inverts flatten") {
    const RegisterLayout l(GridSpec(10.0, 3), 2, 3, 2);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> cell(0, 7), label(0, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<std::size_t> k(6), back(6);
        for (auto& v : k)
            v = cell(rng);
        const std::size_t j = label(rng);
        const std::size_t idx = l.flatten(k, j);
        CHECK(l.unflatten(idx, back) == j);
        CHECK(back == k);
    }
}

TEST_CASE("with_nuclear_qubits keeps the electronic part") {
    const RegisterLayout l(GridSpec(15.0, 6), 1, 1, 2);
    const RegisterLayout e = l.with_nuclear_qubits(0);
    CHECK(e.total_dimension() == 64);
    CHECK(e.grid() == l.grid());
    CHECK_FALSE(e == l);
}
