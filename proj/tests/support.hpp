#pragma once

#include "ate/statevector.hpp"

#include <complex>
#include <random>
#include <vector>

namespace ate::test {

inline std::vector<Amplitude> random_amplitudes(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::vector<Amplitude> v(n);
    for (auto& a : v)
        a = {normal(rng), normal(rng)};
    return v;
}

inline StateVector random_state(const RegisterLayout& layout, std::uint64_t seed) {
    return StateVector(layout, random_amplitudes(layout.total_dimension(), seed), true);
}

inline double max_abs_diff(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

} // namespace ate::test
