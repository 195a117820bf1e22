#include "ate/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace ate::kernels::omp {

namespace {
// Below this many amplitudes the fork/join overhead dominates.
constexpr std::int64_t kParallelThreshold = 1 << 12;

std::int64_t ssize(std::size_t n) { return static_cast<std::int64_t>(n); }
} // namespace

void apply_phase(std::span<Amplitude> amps, std::span<const double> diag, double tau) {
    const std::int64_t n = ssize(amps.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (std::int64_t x = 0; x < n; ++x)
        amps[x] *= std::polar(1.0, -diag[x] * tau);
}

void centered_transform(std::span<Amplitude> amps, const AxisGeometry& axis, const FftPlan& plan,
                        bool inverse) {
    const std::size_t n = axis.points;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const std::int64_t lines = ssize(axis.line_count());
#pragma omp parallel if (ssize(axis.total) >= kParallelThreshold)
    {
        std::vector<Amplitude> line(n);
#pragma omp for schedule(static)
        for (std::int64_t l = 0; l < lines; ++l) {
            const std::size_t base = axis.line_start(static_cast<std::size_t>(l));
            for (std::size_t k = 0; k < n; ++k)
                line[k] = amps[base + k * axis.stride];
            if (inverse) {
                plan.backward(line);
            } else {
                for (std::size_t k = 1; k < n; k += 2)
                    line[k] = -line[k];
                plan.forward(line);
            }
            for (std::size_t k = 0; k < n; ++k) {
                Amplitude v = line[k] * scale;
                if (inverse && (k & 1))
                    v = -v;
                amps[base + k * axis.stride] = v;
            }
        }
    }
}

void momentum_phase(std::span<Amplitude> amps, const AxisGeometry& axis, const FftPlan& plan,
                    std::span<const Amplitude> phases) {
    const std::size_t n = axis.points;
    const double scale = 1.0 / static_cast<double>(n);
    const std::int64_t lines = ssize(axis.line_count());
#pragma omp parallel if (ssize(axis.total) >= kParallelThreshold)
    {
        std::vector<Amplitude> line(n);
#pragma omp for schedule(static)
        for (std::int64_t l = 0; l < lines; ++l) {
            const std::size_t base = axis.line_start(static_cast<std::size_t>(l));
            for (std::size_t k = 0; k < n; ++k)
                line[k] = amps[base + k * axis.stride];
            plan.forward(line);
            for (std::size_t q = 0; q < n; ++q)
                line[q] *= phases[q] * scale;
            plan.backward(line);
            for (std::size_t k = 0; k < n; ++k)
                amps[base + k * axis.stride] = line[k];
        }
    }
}

void rx_all(std::span<Amplitude> amps, unsigned qubits, double theta) {
    const double c = std::cos(theta / 2.0);
    const Amplitude ms{0.0, -std::sin(theta / 2.0)};
    const std::int64_t pairs = ssize(amps.size() / 2);
    for (unsigned q = 0; q < qubits; ++q) {
        const std::size_t bit = std::size_t{1} << q;
        const std::size_t low_mask = bit - 1;
#pragma omp parallel for schedule(static) if (2 * pairs >= kParallelThreshold)
        for (std::int64_t p = 0; p < pairs; ++p) {
            // Insert a zero at bit position q.
            const auto up = static_cast<std::size_t>(p);
            const std::size_t i = ((up & ~low_mask) << 1) | (up & low_mask);
            const Amplitude a0 = amps[i];
            const Amplitude a1 = amps[i | bit];
            amps[i] = c * a0 + ms * a1;
            amps[i | bit] = ms * a0 + c * a1;
        }
    }
}

std::vector<double> marginal_weights(std::span<const Amplitude> amps, std::size_t nuclear_dim) {
    std::vector<double> w(nuclear_dim, 0.0);
    const std::int64_t blocks = ssize(amps.size() / nuclear_dim);
    double* wp = w.data();
    const auto nd = ssize(nuclear_dim);
#pragma omp parallel for schedule(static) reduction(+ : wp[:nd]) if (ssize(amps.size()) >= kParallelThreshold)
    for (std::int64_t b = 0; b < blocks; ++b) {
        const std::size_t base = static_cast<std::size_t>(b) * nuclear_dim;
        for (std::size_t j = 0; j < nuclear_dim; ++j)
            wp[j] += std::norm(amps[base + j]);
    }
    return w;
}

Amplitude inner_product(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    double re = 0.0;
    double im = 0.0;
    const std::int64_t n = ssize(a.size());
#pragma omp parallel for schedule(static) reduction(+ : re, im) if (n >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
        const Amplitude t = std::conj(a[i]) * b[i];
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

double norm_squared(std::span<const Amplitude> amps) {
    double acc = 0.0;
    const std::int64_t n = ssize(amps.size());
#pragma omp parallel for schedule(static) reduction(+ : acc) if (n >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i)
        acc += std::norm(amps[i]);
    return acc;
}

double max_probability(std::span<const Amplitude> amps) {
    double m = 0.0;
    const std::int64_t n = ssize(amps.size());
#pragma omp parallel for schedule(static) reduction(max : m) if (n >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
        double p = std::norm(amps[i]);
        if (!std::isfinite(p))
            p = std::numeric_limits<double>::infinity();
        m = std::max(m, p);
    }
    return m;
}

} // namespace ate::kernels::omp
