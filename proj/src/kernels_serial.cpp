#include "ate/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ate::kernels {

std::vector<Amplitude> kinetic_phases(std::size_t points, double momentum_step, double mass,
                                      double tau) {
    std::vector<Amplitude> phases(points);
    const auto half = static_cast<long long>(points / 2);
    for (std::size_t q = 0; q < points; ++q) {
        // FFT bin q carries centered momentum index q (q < N/2) or q - N.
        long long centered = static_cast<long long>(q);
        if (centered >= half)
            centered -= static_cast<long long>(points);
        const double p = static_cast<double>(centered) * momentum_step;
        phases[q] = std::polar(1.0, -p * p / (2.0 * mass) * tau);
    }
    return phases;
}

namespace serial {

void apply_phase(std::span<Amplitude> amps, std::span<const double> diag, double tau) {
    for (std::size_t x = 0; x < amps.size(); ++x)
        amps[x] *= std::polar(1.0, -diag[x] * tau);
}

void centered_transform(std::span<Amplitude> amps, const AxisGeometry& axis, const FftPlan& plan,
                        bool inverse) {
    const std::size_t n = axis.points;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Amplitude> line(n);
    for (std::size_t l = 0; l < axis.line_count(); ++l) {
        const std::size_t base = axis.line_start(l);
        for (std::size_t k = 0; k < n; ++k)
            line[k] = amps[base + k * axis.stride];
        // exp(-i p_s x_k) = exp(-2 pi i s k / N) (-1)^k
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

void momentum_phase(std::span<Amplitude> amps, const AxisGeometry& axis, const FftPlan& plan,
                    std::span<const Amplitude> phases) {
    const std::size_t n = axis.points;
    const double scale = 1.0 / static_cast<double>(n);
    std::vector<Amplitude> line(n);
    for (std::size_t l = 0; l < axis.line_count(); ++l) {
        const std::size_t base = axis.line_start(l);
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

void rx_all(std::span<Amplitude> amps, unsigned qubits, double theta) {
    const double c = std::cos(theta / 2.0);
    const Amplitude ms{0.0, -std::sin(theta / 2.0)};
    for (unsigned q = 0; q < qubits; ++q) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if (i & bit)
                continue;
            const Amplitude a0 = amps[i];
            const Amplitude a1 = amps[i | bit];
            amps[i] = c * a0 + ms * a1;
            amps[i | bit] = ms * a0 + c * a1;
        }
    }
}

std::vector<double> marginal_weights(std::span<const Amplitude> amps, std::size_t nuclear_dim) {
    std::vector<double> w(nuclear_dim, 0.0);
    for (std::size_t i = 0; i < amps.size(); ++i)
        w[i % nuclear_dim] += std::norm(amps[i]);
    return w;
}

Amplitude inner_product(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    Amplitude acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += std::conj(a[i]) * b[i];
    return acc;
}

double norm_squared(std::span<const Amplitude> amps) {
    double acc = 0.0;
    for (const auto& a : amps)
        acc += std::norm(a);
    return acc;
}

double max_probability(std::span<const Amplitude> amps) {
    double m = 0.0;
    for (const auto& a : amps) {
        const double p = std::norm(a);
        if (!std::isfinite(p))
            return std::numeric_limits<double>::infinity();
        m = std::max(m, p);
    }
    return m;
}

} // namespace serial
} // namespace ate::kernels
