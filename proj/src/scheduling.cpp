#include "ate/scheduling.hpp"

#include "ate/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ate {

namespace {

double interpolate(std::span<const double> xs, std::span<const double> ys, double x) {
    if (x <= xs.front())
        return ys.front();
    if (x >= xs.back())
        return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const auto hi = static_cast<std::size_t>(it - xs.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
}

// Second-order derivative dy/dx on a non-uniform grid, one-sided at the ends.
std::vector<double> gradient(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    std::vector<double> d(n);
    if (n == 2) {
        d[0] = d[1] = (y[1] - y[0]) / (x[1] - x[0]);
        return d;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h1 = x[i] - x[i - 1];
        const double h2 = x[i + 1] - x[i];
        d[i] = (h1 * h1 * y[i + 1] - h2 * h2 * y[i - 1] + (h2 * h2 - h1 * h1) * y[i]) /
               (h1 * h2 * (h1 + h2));
    }
    {
        const double h1 = x[1] - x[0];
        const double h2 = x[2] - x[1];
        d[0] = -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * y[0] + (h1 + h2) / (h1 * h2) * y[1] -
               h1 / (h2 * (h1 + h2)) * y[2];
    }
    {
        const double h1 = x[n - 2] - x[n - 3];
        const double h2 = x[n - 1] - x[n - 2];
        d[n - 1] = h2 / (h1 * (h1 + h2)) * y[n - 3] - (h1 + h2) / (h1 * h2) * y[n - 2] +
                   (2.0 * h2 + h1) / (h2 * (h1 + h2)) * y[n - 1];
    }
    return d;
}

void check_f_table(std::span<const double> a_grid, std::span<const double> f) {
    if (a_grid.size() != f.size() || a_grid.size() < 2)
        throw ConfigError("indicator table needs matching A and f columns of length >= 2");
    if (a_grid.front() != 0.0 || a_grid.back() != 1.0)
        throw ConfigError("indicator table must span A in [0, 1]");
    for (std::size_t i = 1; i < a_grid.size(); ++i)
        if (!(a_grid[i] > a_grid[i - 1]))
            throw ConfigError("indicator A grid must be strictly increasing");
}

} // namespace

Schedule::Schedule(ScheduleKind kind, std::vector<double> s, std::vector<double> a,
                   std::optional<double> constant)
    : kind_(kind), s_(std::move(s)), a_(std::move(a)), constant_(constant) {}

Schedule Schedule::linear() { return Schedule(ScheduleKind::Linear, {0.0, 1.0}, {0.0, 1.0}, std::nullopt); }

Schedule Schedule::from_table(std::vector<double> s, std::vector<double> a, ScheduleKind kind,
                              std::optional<double> constant) {
    if (s.size() != a.size() || s.size() < 2)
        throw ConfigError("schedule table needs matching s and A columns of length >= 2");
    if (s.front() != 0.0 || s.back() != 1.0 || a.front() != 0.0 || a.back() != 1.0)
        throw ConfigError("schedule must satisfy A(0) = 0 and A(1) = 1");
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!(s[i] > s[i - 1]))
            throw ConfigError("schedule s samples must be strictly increasing");
        if (a[i] < a[i - 1])
            throw ConfigError("schedule must be non-decreasing");
    }
    return Schedule(kind, std::move(s), std::move(a), constant);
}

double Schedule::operator()(double s) const {
    if (kind_ == ScheduleKind::Linear)
        return std::clamp(s, 0.0, 1.0);
    return interpolate(s_, a_, s);
}

double Schedule::inverse(double a) const {
    if (kind_ == ScheduleKind::Linear)
        return std::clamp(a, 0.0, 1.0);
    if (a <= 0.0)
        return 0.0;
    if (a >= 1.0) {
        const auto it = std::lower_bound(a_.begin(), a_.end(), 1.0);
        return s_[static_cast<std::size_t>(it - a_.begin())];
    }
    const auto it = std::lower_bound(a_.begin(), a_.end(), a);
    const auto hi = static_cast<std::size_t>(it - a_.begin());
    const std::size_t lo = hi - 1;
    const double t = (a - a_[lo]) / (a_[hi] - a_[lo]);
    return s_[lo] + t * (s_[hi] - s_[lo]);
}

Schedule optimal_schedule(std::span<const double> a_grid, std::span<const double> f) {
    check_f_table(a_grid, f);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!(f[i] > 0.0) || !std::isfinite(f[i]))
            throw NumericalError("optimal schedule needs a positive finite indicator; f(" +
                                 std::to_string(a_grid[i]) + ") = " + std::to_string(f[i]));
    std::vector<double> s(a_grid.size(), 0.0);
    for (std::size_t i = 1; i < a_grid.size(); ++i)
        s[i] = s[i - 1] + 0.5 * (f[i] + f[i - 1]) * (a_grid[i] - a_grid[i - 1]);
    const double c = s.back();
    for (auto& v : s)
        v /= c;
    s.back() = 1.0;
    return Schedule::from_table(std::move(s), std::vector<double>(a_grid.begin(), a_grid.end()),
                                ScheduleKind::Optimal, c);
}

double adiabatic_bound(const Schedule& schedule, std::span<const double> a_grid,
                       std::span<const double> f) {
    check_f_table(a_grid, f);
    std::vector<double> s(a_grid.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = schedule.inverse(a_grid[i]);
    const std::vector<double> slope = gradient(s, a_grid);
    double best = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        best = std::max(best, f[i] * slope[i]);
    return best;
}

SlotSchedules::SlotSchedules(Schedule shared)
    : slots_{shared, shared, shared, shared, shared, shared} {}

void SlotSchedules::assign(Slot slot, Schedule schedule) {
    if (slot == Slot::Fixed)
        throw ConfigError("the fixed slot has no schedule");
    slots_[static_cast<std::size_t>(slot)] = std::move(schedule);
}

const Schedule& SlotSchedules::operator[](Slot slot) const {
    if (slot == Slot::Fixed)
        throw ConfigError("the fixed slot has no schedule");
    return slots_[static_cast<std::size_t>(slot)];
}

SlotValues SlotSchedules::at(double s) const {
    SlotValues v;
    for (std::size_t i = 0; i < kSlotCount; ++i)
        v.a[i] = slots_[i](s);
    return v;
}

} // namespace ate
