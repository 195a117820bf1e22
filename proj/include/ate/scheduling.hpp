#pragma once

#include "ate/potentials.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace ate {

enum class ScheduleKind { Linear, Optimal, UserTable };

/// Monotone map from normalized time s in [0,1] to the interpolation value A,
/// tabulated and evaluated by piecewise-linear interpolation.
class Schedule {
  public:
    static Schedule linear();
    /// Validates s strictly increasing, A non-decreasing, (0,0) and (1,1) endpoints.
    static Schedule from_table(std::vector<double> s, std::vector<double> a,
                               ScheduleKind kind = ScheduleKind::UserTable,
                               std::optional<double> constant = std::nullopt);

    ScheduleKind kind() const noexcept { return kind_; }
    /// c for optimal schedules.
    std::optional<double> constant() const noexcept { return constant_; }
    std::span<const double> s_samples() const noexcept { return s_; }
    std::span<const double> a_samples() const noexcept { return a_; }

    /// A(s); s is clamped to [0, 1].
    double operator()(double s) const;
    /// Smallest s with A(s) = a.
    double inverse(double a) const;

  private:
    Schedule(ScheduleKind kind, std::vector<double> s, std::vector<double> a,
             std::optional<double> constant);

    ScheduleKind kind_;
    std::vector<double> s_;
    std::vector<double> a_;
    std::optional<double> constant_;
};

/// Solves dA/ds = c / f(A) by quadrature: s(A) = (1/c) int_0^A f, c = int_0^1 f
/// (trapezoidal on the sample grid), tabulated at the f-grid nodes.
Schedule optimal_schedule(std::span<const double> a_grid, std::span<const double> f);

/// max over the f-grid nodes of f(A) * dA/ds, with dA/ds from second-order
/// finite differences of the schedule at those nodes.
double adiabatic_bound(const Schedule& schedule, std::span<const double> a_grid,
                       std::span<const double> f);

/// A_1..A_6 assignment; every slot shares one schedule unless overridden.
class SlotSchedules {
  public:
    explicit SlotSchedules(Schedule shared);

    void assign(Slot slot, Schedule schedule);
    const Schedule& operator[](Slot slot) const;
    SlotValues at(double s) const;

  private:
    std::array<Schedule, kSlotCount> slots_;
};

} // namespace ate
