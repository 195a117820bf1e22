#pragma once

#include "ate/driver.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ate {

enum class ProblemKind { Parabolic, H2Plus, Custom };
enum class ScheduleChoice { Linear, Optimal };

struct PairInteraction {
    double charge_product = 1.0;
    double softening = 1.0;
};

/// Validated experiment description. See README for the JSON schema.
struct RunConfig {
    ProblemKind problem = ProblemKind::Parabolic;
    double length = 10.0;
    unsigned qubits = 6;
    unsigned dimension = 1;
    double mass = 1.0;
    unsigned electrons = 1;
    double dt = 0.1;
    std::vector<std::size_t> steps;
    ScheduleChoice schedule = ScheduleChoice::Optimal;
    std::size_t indicator_points = 257;
    /// External harmonic frequencies (one per axis); empty for none.
    std::vector<double> omega;
    std::optional<PairInteraction> interaction;
    /// Harmonic initial potential V0 (one frequency per axis); empty for V0 = 0.
    std::vector<double> v0_omega;
    unsigned nuclear_qubits = 0;
    std::vector<double> bond_lengths;
    double transverse = 0.0;
    double softening = 1.0;
    StepMode step_mode = StepMode::Trotter;
    std::size_t dimension_cap = 4096;
    std::size_t shots = 0;
    std::uint64_t seed = 0;
    std::string output_dir = "out";

    /// Canonical JSON form; parse_config_json(to_json()) round-trips.
    nlohmann::json to_json() const;
    /// FNV-1a of the canonical JSON dump.
    std::uint64_t hash() const;
};

RunConfig default_config(ProblemKind problem);
/// Throws ConfigError naming the offending field; unknown keys are rejected.
RunConfig parse_config_json(const nlohmann::json& doc);
RunConfig parse_config_text(const std::string& text, const std::string& source = "<config>");
RunConfig parse_config(const std::filesystem::path& path);

std::string to_string(ProblemKind problem);

} // namespace ate
