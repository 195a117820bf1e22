#include "ate/config.hpp"

#include "ate/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace ate {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ConfigError("field '" + field + "': " + what);
}

void reject_unknown(const json& obj, const std::string& prefix, std::initializer_list<const char*> allowed) {
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [key, _] : obj.items())
        if (!keys.contains(key))
            fail(prefix + key, "unknown key");
}

double positive(const json& v, const std::string& field) {
    if (!v.is_number())
        fail(field, "expected a number");
    const double x = v.get<double>();
    if (!(x > 0.0) || !std::isfinite(x))
        fail(field, "must be positive and finite");
    return x;
}

double non_negative(const json& v, const std::string& field) {
    if (!v.is_number())
        fail(field, "expected a number");
    const double x = v.get<double>();
    if (!(x >= 0.0) || !std::isfinite(x))
        fail(field, "must be non-negative and finite");
    return x;
}

std::uint64_t unsigned_int(const json& v, const std::string& field) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        fail(field, "expected a non-negative integer");
    return v.get<std::uint64_t>();
}

std::vector<double> positive_list(const json& v, const std::string& field) {
    if (!v.is_array())
        fail(field, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(positive(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

std::string schedule_name(ScheduleChoice s) { return s == ScheduleChoice::Linear ? "linear" : "optimal"; }

} // namespace

std::string to_string(ProblemKind problem) {
    switch (problem) {
    case ProblemKind::Parabolic:
        return "parabolic";
    case ProblemKind::H2Plus:
        return "h2plus";
    case ProblemKind::Custom:
        return "custom";
    }
    return "unknown";
}

RunConfig default_config(ProblemKind problem) {
    RunConfig c;
    c.problem = problem;
    switch (problem) {
    case ProblemKind::Parabolic:
        c.length = 10.0;
        c.omega = {1.0};
        c.schedule = ScheduleChoice::Optimal;
        c.steps = {100, 200, 500, 1000, 2000, 5000, 10000, 20000};
        break;
    case ProblemKind::H2Plus:
        c.length = 15.0;
        c.nuclear_qubits = 2;
        c.bond_lengths = {2.0, 4.0, 6.0, 8.0};
        c.transverse = 0.1;
        c.schedule = ScheduleChoice::Linear;
        c.steps = {500, 1000, 2000, 3000, 5000, 10000};
        break;
    case ProblemKind::Custom:
        c.length = 10.0;
        c.qubits = 4;
        c.electrons = 2;
        c.omega = {1.0};
        c.v0_omega = {1.0};
        c.interaction = PairInteraction{};
        c.schedule = ScheduleChoice::Linear;
        c.steps = {100, 200, 400};
        break;
    }
    return c;
}

RunConfig parse_config_json(const json& doc) {
    if (!doc.is_object())
        throw ConfigError("config root must be a JSON object");
    reject_unknown(doc, "", {"problem", "grid", "electrons", "dt", "steps", "schedule", "indicator_points",
                             "omega", "interaction", "v0", "nuclear", "step_mode", "dimension_cap", "shots",
                             "seed", "output_dir"});
    if (!doc.contains("problem") || !doc["problem"].is_string())
        fail("problem", "required; one of parabolic, h2plus, custom");
    const std::string kind = doc["problem"].get<std::string>();
    ProblemKind problem;
    if (kind == "parabolic")
        problem = ProblemKind::Parabolic;
    else if (kind == "h2plus")
        problem = ProblemKind::H2Plus;
    else if (kind == "custom")
        problem = ProblemKind::Custom;
    else
        fail("problem", "unknown problem '" + kind + "'");

    RunConfig c = default_config(problem);

    if (doc.contains("grid")) {
        const json& g = doc["grid"];
        if (!g.is_object())
            fail("grid", "expected an object");
        reject_unknown(g, "grid.", {"length", "qubits", "dimension", "mass"});
        if (g.contains("length"))
            c.length = positive(g["length"], "grid.length");
        if (g.contains("qubits"))
            c.qubits = static_cast<unsigned>(unsigned_int(g["qubits"], "grid.qubits"));
        if (g.contains("dimension"))
            c.dimension = static_cast<unsigned>(unsigned_int(g["dimension"], "grid.dimension"));
        if (g.contains("mass"))
            c.mass = positive(g["mass"], "grid.mass");
    }
    if (c.qubits < 1 || c.qubits > 24)
        fail("grid.qubits", "must be in [1, 24]");
    if (c.dimension != 1 && c.dimension != 3)
        fail("grid.dimension", "must be 1 or 3");

    if (doc.contains("electrons"))
        c.electrons = static_cast<unsigned>(unsigned_int(doc["electrons"], "electrons"));
    if (c.electrons < 1)
        fail("electrons", "must be at least 1");
    if (doc.contains("dt"))
        c.dt = positive(doc["dt"], "dt");
    if (doc.contains("steps")) {
        const json& s = doc["steps"];
        if (!s.is_array() || s.empty())
            fail("steps", "expected a non-empty array of step counts");
        c.steps.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
            c.steps.push_back(unsigned_int(s[i], "steps[" + std::to_string(i) + "]"));
    }
    for (std::size_t i = 1; i < c.steps.size(); ++i)
        if (c.steps[i] <= c.steps[i - 1])
            fail("steps", "must be strictly ascending");
    if (doc.contains("schedule")) {
        const json& s = doc["schedule"];
        if (s == "linear")
            c.schedule = ScheduleChoice::Linear;
        else if (s == "optimal")
            c.schedule = ScheduleChoice::Optimal;
        else
            fail("schedule", "must be 'linear' or 'optimal'");
    }
    if (doc.contains("indicator_points")) {
        c.indicator_points = unsigned_int(doc["indicator_points"], "indicator_points");
        if (c.indicator_points < 3)
            fail("indicator_points", "must be at least 3");
    }
    if (doc.contains("omega"))
        c.omega = positive_list(doc["omega"], "omega");
    if (doc.contains("interaction")) {
        const json& it = doc["interaction"];
        if (it.is_null()) {
            c.interaction.reset();
        } else {
            if (!it.is_object())
                fail("interaction", "expected an object or null");
            reject_unknown(it, "interaction.", {"charge_product", "softening"});
            PairInteraction p;
            if (it.contains("charge_product")) {
                if (!it["charge_product"].is_number())
                    fail("interaction.charge_product", "expected a number");
                p.charge_product = it["charge_product"].get<double>();
            }
            if (it.contains("softening"))
                p.softening = positive(it["softening"], "interaction.softening");
            c.interaction = p;
        }
    }
    if (doc.contains("v0")) {
        const json& v = doc["v0"];
        if (v.is_null()) {
            c.v0_omega.clear();
        } else {
            if (!v.is_object())
                fail("v0", "expected an object or null");
            reject_unknown(v, "v0.", {"omega"});
            c.v0_omega = v.contains("omega") ? positive_list(v["omega"], "v0.omega") : std::vector<double>{};
        }
    }
    if (doc.contains("nuclear")) {
        const json& n = doc["nuclear"];
        if (!n.is_object())
            fail("nuclear", "expected an object");
        reject_unknown(n, "nuclear.", {"qubits", "bond_lengths", "transverse", "softening"});
        if (n.contains("qubits"))
            c.nuclear_qubits = static_cast<unsigned>(unsigned_int(n["qubits"], "nuclear.qubits"));
        if (n.contains("bond_lengths"))
            c.bond_lengths = positive_list(n["bond_lengths"], "nuclear.bond_lengths");
        if (n.contains("transverse"))
            c.transverse = non_negative(n["transverse"], "nuclear.transverse");
        if (n.contains("softening"))
            c.softening = positive(n["softening"], "nuclear.softening");
    }
    if (doc.contains("step_mode")) {
        const json& m = doc["step_mode"];
        if (m == "trotter")
            c.step_mode = StepMode::Trotter;
        else if (m == "exact")
            c.step_mode = StepMode::Exact;
        else
            fail("step_mode", "must be 'trotter' or 'exact'");
    }
    if (doc.contains("dimension_cap"))
        c.dimension_cap = unsigned_int(doc["dimension_cap"], "dimension_cap");
    if (doc.contains("shots"))
        c.shots = unsigned_int(doc["shots"], "shots");
    if (doc.contains("seed"))
        c.seed = unsigned_int(doc["seed"], "seed");
    if (doc.contains("output_dir")) {
        if (!doc["output_dir"].is_string())
            fail("output_dir", "expected a string");
        c.output_dir = doc["output_dir"].get<std::string>();
    }

    // Cross-field checks.
    if (!c.omega.empty() && c.omega.size() != c.dimension)
        fail("omega", "needs one frequency per spatial axis");
    if (!c.v0_omega.empty() && c.v0_omega.size() != c.dimension)
        fail("v0.omega", "needs one frequency per spatial axis");
    switch (c.problem) {
    case ProblemKind::Parabolic:
        if (c.omega.empty())
            fail("omega", "parabolic problem needs a frequency");
        if (c.nuclear_qubits != 0)
            fail("nuclear.qubits", "parabolic problem has no nuclear register");
        break;
    case ProblemKind::H2Plus:
        if (c.electrons != 1 || c.dimension != 1)
            fail("electrons", "h2plus is a single electron in one dimension");
        if (c.nuclear_qubits < 1)
            fail("nuclear.qubits", "h2plus needs a nuclear register");
        if (c.bond_lengths.empty() || c.bond_lengths.size() > (std::size_t{1} << c.nuclear_qubits))
            fail("nuclear.bond_lengths", "needs between 1 and 2^qubits entries");
        for (double d : c.bond_lengths)
            if (!(d < c.length))
                fail("nuclear.bond_lengths", "bond length must be shorter than the cell");
        break;
    case ProblemKind::Custom:
        if (c.nuclear_qubits != 0)
            fail("nuclear.qubits", "custom problems have no nuclear register");
        if (c.electrons > 1 && c.v0_omega.empty())
            fail("v0", "several electrons need a harmonic V0 for the antisymmetric initial state");
        break;
    }
    return c;
}

RunConfig parse_config_text(const std::string& text, const std::string& source) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(source + ": " + e.what());
    }
    try {
        return parse_config_json(doc);
    } catch (const ConfigError& e) {
        throw ConfigError(source + ": " + e.what());
    }
}

RunConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path.string());
}

json RunConfig::to_json() const {
    json j;
    j["problem"] = to_string(problem);
    j["grid"] = {{"length", length}, {"qubits", qubits}, {"dimension", dimension}, {"mass", mass}};
    j["electrons"] = electrons;
    j["dt"] = dt;
    j["steps"] = steps;
    j["schedule"] = schedule_name(schedule);
    j["indicator_points"] = indicator_points;
    j["omega"] = omega;
    j["interaction"] = interaction ? json{{"charge_product", interaction->charge_product},
                                          {"softening", interaction->softening}}
                                   : json(nullptr);
    j["v0"] = v0_omega.empty() ? json(nullptr) : json{{"omega", v0_omega}};
    j["nuclear"] = {{"qubits", nuclear_qubits},
                    {"bond_lengths", bond_lengths},
                    {"transverse", transverse},
                    {"softening", softening}};
    j["step_mode"] = step_mode == StepMode::Exact ? "exact" : "trotter";
    j["dimension_cap"] = dimension_cap;
    j["shots"] = shots;
    j["seed"] = seed;
    j["output_dir"] = output_dir;
    return j;
}

std::uint64_t RunConfig::hash() const {
    json canonical = to_json();
    canonical.erase("output_dir");
    const std::string text = canonical.dump();
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace ate
