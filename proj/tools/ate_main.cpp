#include "ate/config.hpp"
#include "ate/errors.hpp"
#include "ate/experiment.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
    std::string config;
    std::string out;
    int jobs = 1;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, Options& opts) {
    cmd->add_option("--config", opts.config, "JSON experiment config")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", opts.out, "output directory (overrides output_dir)");
    cmd->add_option("--jobs", opts.jobs, "concurrent sweep points")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opts.seed, "seed for measurement sampling");
}

ate::Problem load(const Options& opts, std::filesystem::path& out_dir) {
    ate::RunConfig config = ate::parse_config(opts.config);
    if (opts.seed)
        config.seed = *opts.seed;
    out_dir = opts.out.empty() ? std::filesystem::path(config.output_dir) : std::filesystem::path(opts.out);
    return ate::build_problem(config);
}

void print_summary(const ate::Summary& s) {
    auto show = [](const char* name, const auto& v) {
        if (v)
            std::cout << name << '=' << ate::format_number(static_cast<double>(*v)) << '\n';
    };
    show("f_max", s.f_max);
    show("c", s.c);
    show("final_delta", s.final_delta);
    show("J_star", s.j_star);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adiabatic time evolution on a real-space grid"};
    app.require_subcommand(1);

    Options opts;
    auto* spectrum = app.add_subcommand("spectrum", "indicator f(A) and the lowest two levels");
    add_common(spectrum, opts);
    auto* schedule = app.add_subcommand("schedule", "linear and optimal schedules");
    add_common(schedule, opts);
    auto* ate_cmd = app.add_subcommand("ate", "electronic time evolution");
    ate_cmd->require_subcommand(1);
    auto* ate_run = ate_cmd->add_subcommand("run", "sweep the step count N");
    add_common(ate_run, opts);
    auto* run = app.add_subcommand("run", "same as 'ate run'");
    add_common(run, opts);
    auto* structopt = app.add_subcommand("structopt", "structure search with a nuclear register");
    structopt->require_subcommand(1);
    auto* structopt_run = structopt->add_subcommand("run", "sweep the step count N");
    add_common(structopt_run, opts);
    auto* check = app.add_subcommand("check", "invariant suite on a small instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (check->parsed())
            return ate::run_invariant_checks(std::cout) ? 0 : kExitNumerical;

        std::filesystem::path out_dir;
        const ate::Problem problem = load(opts, out_dir);
        if (spectrum->parsed() || schedule->parsed()) {
            const ate::SpectrumData data = ate::compute_spectrum(problem);
            if (spectrum->parsed())
                ate::write_spectrum(problem, data, out_dir);
            else
                ate::write_schedule(problem, data, out_dir);
            ate::Summary s;
            s.f_max = data.f_max;
            s.c = data.c;
            ate::write_summary(problem, s, out_dir);
            print_summary(s);
        } else if (ate_run->parsed() || run->parsed()) {
            print_summary(ate::run_ate(problem, out_dir, opts.jobs));
        } else if (structopt_run->parsed()) {
            print_summary(ate::run_structopt(problem, out_dir, opts.jobs));
        }
        return 0;
    } catch (const ate::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ate::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
