#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ablab/errors.hpp"
#include "ablab/report_io.hpp"
#include "ablab/scenario.hpp"
#include "ablab/studies.hpp"

namespace fs = std::filesystem;
using namespace ablab;

namespace {

struct Options {
    std::string config;
    std::string out_dir;
    std::string study;
    std::vector<std::string> overrides;
    double tolerance_scale = 1.0;
};

std::string default_out_dir() {
    if (const char* env = std::getenv("ABLAB_OUT_DIR")) return env;
    return "reports";
}

// --config accepts a file path or a bundled scenario name; names resolve
// against $ABLAB_SCENARIO_DIR, then ./scenarios.
std::string resolve_config(const std::string& arg) {
    if (fs::exists(arg)) return arg;
    if (arg.find('/') == std::string::npos) {
        std::vector<std::string> dirs;
        if (const char* env = std::getenv("ABLAB_SCENARIO_DIR")) dirs.push_back(env);
        dirs.push_back("scenarios");
        for (const auto& d : dirs) {
            const fs::path candidate = fs::path(d) / (arg + ".json");
            if (fs::exists(candidate)) return candidate.string();
        }
    }
    throw ConfigurationError("config '" + arg + "' not found (tried as a path and as a bundled scenario name)");
}

Scenario load(const Options& opt) {
    Scenario sc = load_scenario_file(resolve_config(opt.config), opt.overrides);
    if (!(opt.tolerance_scale > 0.0))
        throw ConfigurationError("--tolerance-scale must be > 0");
    sc.quadrature.rel_tol *= opt.tolerance_scale;
    sc.quadrature.abs_tol *= opt.tolerance_scale;
    return sc;
}

int run_and_write(const Options& opt, const std::vector<std::string>& studies) {
    Scenario sc;
    try {
        sc = load(opt);
    } catch (const SchemaError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigurationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    const std::string out_dir = opt.out_dir.empty() ? default_out_dir() : opt.out_dir;
    fs::create_directories(out_dir);
    const std::string canonical = scenario_to_json(sc);

    std::string failed;
    for (const auto& name : studies) {
        StudyOutput out;
        try {
            out = run_study(sc, name);
        } catch (const QuadratureError& e) {
            std::cerr << "convergence failure in study '" << name << "': " << e.what() << "\n";
            return 3;
        } catch (const ConfigurationError& e) {
            std::cerr << "config error (study '" << name << "'): " << e.what() << "\n";
            return 2;
        }
        const fs::path stem = fs::path(out_dir) / (sc.name + "." + name);
        write_csv(out, stem.string() + ".csv");
        write_json(out, stem.string() + ".json");
        write_meta(out, stem.string() + ".meta.json", canonical);
        std::cout << sc.name << "." << name << ": "
                  << (out.converged ? "converged" : "NOT CONVERGED") << ", "
                  << out.table.rows.size() << " rows -> " << stem.string() << ".{csv,json}\n";
        if (!out.converged && failed.empty()) failed = name;
    }
    if (!failed.empty()) {
        std::cerr << "convergence failure in study '" << failed << "'\n";
        return 3;
    }
    return 0;
}

int run_validate(const Options& opt) {
    try {
        const Scenario sc = load(opt);
        std::cout << "ok: scenario '" << sc.name << "', config digest "
                  << config_digest(scenario_to_json(sc)) << "\n";
        return 0;
    } catch (const SchemaError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigurationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ablab: vector-potential phases, field-overlap energies and a "
                 "truncated-mode radiation model around a shielded solenoid"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* cmd, bool with_out) {
        cmd->add_option("--config", opt.config,
                        "Scenario file path or bundled scenario name")
            ->required();
        if (with_out)
            cmd->add_option("--out", opt.out_dir,
                            "Output directory (default: $ABLAB_OUT_DIR or ./reports)");
        cmd->add_option("--override", opt.overrides,
                        "Dotted-path config override, key=value; repeatable")
            ->take_all();
        cmd->add_option("--tolerance-scale", opt.tolerance_scale,
                        "Multiplier applied to the quadrature tolerances");
    };

    CLI::App* cmd_phase = app.add_subcommand("phase", "Loop and open-path phases");
    CLI::App* cmd_gauge = app.add_subcommand("gauge-scan", "Phase shifts under gauge changes");
    CLI::App* cmd_energy = app.add_subcommand("energy", "Field-overlap energy comparisons");
    CLI::App* cmd_qed = app.add_subcommand("qed", "Truncated-mode radiation studies");
    CLI::App* cmd_report = app.add_subcommand("report", "All studies (or one via --study)");
    CLI::App* cmd_validate = app.add_subcommand("validate", "Check a config against the schema");
    for (CLI::App* c : {cmd_phase, cmd_gauge, cmd_energy, cmd_qed, cmd_report})
        add_common(c, true);
    add_common(cmd_validate, false);
    cmd_report->add_option("--study", opt.study, "Run a single study by name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (cmd_validate->parsed()) return run_validate(opt);
    if (cmd_phase->parsed()) return run_and_write(opt, {"phase"});
    if (cmd_gauge->parsed()) return run_and_write(opt, {"gauge"});
    if (cmd_energy->parsed()) return run_and_write(opt, {"energy"});
    if (cmd_qed->parsed())
        return run_and_write(opt, {"qed-convergence", "qed-exact", "entanglement"});

    // report
    if (!opt.study.empty()) {
        const auto& names = study_names();
        if (std::find(names.begin(), names.end(), opt.study) == names.end()) {
            std::cerr << "config error: unknown study '" << opt.study << "'\n";
            return 2;
        }
        return run_and_write(opt, {opt.study});
    }
    return run_and_write(opt, study_names());
}
