#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#include "doctest.h"
#include "json.hpp"

#ifdef ABLAB_CLI_PATH

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "ablab_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

// `env` entries are shell-safe KEY=value prefixes for the child process.
RunResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const fs::path out_file = work_dir() / ("stdout" + std::to_string(counter) + ".txt");
    const fs::path err_file = work_dir() / ("stderr" + std::to_string(counter) + ".txt");
    ++counter;

    std::string cmd = env.empty() ? "" : env + " ";
    cmd += "'" ABLAB_CLI_PATH "' " + args + " >'" + out_file.string() + "' 2>'" +
           err_file.string() + "'";
    const int raw = std::system(cmd.c_str());

    RunResult res;
    res.exit_code = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
    res.out = slurp(out_file);
    res.err = slurp(err_file);
    return res;
}

std::string scenario_path(const std::string& name) {
    return std::string(ABLAB_SCENARIO_SRC) + "/" + name + ".json";
}

}  // namespace

TEST_CASE("validate accepts every bundled scenario") {
    for (const char* name : {"ab-closed-loop", "mv-energy", "gauge-open-path",
                             "qed-convergence", "qed-exact", "entanglement-sweep"}) {
        CAPTURE(name);
        const RunResult r = run_cli("validate --config '" + scenario_path(name) + "'");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("ok: scenario '" + std::string(name) + "'") != std::string::npos);
        CHECK(r.out.find("config digest") != std::string::npos);
    }
}

TEST_CASE("config problems exit 2 with a pointer on stderr") {
    SUBCASE("missing file") {
        const RunResult r = run_cli("validate --config /nowhere/missing.json");
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("config error:") != std::string::npos);
        CHECK(r.err.find("not found") != std::string::npos);
    }
    SUBCASE("invalid JSON") {
        const fs::path bad = work_dir() / "bad.json";
        std::ofstream(bad) << "{broken";
        const RunResult r = run_cli("validate --config '" + bad.string() + "'");
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("config error:") != std::string::npos);
        CHECK(r.err.find("invalid JSON") != std::string::npos);
    }
    SUBCASE("schema violation names the key") {
        const fs::path bad = work_dir() / "badkey.json";
        std::ofstream(bad) << R"({"scenario": "x", "solenoid": {"radius": -1}})";
        const RunResult r = run_cli("validate --config '" + bad.string() + "'");
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("/solenoid/radius") != std::string::npos);
    }
    SUBCASE("unknown study") {
        const RunResult r = run_cli("report --config '" + scenario_path("ab-closed-loop") +
                                    "' --study no-such-study");
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("unknown study 'no-such-study'") != std::string::npos);
    }
    SUBCASE("bad tolerance scale") {
        const RunResult r = run_cli("validate --config '" + scenario_path("ab-closed-loop") +
                                    "' --tolerance-scale 0");
        CHECK(r.exit_code == 2);
        CHECK(r.err.find("--tolerance-scale") != std::string::npos);
    }
}

TEST_CASE("phase run writes the report triple and exits 0") {
    const fs::path out_dir = work_dir() / "phase_out";
    const RunResult r = run_cli("phase --config '" + scenario_path("ab-closed-loop") +
                                "' --out '" + out_dir.string() + "'");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("ab-closed-loop.phase: converged") != std::string::npos);

    const fs::path stem = out_dir / "ab-closed-loop.phase";
    REQUIRE(fs::exists(stem.string() + ".csv"));
    REQUIRE(fs::exists(stem.string() + ".json"));
    REQUIRE(fs::exists(stem.string() + ".meta.json"));

    const json doc = json::parse(slurp(stem.string() + ".json"));
    CHECK(doc["scenario"] == "ab-closed-loop");
    CHECK(doc["study"] == "phase");
    CHECK(doc["converged"] == true);
    const json meta = json::parse(slurp(stem.string() + ".meta.json"));
    CHECK(meta.contains("generated_at"));
    CHECK(meta.contains("config_digest"));

    // reruns rewrite identical payload bytes
    const std::string first_json = slurp(stem.string() + ".json");
    const std::string first_csv = slurp(stem.string() + ".csv");
    const RunResult r2 = run_cli("phase --config '" + scenario_path("ab-closed-loop") +
                                 "' --out '" + out_dir.string() + "'");
    REQUIRE(r2.exit_code == 0);
    CHECK(slurp(stem.string() + ".json") == first_json);
    CHECK(slurp(stem.string() + ".csv") == first_csv);
}

TEST_CASE("overrides reach the physics") {
    const fs::path out_dir = work_dir() / "override_out";
    const RunResult base = run_cli("phase --config '" + scenario_path("ab-closed-loop") +
                                   "' --out '" + out_dir.string() + "'");
    REQUIRE(base.exit_code == 0);
    const json doc1 =
        json::parse(slurp(out_dir / "ab-closed-loop.phase.json"));
    const double phase1 = doc1["summary"]["phase_per_winding"].get<double>();

    const RunResult wide =
        run_cli("phase --config '" + scenario_path("ab-closed-loop") + "' --out '" +
                out_dir.string() + "' --override solenoid.radius=0.2 charge.position=0.7,0,0");
    REQUIRE(wide.exit_code == 0);
    const json doc2 =
        json::parse(slurp(out_dir / "ab-closed-loop.phase.json"));
    const double phase2 = doc2["summary"]["phase_per_winding"].get<double>();
    // flux scales with the cross-section: radius 0.1 -> 0.2 quadruples it
    CHECK(std::abs(phase2 - 4.0 * phase1) < 1e-9);
}

TEST_CASE("unreachable tolerances exit 3 and name the study") {
    const fs::path out_dir = work_dir() / "diverge_out";
    const RunResult r = run_cli("phase --config '" + scenario_path("ab-closed-loop") +
                                "' --out '" + out_dir.string() +
                                "' --tolerance-scale 1e-12");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("convergence failure in study 'phase'") != std::string::npos);
    // the report is still written, flagged as not converged
    const json doc = json::parse(slurp(out_dir / "ab-closed-loop.phase.json"));
    CHECK(doc["converged"] == false);
}

TEST_CASE("environment supplies scenario and output directories") {
    const fs::path out_dir = work_dir() / "env_out";
    const std::string env = "ABLAB_SCENARIO_DIR='" + std::string(ABLAB_SCENARIO_SRC) +
                            "' ABLAB_OUT_DIR='" + out_dir.string() + "'";
    const RunResult r = run_cli("energy --config mv-energy", env);
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(out_dir / "mv-energy.energy.csv"));
    CHECK(fs::exists(out_dir / "mv-energy.energy.json"));

    const json doc = json::parse(slurp(out_dir / "mv-energy.energy.json"));
    CHECK(doc["summary"]["sign_mismatch"] == true);
}

TEST_CASE("gauge scan via bundled name") {
    const fs::path out_dir = work_dir() / "gauge_out";
    const std::string env = "ABLAB_SCENARIO_DIR='" + std::string(ABLAB_SCENARIO_SRC) + "'";
    const RunResult r = run_cli("gauge-scan --config gauge-open-path --out '" +
                                    out_dir.string() + "'",
                                env);
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(slurp(out_dir / "gauge-open-path.gauge.json"));
    CHECK(doc["study"] == "gauge");
    CHECK(doc["converged"] == true);
}

#endif  // ABLAB_CLI_PATH
