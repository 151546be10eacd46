#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace ablab {

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct StudyOutput {
    std::string scenario;
    std::string study;
    Table table;
    std::map<std::string, Cell> summary;
    bool converged = true;  // false => the run is reported but flagged (exit code 3)
};

// Doubles print as %.17g so payload bytes are stable across runs.
std::string format_cell(const Cell& cell);

// Payload files carry no timestamps; reruns of the same build and config are
// byte-identical. write_meta emits the volatile sidecar (timestamp, version,
// config digest).
void write_csv(const StudyOutput& out, const std::string& path);
void write_json(const StudyOutput& out, const std::string& path);

// The exact bytes write_json emits.
std::string study_json_text(const StudyOutput& out);
void write_meta(const StudyOutput& out, const std::string& path,
                const std::string& config_json);

// FNV-1a over the canonical config text, hex encoded.
std::string config_digest(const std::string& config_json);

std::string tool_version();

}  // namespace ablab
