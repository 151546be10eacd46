#include "ablab/report_io.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace ablab {

using nlohmann::json;

std::string format_cell(const Cell& cell) {
    if (const double* d = std::get_if<double>(&cell)) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", *d);
        return buf;
    }
    if (const long long* i = std::get_if<long long>(&cell)) return std::to_string(*i);
    if (const bool* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
    return std::get<std::string>(cell);
}

namespace {

json cell_to_json(const Cell& cell) {
    if (const double* d = std::get_if<double>(&cell)) return *d;
    if (const long long* i = std::get_if<long long>(&cell)) return *i;
    if (const bool* b = std::get_if<bool>(&cell)) return *b;
    return std::get<std::string>(cell);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: no CRLF surprises
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    return quoted;
}

}  // namespace

void write_csv(const StudyOutput& out, const std::string& path) {
    std::ofstream f = open_out(path);
    for (std::size_t i = 0; i < out.table.columns.size(); ++i) {
        if (i) f << ",";
        f << csv_escape(out.table.columns[i]);
    }
    f << "\n";
    for (const auto& row : out.table.rows) {
        if (row.size() != out.table.columns.size())
            throw std::logic_error("report row width does not match the header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) f << ",";
            f << csv_escape(format_cell(row[i]));
        }
        f << "\n";
    }
}

std::string study_json_text(const StudyOutput& out) {
    json doc;
    doc["scenario"] = out.scenario;
    doc["study"] = out.study;
    doc["columns"] = out.table.columns;
    json rows = json::array();
    for (const auto& row : out.table.rows) {
        json r = json::array();
        for (const auto& cell : row) r.push_back(cell_to_json(cell));
        rows.push_back(r);
    }
    doc["rows"] = rows;
    json summary = json::object();
    for (const auto& [key, cell] : out.summary) summary[key] = cell_to_json(cell);
    doc["summary"] = summary;
    doc["converged"] = out.converged;
    return doc.dump(2) + "\n";
}

void write_json(const StudyOutput& out, const std::string& path) {
    std::ofstream f = open_out(path);
    f << study_json_text(out);
}

std::string config_digest(const std::string& config_json) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : config_json) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string tool_version() { return "ablab 0.1.0"; }

void write_meta(const StudyOutput& out, const std::string& path,
                const std::string& config_json) {
    const auto now = std::chrono::system_clock::now();
    const auto t = std::chrono::system_clock::to_time_t(now);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));

    json doc;
    doc["generated_at"] = stamp;
    doc["tool"] = tool_version();
    doc["scenario"] = out.scenario;
    doc["study"] = out.study;
    doc["config_digest"] = config_digest(config_json);
    std::ofstream f = open_out(path);
    f << doc.dump(2) << "\n";
}

}  // namespace ablab
